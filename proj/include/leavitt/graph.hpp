/*
 *   Copyright 2026 The leavitt-tower authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LEAVITT_GRAPH_HPP_
#define LEAVITT_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "leavitt/intmatrix.hpp"

namespace leavitt {

  using VertexIndex = std::uint32_t;
  using EdgeIndex   = std::uint32_t;

  struct Edge {
    std::string id;
    VertexIndex source;
    VertexIndex range;
  };

  // Finite directed graph with multi-edges and loops. Vertices and edges are
  // indexed in input order; all orderings below use those indices.
  class Graph {
   public:
    Graph() = default;
    Graph(std::vector<std::string> vertices, std::vector<Edge> edges);

    std::size_t num_vertices() const noexcept {
      return _vertices.size();
    }
    std::size_t num_edges() const noexcept {
      return _edges.size();
    }
    std::string const& vertex_id(VertexIndex v) const {
      return _vertices.at(v);
    }
    Edge const& edge(EdgeIndex e) const {
      return _edges.at(e);
    }
    std::vector<std::string> const& vertex_ids() const noexcept {
      return _vertices;
    }
    std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }

    std::optional<VertexIndex> find_vertex(std::string_view id) const;
    std::optional<EdgeIndex>   find_edge(std::string_view id) const;

    // ascending edge index
    std::vector<EdgeIndex> const& out_edges(VertexIndex v) const {
      return _out.at(v);
    }
    std::vector<EdgeIndex> const& in_edges(VertexIndex v) const {
      return _in.at(v);
    }

    bool is_sink(VertexIndex v) const {
      return _out.at(v).empty();
    }
    bool is_source(VertexIndex v) const {
      return _in.at(v).empty();
    }
    bool has_sinks() const;
    bool has_sources() const;

    bool operator==(Graph const& other) const;

   private:
    std::vector<std::string>                     _vertices;
    std::vector<Edge>                            _edges;
    std::vector<std::vector<EdgeIndex>>          _out;
    std::vector<std::vector<EdgeIndex>>          _in;
    std::unordered_map<std::string, VertexIndex> _vertex_lookup;
    std::unordered_map<std::string, EdgeIndex>   _edge_lookup;
  };

  Graph       parse_graph(std::string_view json_text);
  std::string graph_to_json(Graph const& g);

  // transposed == false: entry (i, k) counts edges v_i -> v_k.
  IntMatrix adjacency(Graph const& g, bool transposed);

  // Finite path. A path of length 0 is the vertex `source`.
  struct Path {
    VertexIndex            source = 0;
    std::vector<EdgeIndex> edges;

    std::size_t length() const noexcept {
      return edges.size();
    }
    VertexIndex range(Graph const& g) const {
      return edges.empty() ? source : g.edge(edges.back()).range;
    }

    // Lexicographic by edge indices; vertices precede longer paths.
    std::strong_ordering operator<=>(Path const& other) const;
    bool                 operator==(Path const& other) const = default;
  };

  Path        vertex_path(VertexIndex v);
  Path        edge_path(Graph const& g, EdgeIndex e);
  Path        concat(Graph const& g, Path const& a, Path const& b);
  bool        is_prefix(Path const& prefix, Path const& p);
  std::string path_to_string(Graph const& g, Path const& p);

  // Paths of length d, lexicographic. `from` and `to` filter the endpoints.
  std::vector<Path> enumerate_paths(Graph const&               g,
                                    std::size_t                d,
                                    std::optional<VertexIndex> from = {},
                                    std::optional<VertexIndex> to   = {});

  // Paths of length n together with shorter paths ending at a sink.
  std::vector<Path> q_paths(Graph const& g, std::size_t n);

  struct VertexClassification {
    std::vector<VertexIndex> sources;
    std::vector<VertexIndex> sinks;
    bool                     essential = false;
  };

  VertexClassification classify_vertices(Graph const& g);

  // Strongly connected with at least one edge.
  bool is_irreducible(IntMatrix const& a);

  struct PathHash {
    std::size_t operator()(Path const& p) const noexcept;
  };

}  // namespace leavitt

#endif  // LEAVITT_GRAPH_HPP_
