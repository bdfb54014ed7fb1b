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

#include "leavitt/graph.hpp"

#include <algorithm>
#include <queue>

#include "json.hpp"
#include "leavitt/error.hpp"

namespace leavitt {

  using nlohmann::json;

  Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
      : _vertices(std::move(vertices)),
        _edges(std::move(edges)),
        _out(_vertices.size()),
        _in(_vertices.size()) {
    for (VertexIndex v = 0; v < _vertices.size(); ++v) {
      if (!_vertex_lookup.emplace(_vertices[v], v).second) {
        throw_input("duplicate vertex identifier '" + _vertices[v] + "'");
      }
    }
    for (EdgeIndex e = 0; e < _edges.size(); ++e) {
      Edge const& ed = _edges[e];
      if (ed.source >= _vertices.size() || ed.range >= _vertices.size()) {
        throw_input("edge '" + ed.id + "' references a vertex out of range");
      }
      if (!_edge_lookup.emplace(ed.id, e).second) {
        throw_input("duplicate edge identifier '" + ed.id + "'");
      }
      if (_vertex_lookup.count(ed.id) != 0) {
        throw_input("identifier '" + ed.id + "' names both a vertex and an edge");
      }
      _out[ed.source].push_back(e);
      _in[ed.range].push_back(e);
    }
  }

  std::optional<VertexIndex> Graph::find_vertex(std::string_view id) const {
    auto it = _vertex_lookup.find(std::string(id));
    if (it == _vertex_lookup.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<EdgeIndex> Graph::find_edge(std::string_view id) const {
    auto it = _edge_lookup.find(std::string(id));
    if (it == _edge_lookup.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  bool Graph::has_sinks() const {
    return std::any_of(
        _out.begin(), _out.end(), [](auto const& x) { return x.empty(); });
  }

  bool Graph::has_sources() const {
    return std::any_of(
        _in.begin(), _in.end(), [](auto const& x) { return x.empty(); });
  }

  bool Graph::operator==(Graph const& other) const {
    if (_vertices != other._vertices || _edges.size() != other._edges.size()) {
      return false;
    }
    for (std::size_t e = 0; e < _edges.size(); ++e) {
      Edge const& a = _edges[e];
      Edge const& b = other._edges[e];
      if (a.id != b.id || a.source != b.source || a.range != b.range) {
        return false;
      }
    }
    return true;
  }

  Graph parse_graph(std::string_view json_text) {
    json doc;
    try {
      doc = json::parse(json_text);
    } catch (json::parse_error const& e) {
      throw_input(std::string("malformed graph document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")
        || !doc["vertices"].is_array() || !doc["edges"].is_array()) {
      throw_input("graph document needs array fields 'vertices' and 'edges'");
    }
    std::vector<std::string> vertices;
    for (auto const& v : doc["vertices"]) {
      if (!v.is_string()) {
        throw_input("vertex identifiers must be strings");
      }
      vertices.push_back(v.get<std::string>());
    }
    std::unordered_map<std::string, VertexIndex> lookup;
    for (VertexIndex i = 0; i < vertices.size(); ++i) {
      lookup.emplace(vertices[i], i);
    }
    std::vector<Edge> edges;
    for (auto const& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_string()
          || !e[1].is_string() || !e[2].is_string()) {
        throw_input("each edge must be [edge-id, source-id, range-id]");
      }
      auto const id = e[0].get<std::string>();
      auto const s  = lookup.find(e[1].get<std::string>());
      auto const r  = lookup.find(e[2].get<std::string>());
      if (s == lookup.end() || r == lookup.end()) {
        throw_input("edge '" + id + "' has a dangling vertex reference");
      }
      edges.push_back({id, s->second, r->second});
    }
    return Graph(std::move(vertices), std::move(edges));
  }

  std::string graph_to_json(Graph const& g) {
    json doc;
    doc["vertices"] = g.vertex_ids();
    doc["edges"]    = json::array();
    for (auto const& e : g.edges()) {
      doc["edges"].push_back(
          {e.id, g.vertex_id(e.source), g.vertex_id(e.range)});
    }
    return doc.dump();
  }

  IntMatrix adjacency(Graph const& g, bool transposed) {
    IntMatrix m(g.num_vertices(), g.num_vertices());
    for (auto const& e : g.edges()) {
      if (transposed) {
        m(e.range, e.source) += 1;
      } else {
        m(e.source, e.range) += 1;
      }
    }
    return m;
  }

  std::strong_ordering Path::operator<=>(Path const& other) const {
    if (edges.empty() && other.edges.empty()) {
      return source <=> other.source;
    }
    return std::lexicographical_compare_three_way(
        edges.begin(), edges.end(), other.edges.begin(), other.edges.end());
  }

  Path vertex_path(VertexIndex v) {
    return Path{v, {}};
  }

  Path edge_path(Graph const& g, EdgeIndex e) {
    return Path{g.edge(e).source, {e}};
  }

  Path concat(Graph const& g, Path const& a, Path const& b) {
    if (a.range(g) != b.source) {
      throw_input("paths do not compose");
    }
    Path out = a;
    out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
    return out;
  }

  bool is_prefix(Path const& prefix, Path const& p) {
    return prefix.source == p.source && prefix.edges.size() <= p.edges.size()
           && std::equal(prefix.edges.begin(), prefix.edges.end(), p.edges.begin());
  }

  std::string path_to_string(Graph const& g, Path const& p) {
    if (p.edges.empty()) {
      return g.vertex_id(p.source);
    }
    std::string out;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      out += (i == 0 ? "" : " ") + g.edge(p.edges[i]).id;
    }
    return out;
  }

  namespace {
    void extend(Graph const&               g,
                Path&                      cur,
                std::size_t                d,
                std::optional<VertexIndex> to,
                std::vector<Path>&         out) {
      VertexIndex const r = cur.range(g);
      if (cur.length() == d) {
        if (!to || *to == r) {
          out.push_back(cur);
        }
        return;
      }
      for (EdgeIndex e : g.out_edges(r)) {
        cur.edges.push_back(e);
        extend(g, cur, d, to, out);
        cur.edges.pop_back();
      }
    }
  }  // namespace

  std::vector<Path> enumerate_paths(Graph const&               g,
                                    std::size_t                d,
                                    std::optional<VertexIndex> from,
                                    std::optional<VertexIndex> to) {
    std::vector<Path> out;
    if (d == 0) {
      for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
        if ((!from || *from == v) && (!to || *to == v)) {
          out.push_back(vertex_path(v));
        }
      }
      return out;
    }
    // first edges in index order keeps the output lexicographic
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
      if (from && g.edge(e).source != *from) {
        continue;
      }
      Path cur = edge_path(g, e);
      extend(g, cur, d, to, out);
    }
    return out;
  }

  std::vector<Path> q_paths(Graph const& g, std::size_t n) {
    std::vector<Path> out;
    for (std::size_t d = 0; d <= n; ++d) {
      for (auto& p : enumerate_paths(g, d)) {
        if (d == n || g.is_sink(p.range(g))) {
          out.push_back(std::move(p));
        }
      }
    }
    std::stable_sort(out.begin(), out.end(), [&g](Path const& a, Path const& b) {
      VertexIndex const ra = a.range(g), rb = b.range(g);
      if (ra != rb) {
        return ra < rb;
      }
      if (a.length() != b.length()) {
        return a.length() < b.length();
      }
      return a < b;
    });
    return out;
  }

  VertexClassification classify_vertices(Graph const& g) {
    VertexClassification c;
    for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
      if (g.is_source(v)) {
        c.sources.push_back(v);
      }
      if (g.is_sink(v)) {
        c.sinks.push_back(v);
      }
    }
    c.essential = c.sources.empty() && c.sinks.empty();
    return c;
  }

  bool is_irreducible(IntMatrix const& a) {
    std::size_t const n = a.rows();
    if (n == 0 || !a.is_square()) {
      return false;
    }
    auto reach_all = [&](bool forward) {
      std::vector<char>        seen(n, 0);
      std::queue<std::size_t>  todo;
      todo.push(0);
      seen[0] = 1;
      while (!todo.empty()) {
        std::size_t const i = todo.front();
        todo.pop();
        for (std::size_t j = 0; j < n; ++j) {
          Integer const& x = forward ? a(j, i) : a(i, j);
          if (sgn(x) != 0 && !seen[j]) {
            seen[j] = 1;
            todo.push(j);
          }
        }
      }
      return std::all_of(seen.begin(), seen.end(), [](char s) { return s; });
    };
    return !a.is_zero() && reach_all(true) && reach_all(false);
  }

  std::size_t PathHash::operator()(Path const& p) const noexcept {
    std::size_t h = std::hash<std::uint32_t>()(p.source) ^ (p.edges.size() << 1);
    for (EdgeIndex e : p.edges) {
      h ^= std::hash<std::uint32_t>()(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

}  // namespace leavitt
