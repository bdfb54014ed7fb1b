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

#include "leavitt/moves.hpp"

#include <algorithm>

#include "json.hpp"
#include "leavitt/error.hpp"
#include "leavitt/shift_equiv.hpp"

namespace leavitt {

  namespace {
    using Parts = std::vector<std::vector<EdgeIndex>>;

    // Fills in default single parts and checks the partition property.
    std::vector<Parts> normalize(Graph const& g, SplitSpec const& spec, bool out) {
      std::vector<Parts> parts(g.num_vertices());
      if (!spec.parts.empty() && spec.parts.size() != g.num_vertices()) {
        throw_input("split spec has " + std::to_string(spec.parts.size())
                    + " entries for a graph with "
                    + std::to_string(g.num_vertices()) + " vertices");
      }
      for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
        auto const& edges = out ? g.out_edges(v) : g.in_edges(v);
        Parts p = spec.parts.empty() ? Parts{} : spec.parts[v];
        if (p.empty() && !edges.empty()) {
          p.push_back(edges);
        }
        std::vector<EdgeIndex> seen;
        for (auto const& part : p) {
          if (part.empty()) {
            throw_input("empty part at vertex '" + g.vertex_id(v) + "'");
          }
          seen.insert(seen.end(), part.begin(), part.end());
        }
        std::sort(seen.begin(), seen.end());
        if (seen != edges) {
          throw_input(std::string("parts at vertex '") + g.vertex_id(v)
                      + "' do not partition its "
                      + (out ? "outgoing" : "incoming") + " edges");
        }
        parts[v] = std::move(p);
      }
      return parts;
    }

    std::string copy_name(std::string const& base, std::size_t idx, std::size_t count) {
      return count < 2 ? base : base + "^" + std::to_string(idx + 1);
    }

    struct Layout {
      std::vector<std::size_t>  first;  // first new index of each old vertex
      std::vector<std::size_t>  count;  // number of copies
      std::vector<std::string>  names;
      std::vector<VertexIndex>  parent;
    };

    Layout layout(Graph const& g, std::vector<Parts> const& parts) {
      Layout lay;
      for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
        std::size_t const c = std::max<std::size_t>(1, parts[v].size());
        lay.first.push_back(lay.names.size());
        lay.count.push_back(c);
        for (std::size_t a = 0; a < c; ++a) {
          lay.names.push_back(copy_name(g.vertex_id(v), a, c));
          lay.parent.push_back(v);
        }
      }
      return lay;
    }

    std::vector<std::size_t> part_index(Graph const& g, std::vector<Parts> const& parts) {
      std::vector<std::size_t> idx(g.num_edges(), 0);
      for (auto const& p : parts) {
        for (std::size_t a = 0; a < p.size(); ++a) {
          for (EdgeIndex e : p[a]) {
            idx[e] = a;
          }
        }
      }
      return idx;
    }

    MoveResult checked(Graph const& from, Graph to, IntMatrix s, IntMatrix r) {
      SeReport const rep = verify_shift_equivalence(
          adjacency(from, true), adjacency(to, true), s, r, 1);
      if (!rep.all_pass()) {
        throw_verification("move produced an invalid elementary pair:\n"
                           + rep.summary());
      }
      return MoveResult{std::move(to), std::move(s), std::move(r)};
    }
  }  // namespace

  MoveResult out_split(Graph const& g, SplitSpec const& spec) {
    auto const   parts = normalize(g, spec, true);
    Layout const lay   = layout(g, parts);
    auto const   part  = part_index(g, parts);

    std::vector<Edge> edges;
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
      Edge const& ed = g.edge(e);
      VertexIndex src = lay.first[ed.source] + part[e];
      for (std::size_t b = 0; b < lay.count[ed.range]; ++b) {
        edges.push_back({copy_name(ed.id, b, lay.count[ed.range]),
                         src,
                         static_cast<VertexIndex>(lay.first[ed.range] + b)});
      }
    }
    Graph split(lay.names, std::move(edges));

    std::size_t const n = g.num_vertices(), m = split.num_vertices();
    IntMatrix         s(m, n), r(n, m);
    for (std::size_t x = 0; x < m; ++x) {
      s(x, lay.parent[x]) = 1;
    }
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
      Edge const& ed = g.edge(e);
      r(ed.range, lay.first[ed.source] + part[e]) += 1;
    }
    return checked(g, std::move(split), std::move(s), std::move(r));
  }

  MoveResult in_split(Graph const& g, SplitSpec const& spec) {
    auto const   parts = normalize(g, spec, false);
    Layout const lay   = layout(g, parts);
    auto const   part  = part_index(g, parts);

    std::vector<Edge> edges;
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
      Edge const& ed  = g.edge(e);
      VertexIndex rng = lay.first[ed.range] + part[e];
      for (std::size_t b = 0; b < lay.count[ed.source]; ++b) {
        edges.push_back({copy_name(ed.id, b, lay.count[ed.source]),
                         static_cast<VertexIndex>(lay.first[ed.source] + b),
                         rng});
      }
    }
    Graph split(lay.names, std::move(edges));

    std::size_t const n = g.num_vertices(), m = split.num_vertices();
    IntMatrix         s(m, n), r(n, m);
    for (std::size_t x = 0; x < m; ++x) {
      r(lay.parent[x], x) = 1;
    }
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
      Edge const& ed = g.edge(e);
      s(lay.first[ed.range] + part[e], ed.source) += 1;
    }
    return checked(g, std::move(split), std::move(s), std::move(r));
  }

  std::optional<MoveResult> amalgamate(Graph const& g, MoveDirection dir) {
    IntMatrix const   ae = adjacency(g, false);  // (i, k): edges i -> k
    std::size_t const n  = g.num_vertices();
    bool const        out = dir == MoveDirection::kOut;

    // out: equal columns (same predecessors); in: equal rows (same followers)
    auto same = [&](std::size_t x, std::size_t y) {
      for (std::size_t i = 0; i < n; ++i) {
        if ((out ? ae(i, x) != ae(i, y) : ae(x, i) != ae(y, i))) {
          return false;
        }
      }
      return true;
    };
    for (VertexIndex x = 0; x < n; ++x) {
      for (VertexIndex y = x + 1; y < n; ++y) {
        if (!same(x, y)) {
          continue;
        }
        // merged vertex keeps x's index and name
        std::vector<VertexIndex> pi(n);
        std::vector<std::string> names;
        for (VertexIndex v = 0, k = 0; v < n; ++v) {
          if (v == y) {
            pi[v] = pi[x];
            continue;
          }
          pi[v] = k++;
          names.push_back(g.vertex_id(v));
        }
        std::vector<Edge> edges;
        for (auto const& ed : g.edges()) {
          if ((out && ed.range == y) || (!out && ed.source == y)) {
            continue;  // duplicate of an edge at x
          }
          edges.push_back({ed.id, pi[ed.source], pi[ed.range]});
        }
        Graph             merged(std::move(names), std::move(edges));
        std::size_t const h = merged.num_vertices();
        // rep(w): a vertex of g over w
        std::vector<VertexIndex> rep(h);
        for (VertexIndex v = n; v-- > 0;) {
          rep[pi[v]] = v;
        }
        IntMatrix d(n, h);  // lift indicator, g-vertices by merged vertices
        for (VertexIndex v = 0; v < n; ++v) {
          d(v, pi[v]) = 1;
        }
        IntMatrix other(h, n);
        for (VertexIndex w = 0; w < h; ++w) {
          for (VertexIndex u = 0; u < n; ++u) {
            // out: edges u -> rep(w); in: edges rep(w) -> u
            other(w, u) = out ? ae(u, rep[w]) : ae(rep[w], u);
          }
        }
        // split pair (merged -> g) is (d, other) for out and
        // (other^t, d^t) for in; return it reversed
        if (out) {
          return checked(g, std::move(merged), std::move(other), std::move(d));
        }
        return checked(g, std::move(merged), d.transpose(), other.transpose());
      }
    }
    return std::nullopt;
  }

  SplitSpec parse_split_spec(Graph const& g, std::string_view json_text) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(json_text);
    } catch (nlohmann::json::parse_error const& e) {
      throw_input(std::string("malformed split spec: ") + e.what());
    }
    if (!doc.is_object()) {
      throw_input("split spec must be an object keyed by vertex id");
    }
    SplitSpec spec;
    spec.parts.resize(g.num_vertices());
    for (auto const& [key, val] : doc.items()) {
      auto v = g.find_vertex(key);
      if (!v) {
        throw_input("split spec names unknown vertex '" + key + "'");
      }
      if (!val.is_array()) {
        throw_input("parts of vertex '" + key + "' must be an array of arrays");
      }
      for (auto const& part : val) {
        if (!part.is_array()) {
          throw_input("parts of vertex '" + key + "' must be an array of arrays");
        }
        std::vector<EdgeIndex> edges;
        for (auto const& e : part) {
          auto idx = e.is_string() ? g.find_edge(e.get<std::string>())
                                   : std::optional<EdgeIndex>{};
          if (!idx) {
            throw_input("split spec names unknown edge " + e.dump());
          }
          edges.push_back(*idx);
        }
        spec.parts[*v].push_back(std::move(edges));
      }
    }
    return spec;
  }

}  // namespace leavitt
