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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "leavitt/error.hpp"
#include "leavitt/moves.hpp"
#include "leavitt/shift_equiv.hpp"
#include "oracles.hpp"

using namespace leavitt;

namespace {
  Graph fib() {
    return parse_graph(
        R"({"vertices":["v","w"],"edges":[["a","v","v"],["b","v","w"],["c","w","v"]]})");
  }
  Graph l2() {
    return parse_graph(R"({"vertices":["v"],"edges":[["e","v","v"],["f","v","v"]]})");
  }

  bool elementary(Graph const& from, MoveResult const& r) {
    return verify_shift_equivalence(adjacency(from, true), adjacency(r.graph, true), r.s, r.r, 1)
        .all_pass();
  }
}  // namespace

TEST_SUITE("graph-moves") {
  TEST_CASE("out-split of the golden-mean graph") {
    Graph const g   = fib();
    auto const  res = out_split(g, parse_split_spec(g, R"({"v":[["a"],["b"]]})"));
    CHECK(res.graph.num_vertices() == 3);
    CHECK(res.graph.num_edges() == 5);
    CHECK(res.s == IntMatrix{{1, 0}, {1, 0}, {0, 1}});
    CHECK(res.r == IntMatrix{{1, 0, 1}, {0, 1, 0}});
    CHECK(res.r * res.s == adjacency(g, true));
    CHECK(res.s * res.r == adjacency(res.graph, true));
  }

  TEST_CASE("in-split of the golden-mean graph") {
    Graph const g   = fib();
    auto const  res = in_split(g, parse_split_spec(g, R"({"v":[["a"],["c"]]})"));
    CHECK(res.graph.num_vertices() == 3);
    CHECK(res.s == IntMatrix{{1, 0}, {0, 1}, {1, 0}});
    CHECK(res.r == IntMatrix{{1, 1, 0}, {0, 0, 1}});
    CHECK(elementary(g, res));
  }

  TEST_CASE("splitting the two loops") {
    Graph const g   = l2();
    auto const  out = out_split(g, parse_split_spec(g, R"({"v":[["e"],["f"]]})"));
    CHECK(out.graph.num_vertices() == 2);
    CHECK(out.graph.num_edges() == 4);
    CHECK(out.r * out.s == IntMatrix{{2}});
    auto const in = in_split(g, parse_split_spec(g, R"({"v":[["e"],["f"]]})"));
    CHECK(in.s * in.r == IntMatrix{{1, 1}, {1, 1}});
  }

  TEST_CASE("trivial spec") {
    Graph const g = fib();
    auto const out = out_split(g, SplitSpec{});
    CHECK(oracle::isomorphic(out.graph, g));
    CHECK(out.s == IntMatrix::identity(2));
    CHECK(out.r == adjacency(g, true));
    // the in-split pair counts edges on the S side
    auto const in = in_split(g, SplitSpec{});
    CHECK(oracle::isomorphic(in.graph, g));
    CHECK(in.s == adjacency(g, true));
    CHECK(in.r == IntMatrix::identity(2));
  }

  TEST_CASE("invalid partitions") {
    Graph const g     = fib();
    auto        split = [&](char const* spec) { return out_split(g, parse_split_spec(g, spec)); };
    CHECK_THROWS_AS(split(R"({"v":[["a"],["a","b"]]})"), Error);
    CHECK_THROWS_AS(split(R"({"v":[["a"]]})"), Error);
    CHECK_THROWS_AS(split(R"({"q":[["a"]]})"), Error);
    CHECK_THROWS_AS(split(R"({"v":[["a"],[]]})"), Error);
    CHECK_THROWS_AS(split(R"({"v":[["a"],["zz"]]})"), Error);
    SplitSpec bad;
    bad.parts = {{{0}, {2}}, {}};  // c does not leave v
    CHECK_THROWS_AS(out_split(g, bad), Error);
  }

  TEST_CASE("amalgamation") {
    CHECK_FALSE(amalgamate(l2(), MoveDirection::kOut));
    CHECK_FALSE(amalgamate(l2(), MoveDirection::kIn));
    Graph const g   = l2();
    auto const  out = out_split(g, parse_split_spec(g, R"({"v":[["e"],["f"]]})"));
    auto const  m   = amalgamate(out.graph, MoveDirection::kOut);
    REQUIRE(m);
    CHECK(m->graph.num_vertices() == 1);
    CHECK(oracle::isomorphic(m->graph, g));
    CHECK(elementary(out.graph, *m));
  }

  TEST_CASE("split then amalgamate on random graphs") {
    std::mt19937_64 rng(37);
    int             done = 0;
    while (done < 100) {
      std::uniform_int_distribution<std::size_t> size(1, 4);
      Graph const   g   = oracle::random_graph(rng, size(rng), 3);
      bool const    out = done % 2 == 0;
      MoveDirection dir = out ? MoveDirection::kOut : MoveDirection::kIn;
      if (amalgamate(g, dir)) {
        continue;  // the first mergeable pair would not be the split one
      }
      // a vertex with at least two edges on the split side
      std::vector<VertexIndex> cands;
      for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
        if ((out ? g.out_edges(v) : g.in_edges(v)).size() >= 2) {
          cands.push_back(v);
        }
      }
      if (cands.empty()) {
        continue;
      }
      VertexIndex const v = cands[rng() % cands.size()];
      std::vector<EdgeIndex> es = out ? g.out_edges(v) : g.in_edges(v);
      std::shuffle(es.begin(), es.end(), rng);
      std::size_t const cut = 1 + rng() % (es.size() - 1);
      SplitSpec         spec;
      spec.parts.resize(g.num_vertices());
      spec.parts[v] = {std::vector<EdgeIndex>(es.begin(), es.begin() + cut),
                       std::vector<EdgeIndex>(es.begin() + cut, es.end())};
      MoveResult const sp = out ? out_split(g, spec) : in_split(g, spec);
      CHECK(elementary(g, sp));
      CHECK(oracle::essential(sp.graph) == oracle::essential(g));
      auto const back = amalgamate(sp.graph, dir);
      REQUIRE(back);
      CHECK(elementary(sp.graph, *back));
      CHECK(oracle::isomorphic(back->graph, g));
      ++done;
    }
  }
}
