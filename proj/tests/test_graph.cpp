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

#include <random>

#include "doctest.h"
#include "leavitt/error.hpp"
#include "leavitt/graph.hpp"
#include "oracles.hpp"

using namespace leavitt;

namespace {
  Graph l2() {
    return parse_graph(R"({"vertices":["v"],"edges":[["e","v","v"],["f","v","v"]]})");
  }
  Graph fib() {
    return parse_graph(
        R"({"vertices":["v","w"],"edges":[["a","v","v"],["b","v","w"],["c","w","v"]]})");
  }
  Graph corner() {
    return parse_graph(
        R"({"vertices":["v","w"],"edges":[["e","v","v"],["f","v","w"],["g","w","w"]]})");
  }
  Graph toeplitz() {
    return parse_graph(
        R"({"vertices":["v","w"],"edges":[["alpha","v","v"],["beta","v","w"]]})");
  }
}  // namespace

TEST_SUITE("graph-core") {
  TEST_CASE("parse the two-loop graph") {
    Graph const g = l2();
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_edges() == 2);
    CHECK(g.edge(1).id == "f");
  }

  TEST_CASE("parse the golden-mean graph") {
    Graph const g = fib();
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 3);
  }

  TEST_CASE("dangling vertex reference is an input error") {
    try {
      parse_graph(R"({"vertices":["v"],"edges":[["e","v","w"]]})");
      FAIL("no error");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::kInputError);
    }
    CHECK_THROWS_AS(parse_graph("{not json"), Error);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":["v","v"],"edges":[]})"), Error);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":["v"],"edges":[["v","v","v"]]})"), Error);
  }

  TEST_CASE("json round trip") {
    Graph const g = corner();
    CHECK(parse_graph(graph_to_json(g)) == g);
  }

  TEST_CASE("adjacency in both orientations") {
    CHECK(adjacency(corner(), true) == IntMatrix{{1, 0}, {1, 1}});
    CHECK(adjacency(corner(), false) == IntMatrix{{1, 1}, {0, 1}});
    CHECK(adjacency(l2(), true) == IntMatrix{{2}});
    CHECK(adjacency(l2(), false) == IntMatrix{{2}});
    CHECK(adjacency(fib(), true) == IntMatrix{{1, 1}, {1, 0}});
  }

  TEST_CASE("path counts agree with walking the graph") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      Graph const g = oracle::random_graph(rng, 1 + trial % 4, 2);
      for (std::size_t d = 0; d <= 4; ++d) {
        for (VertexIndex i = 0; i < g.num_vertices(); ++i) {
          for (VertexIndex k = 0; k < g.num_vertices(); ++k) {
            auto const paths = enumerate_paths(g, d, i, k);
            CHECK(static_cast<long long>(paths.size()) == oracle::count_paths(g, d, i, k));
            // |v_k E^d v_i| = (A^d)_{ik}
            CHECK(adjacency(g, true).pow(d)(k, i) == static_cast<long>(paths.size()));
            CHECK(std::is_sorted(paths.begin(), paths.end()));
          }
        }
      }
    }
  }

  TEST_CASE("enumerate paths examples") {
    CHECK(enumerate_paths(l2(), 3).size() == 8);
    auto const zero = enumerate_paths(fib(), 0, std::nullopt, 1);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == vertex_path(1));
    for (std::size_t n = 0; n <= 5; ++n) {
      CHECK(enumerate_paths(corner(), n, std::nullopt, 1).size() == n + 1);
    }
  }

  TEST_CASE("classify vertices") {
    auto const a = classify_vertices(l2());
    CHECK(a.essential);
    CHECK(a.sources.empty());
    auto const t = classify_vertices(toeplitz());
    CHECK_FALSE(t.essential);
    CHECK(t.sources.empty());
    CHECK(t.sinks == std::vector<VertexIndex>{1});
    Graph const lone({"x"}, {});
    auto const  c = classify_vertices(lone);
    CHECK(c.sources == std::vector<VertexIndex>{0});
    CHECK(c.sinks == std::vector<VertexIndex>{0});
  }

  TEST_CASE("Q_n with a sink") {
    Graph const g  = toeplitz();
    auto const  q2 = q_paths(g, 2);
    std::vector<std::string> names;
    for (auto const& p : q2) {
      names.push_back(path_to_string(g, p));
    }
    // sorted by (range, length, lex); the sink w is its own short path
    CHECK(names == std::vector<std::string>{"alpha alpha", "w", "beta", "alpha beta"});
    auto const q0 = q_paths(g, 0);
    CHECK(q0.size() == 2);
    auto const qe = q_paths(l2(), 3);
    CHECK(qe.size() == 8);
  }

  TEST_CASE("concat and prefixes") {
    Graph const g = fib();
    Path const  ab = concat(g, edge_path(g, 0), edge_path(g, 1));
    CHECK(ab.length() == 2);
    CHECK(ab.range(g) == 1);
    CHECK(is_prefix(edge_path(g, 0), ab));
    CHECK_THROWS_AS(concat(g, edge_path(g, 1), edge_path(g, 1)), Error);
    CHECK(concat(g, vertex_path(0), ab) == ab);
  }

  TEST_CASE("irreducibility") {
    CHECK(is_irreducible(IntMatrix{{1, 1}, {1, 0}}));
    CHECK_FALSE(is_irreducible(IntMatrix{{1, 0}, {1, 1}}));
    CHECK_FALSE(is_irreducible(IntMatrix{{0}}));
  }
}
