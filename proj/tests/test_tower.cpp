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

#include <memory>
#include <random>

#include "doctest.h"
#include "leavitt/error.hpp"
#include "leavitt/tower.hpp"
#include "oracles.hpp"

using namespace leavitt;

namespace {
  std::shared_ptr<Graph const> share(char const* json) {
    return std::make_shared<Graph const>(parse_graph(json));
  }
  auto const kFib = R"({"vertices":["v","w"],"edges":[["a","v","v"],["b","v","w"],["c","w","v"]]})";
  auto const kCorner =
      R"({"vertices":["v","w"],"edges":[["e","v","v"],["f","v","w"],["g","w","w"]]})";
  auto const kL2 = R"({"vertices":["v"],"edges":[["e","v","v"],["f","v","v"]]})";
}  // namespace

TEST_SUITE("matricial-tower") {
  TEST_CASE("block sizes are path counts") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
      auto const g = std::make_shared<Graph const>(oracle::random_essential_graph(rng, 3, 2));
      Tower      t(g);
      for (std::size_t n = 0; n <= 3; ++n) {
        auto const lvl = t.level(n);
        CHECK(lvl->blocks().size() == g->num_vertices());
        std::size_t units = 0;
        for (auto const& b : lvl->blocks()) {
          long long count = 0;
          for (VertexIndex i = 0; i < g->num_vertices(); ++i) {
            count += oracle::count_paths(*g, n, i, b.range);
          }
          CHECK(static_cast<long long>(b.size) == count);
          CHECK(b.length == n);
          units += b.size * b.size;
        }
        CHECK(lvl->unit_count() == units);
      }
    }
  }

  TEST_CASE("the corner graph has a point block and a growing block") {
    Tower t(share(kCorner));
    for (std::size_t n = 0; n <= 6; ++n) {
      auto const lvl = t.level(n);
      REQUIRE(lvl->blocks().size() == 2);
      CHECK(lvl->blocks()[*lvl->block_for_vertex(0)].size == 1);
      CHECK(lvl->blocks()[*lvl->block_for_vertex(1)].size == n + 1);
    }
  }

  TEST_CASE("levels with sinks are keyed by range and length") {
    Tower      t(share(R"({"vertices":["v","w"],"edges":[["alpha","v","v"],["beta","v","w"]]})"));
    auto const lvl = t.level(2);
    // v: alpha alpha; w: w (length 0), beta, alpha beta
    CHECK(lvl->paths().size() == 4);
    std::size_t total = 0;
    for (auto const& b : lvl->blocks()) {
      total += b.size;
      if (b.range == 1 && b.length < 2) {
        CHECK(b.size == 1);
      }
    }
    CHECK(total == 4);
  }

  TEST_CASE("unit arithmetic") {
    Tower      t(share(kFib));
    auto const lvl = t.level(2);
    auto const& b  = lvl->blocks()[0];
    REQUIRE(b.size >= 2);
    PathId const p = b.begin, q = b.begin + 1;
    auto const   pq = MatricialElem::unit(lvl, p, q);
    auto const   qp = MatricialElem::unit(lvl, q, p);
    CHECK(multiply(pq, qp) == MatricialElem::unit(lvl, p, p));
    CHECK(multiply(pq, pq).is_zero());
    CHECK(star(pq) == qp);
    auto const x  = MatricialElem::identity(lvl) * Rational(2) + pq;
    auto const xi = inverse(x);
    REQUIRE(xi);
    CHECK(multiply(x, *xi) == MatricialElem::identity(lvl));
    CHECK_FALSE(inverse(MatricialElem::unit(lvl, p, p)));
    CHECK(MatricialElem::unit(lvl, p, q).coefficient(p, q) == 1);
  }

  TEST_CASE("connecting maps are unital homomorphisms with K0 = A^d") {
    for (auto const* json : {kFib, kCorner, kL2}) {
      Tower           t(share(json));
      IntMatrix const a = adjacency(t.graph(), true);
      for (std::size_t n = 0; n <= 2; ++n) {
        for (std::size_t d = 0; d <= 2; ++d) {
          TowerHom const j = connecting_hom(t, n, n + d);
          CHECK(verify_hom(j, true).pass());
          CHECK(k0_of_hom(j) == a.pow(d));
        }
      }
      // j_{1,3} = j_{2,3} j_{1,2}
      std::string detail;
      CHECK(equal_on_units(connecting_hom(t, 1, 3),
                           compose(connecting_hom(t, 2, 3), connecting_hom(t, 1, 2)), &detail));
    }
  }

  TEST_CASE("corner map commutes with connecting maps") {
    for (auto const* json : {kFib, kCorner, kL2}) {
      Tower             t(share(json));
      ChosenEdges const c = default_chosen_edges(t.graph());
      for (std::size_t n = 0; n <= 2; ++n) {
        TowerHom const al = alpha_hom(t, n, c);
        CHECK(verify_hom(al, false).pass());
        CHECK(k0_of_hom(al) == IntMatrix::identity(t.graph().num_vertices()));
        std::string detail;
        CHECK_MESSAGE(equal_on_units(compose(alpha_hom(t, n + 1, c), connecting_hom(t, n, n + 1)),
                                     compose(connecting_hom(t, n + 1, n + 2), al), &detail),
                      detail);
      }
    }
  }

  TEST_CASE("hat prepends the chosen edge") {
    Tower             t(share(kFib));
    Graph const&      g = t.graph();
    ChosenEdges const c = default_chosen_edges(g);
    Path const        b = edge_path(g, 1);
    Path const        h = hat(g, c, b);
    CHECK(h.length() == 2);
    CHECK(h.range(g) == b.range(g));
    CHECK(g.edge(h.edges.front()).range == 0);
    ChosenEdges bad{{1, 1}};  // b does not end at v
    CHECK_THROWS_AS(check_chosen_edges(g, bad), Error);
  }

  TEST_CASE("fault injection is caught") {
    Tower                      t(share(kFib));
    TowerHom const             j = connecting_hom(t, 1, 2);
    std::vector<MatricialElem> images;
    for (std::size_t u = 0; u < j.source()->unit_count(); ++u) {
      images.push_back(j.unit_image(u));
    }
    images[0] = images[0] * Rational(2);
    TowerHom const broken(j.source(), j.target(), images);
    auto const     rep = verify_hom(broken, true);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.violation.empty());
    CHECK_THROWS_AS(k0_of_hom(broken), Error);
    std::string detail;
    CHECK_FALSE(equal_on_units(j, broken, &detail));
    CHECK(!detail.empty());
  }

  TEST_CASE("presentation check catches non-orthogonal diagonal images") {
    Tower          t(share(kL2));
    TowerHom const j = connecting_hom(t, 5, 6);
    REQUIRE(j.source()->unit_count() > kExhaustiveUnitLimit);
    auto const ok = verify_hom(j, true);
    CHECK(ok.mode == "presentation");
    CHECK(ok.pass());
    std::vector<MatricialElem> images(j.source()->unit_count(),
                                      MatricialElem::unit(j.target(), 0, 0));
    TowerHom const collapsed(j.source(), j.target(), images);
    auto const     rep = verify_hom(collapsed, false);
    CHECK(rep.star_compatible);
    CHECK_FALSE(rep.multiplicative);
    CHECK(rep.violation.find("not orthogonal") != std::string::npos);
  }

  TEST_CASE("bratteli diagram") {
    std::string const dot = bratteli_dot(parse_graph(kFib), 2);
    CHECK(dot.find("digraph") != std::string::npos);
  }
}
