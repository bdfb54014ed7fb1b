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
#include "leavitt/ktheory.hpp"
#include "oracles.hpp"

using namespace leavitt;

namespace {
  IntMatrix const kFib{{1, 1}, {1, 0}};

  DimElem random_elem(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int>         entry(-5, 5);
    std::uniform_int_distribution<std::size_t> level(0, 3);
    DimElem                                    e{level(rng), {}};
    for (std::size_t i = 0; i < n; ++i) {
      e.vec.emplace_back(entry(rng));
    }
    return e;
  }

  IntVector vec(std::initializer_list<long> xs) {
    IntVector out;
    for (long x : xs) {
      out.emplace_back(x);
    }
    return out;
  }
}  // namespace

TEST_SUITE("ktheory") {
  TEST_CASE("K0 with unit") {
    auto const l2 = k0_with_unit(
        parse_graph(R"({"vertices":["v"],"edges":[["e","v","v"],["f","v","v"]]})"));
    CHECK(l2.group.is_trivial());
    CHECK(l2.order_unit.empty());

    auto const loop = k0_with_unit(parse_graph(R"({"vertices":["v"],"edges":[["e","v","v"]]})"));
    CHECK(loop.group.free_rank() == 1);
    CHECK(loop.group.invariant_factors().empty());
    REQUIRE(loop.order_unit.size() == 1);
    CHECK(abs(loop.order_unit[0]) == 1);

    auto const fib = k0_with_unit(parse_graph(
        R"({"vertices":["v","w"],"edges":[["a","v","v"],["b","v","w"],["c","w","v"]]})"));
    CHECK(fib.group.is_trivial());

    CHECK_THROWS_AS(k0_with_unit(parse_graph(
                        R"({"vertices":["v","w"],"edges":[["a","v","v"],["b","v","w"]]})")),
                    Error);
  }

  TEST_CASE("Bowen-Franks examples") {
    auto const two = bowen_franks(IntMatrix{{2}});
    CHECK(two.group.is_trivial());
    CHECK(two.det_sign() == -1);
    for (std::size_t n = 1; n <= 3; ++n) {
      auto const id = bowen_franks(IntMatrix::identity(n));
      CHECK(id.group.free_rank() == n);
      CHECK(id.det_sign() == 0);
    }
    auto const fib = bowen_franks(kFib);
    CHECK(fib.group.is_trivial());
    CHECK(fib.det_sign() == -1);
    CHECK_THROWS_AS(bowen_franks(IntMatrix{{-1}}), Error);
  }

  TEST_CASE("K0 agrees with Bowen-Franks and the determinant oracle") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
      Graph const g  = oracle::random_essential_graph(rng, 4, 2);
      auto const  k0 = k0_with_unit(g);
      auto const  bf = bowen_franks(adjacency(g, true));
      CHECK(k0.group.isomorphic_to(bf.group));
      oracle::Mat const m = oracle::i_minus(oracle::to_mat(adjacency(g, true)));
      CHECK(bf.det == static_cast<long>(oracle::leibniz_det(m)));
      std::vector<long long> expect = oracle::invariant_factors(m);
      std::vector<Integer>   got;
      for (long long f : expect) {
        if (f > 1) {
          got.emplace_back(static_cast<long>(f));
        }
      }
      CHECK(bf.group.invariant_factors() == got);
      CHECK(bf.group.free_rank() == m.size() - expect.size());
      // |det| = order of the group when finite
      if (bf.det != 0) {
        Integer order = 1;
        for (auto const& f : got) {
          order *= f;
        }
        CHECK(order == abs(bf.det));
      }
    }
  }

  TEST_CASE("delta and alpha_star") {
    DimensionTriple const t(kFib);
    DimElem const         d = t.delta({0, vec({1, 0})});
    CHECK(d.level == 0);
    CHECK(d.vec == vec({1, 1}));
    CHECK(t.alpha_star({2, vec({3, 4})}).level == 3);

    DimensionTriple const one(IntMatrix{{1}});
    CHECK(one.delta({4, vec({7})}).vec == vec({7}));
    CHECK_THROWS_AS(t.delta({0, vec({1})}), Error);
  }

  TEST_CASE("delta and alpha_star are mutually inverse on random elements") {
    std::mt19937_64 rng(23);
    for (int m = 0; m < 20; ++m) {
      DimensionTriple const t(oracle::from_mat(oracle::random_essential_matrix(rng, 4, 3)));
      for (int k = 0; k < 10; ++k) {
        DimElem const e = random_elem(rng, t.dim());
        CHECK(t.equal(t.alpha_star(t.delta(e)), e).verdict == Verdict::kYes);
        CHECK(t.equal(t.delta(t.alpha_star(e)), e).verdict == Verdict::kYes);
        DimElem const f = random_elem(rng, t.dim());
        DimElem const s = t.add(e, f);
        CHECK(t.equal(t.delta(s), t.add(t.delta(e), t.delta(f))).verdict == Verdict::kYes);
        if (t.positive(e).verdict == Verdict::kYes) {
          CHECK(t.positive(t.delta(e)).verdict == Verdict::kYes);
          CHECK(t.positive(t.alpha_star(e)).verdict == Verdict::kYes);
        }
      }
    }
  }

  TEST_CASE("dim_equal examples") {
    DimensionTriple const t(kFib);
    IntVector const       x = vec({2, -1});
    CHECK(t.equal({0, x}, {1, kFib.apply(x)}).verdict == Verdict::kYes);
    CHECK(t.equal({3, x}, {3, x}).verdict == Verdict::kYes);
    CHECK(t.equal({3, x}, {3, x}).witness == 0);

    DimensionTriple const two(IntMatrix{{2}});
    CHECK(two.equal({0, vec({1})}, {0, vec({2})}).verdict == Verdict::kNo);
    CHECK(two.equal({0, vec({1})}, {1, vec({2})}).verdict == Verdict::kYes);

    // nilpotent part: (1,0) and (0,0) agree after one step
    DimensionTriple const nil(IntMatrix{{0, 0}, {1, 1}});
    CHECK(nil.equal({0, vec({1, 0})}, {0, vec({0, 1})}).verdict == Verdict::kYes);
    CHECK(nil.equal({0, vec({1, 0})}, {0, vec({0, 0})}).verdict == Verdict::kNo);
  }

  TEST_CASE("dim_positive examples") {
    DimensionTriple const t(kFib);
    CHECK(t.positive({2, vec({0, 3})}).verdict == Verdict::kYes);
    CHECK(t.positive({2, vec({0, 3})}).witness == 0);
    auto const r = t.positive({0, vec({1, -1})});
    CHECK(r.verdict == Verdict::kYes);
    CHECK(r.witness == 1);
    CHECK(DimensionTriple(IntMatrix{{2}}).positive({0, vec({-1})}).verdict == Verdict::kNo);
    // reducible: never decided negative
    auto const u = DimensionTriple(IntMatrix{{1, 0}, {0, 1}}).positive({0, vec({-1, 1})}, 8);
    CHECK(u.verdict == Verdict::kUndecided);
    CHECK(u.bound == 8);
  }
}
