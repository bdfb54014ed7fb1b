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
#include "leavitt/shift_equiv.hpp"
#include "oracles.hpp"

using namespace leavitt;

namespace {
  IntMatrix const kA{{1, 1}, {1, 0}};
  IntMatrix const kS2{{1, 0}, {0, 1}, {1, 0}};
  IntMatrix const kR2{{1, 1, 0}, {0, 0, 1}};
  IntMatrix const kS3{{1, 0}, {1, 0}, {0, 1}};
  IntMatrix const kR3{{1, 0, 1}, {0, 1, 0}};

  IntVector vec(std::initializer_list<long> xs) {
    IntVector out;
    for (long x : xs) {
      out.emplace_back(x);
    }
    return out;
  }

  // all four equations by plain multiplication
  bool oracle_se(IntMatrix const& a, IntMatrix const& b, IntMatrix const& s,
                 IntMatrix const& r, unsigned lag) {
    using namespace oracle;
    Mat const ma = to_mat(a), mb = to_mat(b), ms = to_mat(s), mr = to_mat(r);
    return mul(ma, mr) == mul(mr, mb) && mul(ms, ma) == mul(mb, ms)
           && mpow(ma, lag) == mul(mr, ms) && mpow(mb, lag) == mul(ms, mr);
  }
}  // namespace

TEST_SUITE("shift-equiv") {
  TEST_CASE("verify the in-split and out-split pairs") {
    IntMatrix const b2 = kS2 * kR2;
    auto const      r2 = verify_shift_equivalence(kA, b2, kS2, kR2, 1);
    CHECK(r2.all_pass());
    CHECK(r2.equations.size() == 4);
    CHECK(b2 == IntMatrix{{1, 1, 0}, {0, 0, 1}, {1, 1, 0}});
    CHECK(oracle_se(kA, b2, kS2, kR2, 1));

    IntMatrix const b3 = kS3 * kR3;
    CHECK(verify_shift_equivalence(kA, b3, kS3, kR3, 1).all_pass());
    CHECK(oracle_se(kA, b3, kS3, kR3, 1));
  }

  TEST_CASE("(I, A) is an elementary equivalence from A to itself") {
    CHECK(verify_shift_equivalence(kA, kA, IntMatrix::identity(2), kA, 1).all_pass());
  }

  TEST_CASE("failures name the equation") {
    auto const rep = verify_shift_equivalence(IntMatrix{{2}}, IntMatrix{{3}}, IntMatrix{{1}},
                                              IntMatrix{{1}}, 1);
    CHECK_FALSE(rep.all_pass());
    bool sa_fails = false;
    for (auto const& eq : rep.equations) {
      if (eq.name == "SA=BS") {
        sa_fails = !eq.pass;
        CHECK(eq.lhs == 2);
        CHECK(eq.rhs == 3);
      }
    }
    CHECK(sa_fails);
    CHECK_THROWS_AS(verify_shift_equivalence(kA, kA, kS2, kR2, 1), Error);
    try {
      ShiftEquivalence::make(IntMatrix{{2}}, IntMatrix{{3}}, IntMatrix{{1}}, IntMatrix{{1}}, 1);
      FAIL("accepted");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::kInvalidCertificate);
    }
  }

  TEST_CASE("search") {
    auto const two = search_shift_equivalence(IntMatrix{{2}}, IntMatrix{{2}}, 1, 2);
    REQUIRE(two);
    CHECK(two->lag() == 1);
    CHECK(two->s() * two->r() == IntMatrix{{2}});
    CHECK((two->s() == IntMatrix{{1}} || two->s() == IntMatrix{{2}}));
    auto const again = search_shift_equivalence(IntMatrix{{2}}, IntMatrix{{2}}, 1, 2);
    CHECK(again->s() == two->s());

    IntMatrix const b  = kS2 * kR2;
    auto const      se = search_shift_equivalence(kA, b, 1, 2);
    REQUIRE(se);
    CHECK(oracle_se(kA, b, se->s(), se->r(), 1));

    CHECK_FALSE(search_shift_equivalence(IntMatrix{{2}}, IntMatrix{{4}}, 2, 4));
  }

  TEST_CASE("search is sound on random pairs") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
      IntMatrix const a  = oracle::from_mat(oracle::random_essential_matrix(rng, 2, 2));
      IntMatrix const b  = oracle::from_mat(oracle::random_essential_matrix(rng, 2, 2));
      auto const      se = search_shift_equivalence(a, b, 2, 2);
      if (se) {
        CHECK(oracle_se(a, b, se->s(), se->r(), static_cast<unsigned>(se->lag())));
      }
      auto const self = search_shift_equivalence(a, a, 1, 3);
      REQUIRE(self);  // (I, A) is always within bound 3
      CHECK(oracle_se(a, a, self->s(), self->r(), 1));
    }
  }

  TEST_CASE("induced isomorphism") {
    auto const se = ShiftEquivalence::make(kA, kS2 * kR2, kS2, kR2, 1);
    InducedIso const iso{se, 0};
    DimElem const    u = apply_induced_iso(iso, {0, vec({1, 1})});
    CHECK(u.level == 0);
    CHECK(u.vec == vec({1, 1, 1}));

    DimensionTriple const ta(kA), tb(se.b());
    std::mt19937_64       rng(31);
    std::uniform_int_distribution<int> entry(-4, 4);
    std::uniform_int_distribution<std::size_t> level(0, 3);
    for (std::size_t m = 0; m <= 2; ++m) {
      InducedIso const it{se, m};
      for (int k = 0; k < 50; ++k) {
        DimElem const e{level(rng), vec({entry(rng), entry(rng)})};
        CHECK(ta.equal(apply_induced_inverse(it, apply_induced_iso(it, e)), e).verdict
              == Verdict::kYes);
        DimElem const f{level(rng), vec({entry(rng), entry(rng), entry(rng)})};
        CHECK(tb.equal(apply_induced_iso(it, apply_induced_inverse(it, f)), f).verdict
              == Verdict::kYes);
      }
    }

    auto const       id = ShiftEquivalence::make(kA, kA, IntMatrix::identity(2), kA, 1);
    InducedIso const ii{id, 0};
    DimElem const    x{2, vec({5, -3})};
    CHECK(apply_induced_iso(ii, x).vec == x.vec);
    CHECK(apply_induced_iso(ii, x).level == x.level);
  }

  TEST_CASE("order unit dichotomy") {
    auto const se = ShiftEquivalence::make(kA, kS2 * kR2, kS2, kR2, 1);
    CHECK(preserves_order_unit({se, 0}, 16).verdict == Verdict::kYes);
    CHECK(preserves_order_unit({se, 1}, 16).verdict == Verdict::kNo);
    auto const id = ShiftEquivalence::make(kA, kA, IntMatrix::identity(2), kA, 1);
    CHECK(preserves_order_unit({id, 0}).verdict == Verdict::kYes);
  }

  TEST_CASE("normalize to unital") {
    auto const se = ShiftEquivalence::make(kA, kS2 * kR2, kS2, kR2, 1);
    auto const n  = normalize_to_unital(se, 0);
    CHECK(n.k == 1);
    CHECK(n.m == 1);
    CHECK(n.se.lag() == 2);
    CHECK(n.se.s() == se.b() * kS2);
    CHECK(n.se.r() == kR2);
    CHECK(oracle_se(kA, se.b(), n.se.s(), n.se.r(), 2));
    CHECK(n.se.s().apply(ones(2)) == se.b().apply(ones(3)));

    // already unital at m = 1: (I, A) with S 1 = 1 = ... needs A 1 = 1, so use a permutation
    IntMatrix const p{{0, 1}, {1, 0}};
    auto const      perm = ShiftEquivalence::make(p, p, IntMatrix::identity(2), p, 1);
    auto const      pn   = normalize_to_unital(perm, 1);
    CHECK(pn.k == 0);
    CHECK(pn.m == 1);
    CHECK(pn.se.s() == IntMatrix::identity(2));

    try {
      normalize_to_unital(se, 1, 16);
      FAIL("normalized a non-unital pair");
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::kNotUnital);
    }
  }

  TEST_CASE("compose elementary") {
    IntMatrix const i2 = IntMatrix::identity(2);
    auto const      one = compose_elementary({{kS2, kR2}});
    CHECK(one.lag() == 1);
    CHECK(one.s() == kS2);

    auto const two = compose_elementary({{i2, kA}, {i2, kA}});
    CHECK(two.lag() == 2);
    CHECK(two.s() == i2);
    CHECK(two.r() == kA * kA);

    // there and back: A -> B -> A
    auto const back = compose_elementary({{kS2, kR2}, {kR2, kS2}});
    CHECK(back.lag() == 2);
    CHECK(back.s() == kR2 * kS2);
    CHECK(back.r() == kR2 * kS2);
    CHECK(back.a() == kA);
    CHECK(back.b() == kA);
    CHECK(oracle_se(kA, kA, back.s(), back.r(), 2));

    CHECK_THROWS_AS(compose_elementary({{kS2, kR2}, {kS2, kR2}}), Error);
  }

  TEST_CASE("Franks obstruction") {
    CHECK_FALSE(franks_obstruction(kA, kA).obstructed);
    auto const r = franks_obstruction(IntMatrix{{2}}, IntMatrix{{3}});
    CHECK(r.obstructed);
    CHECK(r.b.group.invariant_factors() == std::vector<Integer>{2});
    // same (trivial) group, opposite sign
    IntMatrix found;
    for (long a = 0; a <= 3 && found.rows() == 0; ++a) {
      for (long b = 1; b <= 3 && found.rows() == 0; ++b) {
        for (long c = 1; c <= 3 && found.rows() == 0; ++c) {
          for (long d = 0; d <= 3 && found.rows() == 0; ++d) {
            oracle::Mat const m{{a, b}, {c, d}};
            if (oracle::leibniz_det(oracle::i_minus(m)) == 1) {
              found = oracle::from_mat(m);
            }
          }
        }
      }
    }
    REQUIRE(found.rows() == 2);
    auto const f = franks_obstruction(IntMatrix{{2}}, found);
    CHECK(f.a.group.is_trivial());
    CHECK(f.b.group.is_trivial());
    CHECK(f.a.det_sign() == -1);
    CHECK(f.b.det_sign() == 1);
    CHECK(f.obstructed);
  }
}
