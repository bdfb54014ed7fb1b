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

#include "leavitt/ktheory.hpp"

#include "leavitt/error.hpp"

namespace leavitt {

  K0Data k0_with_unit(Graph const& g) {
    if (g.has_sinks()) {
      throw_input("K0 with order unit needs a graph without sinks");
    }
    std::size_t const n = g.num_vertices();
    IntMatrix const   m = IntMatrix::identity(n) - adjacency(g, true);
    AbelianGroup      grp = cokernel(m);
    IntVector         unit = grp.project(ones(n));
    return K0Data{std::move(grp), std::move(unit)};
  }

  BowenFranks bowen_franks(IntMatrix const& a) {
    if (!a.is_square()) {
      throw_input("Bowen-Franks data needs a square matrix");
    }
    if (!a.is_nonnegative()) {
      throw_input("Bowen-Franks data needs a nonnegative matrix");
    }
    IntMatrix const m = IntMatrix::identity(a.rows()) - a;
    return BowenFranks{cokernel(m), determinant(m)};
  }

  char const* to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::kYes:
        return "yes";
      case Verdict::kNo:
        return "no";
      default:
        return "undecided";
    }
  }

  DimensionTriple::DimensionTriple(IntMatrix a)
      : _a(std::move(a)), _irreducible(false), _kernel_index(0) {
    if (!_a.is_square()) {
      throw_input("dimension triple needs a square matrix");
    }
    _irreducible = is_irreducible(_a);
    // ker A^s stabilizes once the rank does
    IntMatrix   p    = IntMatrix::identity(dim());
    std::size_t rk   = dim();
    while (true) {
      IntMatrix   next    = p * _a;
      std::size_t next_rk = rank(next);
      if (next_rk == rk) {
        break;
      }
      p  = std::move(next);
      rk = next_rk;
      ++_kernel_index;
    }
    _a_stable = std::move(p);
  }

  void DimensionTriple::check(DimElem const& e) const {
    if (e.vec.size() != dim()) {
      throw_input("element of length " + std::to_string(e.vec.size())
                  + " in a dimension triple of size " + std::to_string(dim()));
    }
  }

  DimElem DimensionTriple::delta(DimElem const& e) const {
    check(e);
    return DimElem{e.level, _a.apply(e.vec)};
  }

  DimElem DimensionTriple::alpha_star(DimElem const& e) const {
    check(e);
    return DimElem{e.level + 1, e.vec};
  }

  DimElem DimensionTriple::raise(DimElem const& e, std::size_t level) const {
    check(e);
    if (level < e.level) {
      throw_input("cannot lower the level of a dimension-group element");
    }
    DimElem out = e;
    while (out.level < level) {
      out.vec = _a.apply(out.vec);
      ++out.level;
    }
    return out;
  }

  DimElem DimensionTriple::add(DimElem const& a, DimElem const& b) const {
    std::size_t const l = std::max(a.level, b.level);
    return DimElem{l, raise(a, l).vec + raise(b, l).vec};
  }

  TriState DimensionTriple::equal(DimElem const& a,
                                  DimElem const& b,
                                  std::size_t    bound) const {
    std::size_t const l = std::max(a.level, b.level);
    IntVector         d = raise(a, l).vec - raise(b, l).vec;
    std::size_t const stop = std::min(bound, _kernel_index);
    for (std::size_t k = 0; k <= stop; ++k) {
      if (is_zero(d)) {
        return TriState{Verdict::kYes, bound, k};
      }
      d = _a.apply(d);
    }
    // d lies in the eventual kernel iff A^s d = 0 for the stable index s
    IntVector const tail = _a_stable.apply(raise(a, l).vec - raise(b, l).vec);
    if (!is_zero(tail)) {
      return TriState{Verdict::kNo, bound, _kernel_index};
    }
    return TriState{Verdict::kUndecided, bound, bound};
  }

  TriState DimensionTriple::positive(DimElem const& e, std::size_t bound) const {
    check(e);
    IntVector x = e.vec;
    for (std::size_t k = 0; k <= bound; ++k) {
      if (is_nonnegative(x)) {
        return TriState{Verdict::kYes, bound, k};
      }
      // Perron certificate: w > 0 with w A = rho w, so w.x < 0 persists.
      if (_irreducible && is_strictly_negative(x)) {
        return TriState{Verdict::kNo, bound, k};
      }
      x = _a.apply(x);
    }
    return TriState{Verdict::kUndecided, bound, bound};
  }

}  // namespace leavitt
