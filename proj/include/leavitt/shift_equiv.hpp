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

#ifndef LEAVITT_SHIFT_EQUIV_HPP_
#define LEAVITT_SHIFT_EQUIV_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leavitt/intmatrix.hpp"
#include "leavitt/ktheory.hpp"

namespace leavitt {

  struct EquationCheck {
    std::string name;  // "AR=RB", "SA=BS", "A^l=RS", "B^l=SR"
    bool        pass = true;
    // first violating entry (row, col) with both sides
    std::size_t row = 0, col = 0;
    Integer     lhs, rhs;
  };

  struct SeReport {
    std::vector<EquationCheck> equations;
    bool                       all_pass() const;
    std::string                summary() const;
  };

  // Throws kInputError on incompatible shapes or negative entries.
  SeReport verify_shift_equivalence(IntMatrix const& a,
                                    IntMatrix const& b,
                                    IntMatrix const& s,
                                    IntMatrix const& r,
                                    std::size_t      lag);

  // AR = RB, SA = BS, A^l = RS, B^l = SR; verified on construction.
  class ShiftEquivalence {
   public:
    // Throws kInvalidCertificate when an equation fails.
    static ShiftEquivalence make(IntMatrix a,
                                 IntMatrix b,
                                 IntMatrix s,
                                 IntMatrix r,
                                 std::size_t lag);

    IntMatrix const& a() const noexcept {
      return _a;
    }
    IntMatrix const& b() const noexcept {
      return _b;
    }
    IntMatrix const& s() const noexcept {
      return _s;
    }
    IntMatrix const& r() const noexcept {
      return _r;
    }
    std::size_t lag() const noexcept {
      return _lag;
    }

    // (R, S) as an equivalence from B to A.
    ShiftEquivalence reversed() const;

   private:
    ShiftEquivalence() = default;
    IntMatrix   _a, _b, _s, _r;
    std::size_t _lag = 0;
  };

  // Smallest lag first; entries of S and R in [0, entry_bound].
  std::optional<ShiftEquivalence> search_shift_equivalence(IntMatrix const& a,
                                                           IntMatrix const& b,
                                                           std::size_t lag_max,
                                                           long entry_bound);

  struct InducedIso {
    ShiftEquivalence se;
    std::size_t      shift;
  };

  // (n, x) -> (m + n, S x)
  DimElem apply_induced_iso(InducedIso const& iso, DimElem const& e);
  // (m + n, x) -> (n + l, R x), raising the level first when below m
  DimElem apply_induced_inverse(InducedIso const& iso, DimElem const& e);

  TriState preserves_order_unit(InducedIso const& iso,
                                std::size_t       bound = kDefaultBound);

  struct NormalizedEquivalence {
    ShiftEquivalence se;
    std::size_t      m;
    std::size_t      k;  // power of B applied to S
  };

  // Least k with m + k >= 1 and B^k S 1 = B^{m+k} 1; result is (B^k S, R)
  // with lag l + k. Throws kNotUnital when no k <= bound works.
  NormalizedEquivalence normalize_to_unital(ShiftEquivalence const& se,
                                            std::size_t             m,
                                            std::size_t bound = kDefaultBound);

  struct ElementaryPair {
    IntMatrix s;
    IntMatrix r;
  };

  // For A_{i-1} = R_i S_i and A_i = S_i R_i: (S_l..S_1, R_1..R_l), lag l.
  ShiftEquivalence compose_elementary(std::vector<ElementaryPair> const& chain);

  struct FranksReport {
    BowenFranks a;
    BowenFranks b;
    bool        obstructed;
    std::string reason;
  };

  FranksReport franks_obstruction(IntMatrix const& a, IntMatrix const& b);

}  // namespace leavitt

#endif  // LEAVITT_SHIFT_EQUIV_HPP_
