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

#ifndef LEAVITT_KTHEORY_HPP_
#define LEAVITT_KTHEORY_HPP_

#include <cstddef>
#include <string>

#include "leavitt/graph.hpp"
#include "leavitt/intmatrix.hpp"

namespace leavitt {

  struct K0Data {
    AbelianGroup group;
    IntVector    order_unit;  // coordinates in `group`
  };

  // Requires a graph without sinks.
  K0Data k0_with_unit(Graph const& g);

  struct BowenFranks {
    AbelianGroup group;
    Integer      det;  // det(I - A)
    int          det_sign() const {
      return sgn(det);
    }
  };

  BowenFranks bowen_franks(IntMatrix const& a);

  enum class Verdict { kYes, kNo, kUndecided };

  char const* to_string(Verdict v) noexcept;

  struct TriState {
    Verdict     verdict;
    std::size_t bound;    // bound in force
    std::size_t witness;  // exponent at which the verdict was reached
  };

  inline constexpr std::size_t kDefaultBound = 64;

  // (n, x) in the direct limit of Z^N along A.
  struct DimElem {
    std::size_t level = 0;
    IntVector   vec;
  };

  class DimensionTriple {
   public:
    explicit DimensionTriple(IntMatrix a);

    IntMatrix const& matrix() const noexcept {
      return _a;
    }
    std::size_t dim() const noexcept {
      return _a.rows();
    }
    bool irreducible() const noexcept {
      return _irreducible;
    }

    DimElem delta(DimElem const& e) const;
    DimElem alpha_star(DimElem const& e) const;
    // Same class, represented at `level` >= e.level.
    DimElem raise(DimElem const& e, std::size_t level) const;
    DimElem add(DimElem const& a, DimElem const& b) const;

    TriState equal(DimElem const& a,
                   DimElem const& b,
                   std::size_t    bound = kDefaultBound) const;
    TriState positive(DimElem const& e, std::size_t bound = kDefaultBound) const;

   private:
    void check(DimElem const& e) const;

    IntMatrix   _a;
    bool        _irreducible;
    std::size_t _kernel_index;  // least s with rank A^s = rank A^{s+1}
    IntMatrix   _a_stable;      // A^_kernel_index
  };

}  // namespace leavitt

#endif  // LEAVITT_KTHEORY_HPP_
