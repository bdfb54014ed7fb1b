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

#ifndef LEAVITT_INTMATRIX_HPP_
#define LEAVITT_INTMATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace leavitt {

  using Integer = mpz_class;
  using Rational = mpq_class;
  using IntVector = std::vector<Integer>;

  // Dense row-major matrix over Z.
  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::vector<std::vector<Integer>> const& rows);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    bool is_square() const noexcept {
      return _rows == _cols;
    }

    Integer& operator()(std::size_t r, std::size_t c) {
      return _data[r * _cols + c];
    }
    Integer const& operator()(std::size_t r, std::size_t c) const {
      return _data[r * _cols + c];
    }

    IntMatrix transpose() const;
    IntMatrix pow(std::size_t k) const;
    IntVector apply(IntVector const& v) const;
    IntVector row(std::size_t r) const;

    bool is_zero() const;
    bool is_nonnegative() const;

    IntMatrix operator+(IntMatrix const& other) const;
    IntMatrix operator-(IntMatrix const& other) const;
    IntMatrix operator*(IntMatrix const& other) const;
    bool operator==(IntMatrix const& other) const;

    std::string to_string() const;

   private:
    std::size_t _rows = 0;
    std::size_t _cols = 0;
    std::vector<Integer> _data;
  };

  std::ostream& operator<<(std::ostream& os, IntMatrix const& m);

  IntVector ones(std::size_t n);
  bool is_zero(IntVector const& v);
  bool is_nonnegative(IntVector const& v);
  bool is_strictly_negative(IntVector const& v);
  IntVector operator-(IntVector const& a, IntVector const& b);
  IntVector operator+(IntVector const& a, IntVector const& b);

  // U * M * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ...
  struct SmithForm {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    std::vector<Integer> diagonal() const;
  };

  SmithForm smith_normal_form(IntMatrix const& m);
  Integer determinant(IntMatrix const& m);
  std::size_t rank(IntMatrix const& m);

  // coker(M) for M: Z^c -> Z^r, as Z^free + sum Z/d_i with d_i > 1.
  class AbelianGroup {
   public:
    AbelianGroup() = default;
    AbelianGroup(std::vector<Integer> invariant_factors,
                 std::size_t free_rank,
                 IntMatrix projection);

    std::vector<Integer> const& invariant_factors() const noexcept {
      return _factors;
    }
    std::size_t free_rank() const noexcept {
      return _free_rank;
    }
    // Coordinates of the class of v: torsion entries reduced mod d_i,
    // then free entries.
    IntVector project(IntVector const& v) const;
    bool is_trivial() const noexcept {
      return _factors.empty() && _free_rank == 0;
    }
    bool isomorphic_to(AbelianGroup const& other) const;
    std::string describe() const;

   private:
    std::vector<Integer> _factors;
    std::size_t _free_rank = 0;
    IntMatrix _projection;
  };

  AbelianGroup cokernel(IntMatrix const& m);

}  // namespace leavitt

#endif  // LEAVITT_INTMATRIX_HPP_
