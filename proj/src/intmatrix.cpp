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

#include "leavitt/intmatrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "leavitt/error.hpp"

namespace leavitt {

  IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
      : _rows(rows), _cols(cols), _data(rows * cols, Integer(0)) {}

  IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
      : _rows(rows.size()), _cols(rows.size() == 0 ? 0 : rows.begin()->size()) {
    _data.reserve(_rows * _cols);
    for (auto const& r : rows) {
      if (r.size() != _cols) {
        throw_input("ragged matrix literal");
      }
      for (long x : r) {
        _data.emplace_back(x);
      }
    }
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  IntMatrix IntMatrix::from_rows(std::vector<std::vector<Integer>> const& rows) {
    std::size_t const c = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) {
        throw_input("ragged matrix: row " + std::to_string(i) + " has "
                    + std::to_string(rows[i].size()) + " entries, expected "
                    + std::to_string(c));
      }
      for (std::size_t j = 0; j < c; ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  IntMatrix IntMatrix::transpose() const {
    IntMatrix t(_cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  IntMatrix IntMatrix::pow(std::size_t k) const {
    if (!is_square()) {
      throw_input("pow of a non-square matrix");
    }
    IntMatrix result = identity(_rows);
    IntMatrix base   = *this;
    while (k > 0) {
      if (k & 1) {
        result = result * base;
      }
      k >>= 1;
      if (k > 0) {
        base = base * base;
      }
    }
    return result;
  }

  IntVector IntMatrix::apply(IntVector const& v) const {
    if (v.size() != _cols) {
      throw_input("vector length " + std::to_string(v.size())
                  + " does not match matrix with " + std::to_string(_cols)
                  + " columns");
    }
    IntVector out(_rows, Integer(0));
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        if (sgn((*this)(i, j)) != 0) {
          out[i] += (*this)(i, j) * v[j];
        }
      }
    }
    return out;
  }

  IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(_data.begin() + r * _cols, _data.begin() + (r + 1) * _cols);
  }

  bool IntMatrix::is_zero() const {
    return std::all_of(
        _data.begin(), _data.end(), [](Integer const& x) { return sgn(x) == 0; });
  }

  bool IntMatrix::is_nonnegative() const {
    return std::all_of(
        _data.begin(), _data.end(), [](Integer const& x) { return sgn(x) >= 0; });
  }

  IntMatrix IntMatrix::operator+(IntMatrix const& other) const {
    if (_rows != other._rows || _cols != other._cols) {
      throw_input("matrix sum with mismatched shapes");
    }
    IntMatrix out = *this;
    for (std::size_t i = 0; i < _data.size(); ++i) {
      out._data[i] += other._data[i];
    }
    return out;
  }

  IntMatrix IntMatrix::operator-(IntMatrix const& other) const {
    if (_rows != other._rows || _cols != other._cols) {
      throw_input("matrix difference with mismatched shapes");
    }
    IntMatrix out = *this;
    for (std::size_t i = 0; i < _data.size(); ++i) {
      out._data[i] -= other._data[i];
    }
    return out;
  }

  IntMatrix IntMatrix::operator*(IntMatrix const& other) const {
    if (_cols != other._rows) {
      throw_input("matrix product " + std::to_string(_rows) + "x"
                  + std::to_string(_cols) + " * " + std::to_string(other._rows)
                  + "x" + std::to_string(other._cols));
    }
    IntMatrix out(_rows, other._cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t k = 0; k < _cols; ++k) {
        Integer const& a = (*this)(i, k);
        if (sgn(a) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < other._cols; ++j) {
          out(i, j) += a * other(k, j);
        }
      }
    }
    return out;
  }

  bool IntMatrix::operator==(IntMatrix const& other) const {
    return _rows == other._rows && _cols == other._cols && _data == other._data;
  }

  std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  std::ostream& operator<<(std::ostream& os, IntMatrix const& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
      os << (i == 0 ? "[" : ",[");
      for (std::size_t j = 0; j < m.cols(); ++j) {
        os << (j == 0 ? "" : ",") << m(i, j);
      }
      os << ']';
    }
    return os << ']';
  }

  IntVector ones(std::size_t n) {
    return IntVector(n, Integer(1));
  }

  bool is_zero(IntVector const& v) {
    return std::all_of(
        v.begin(), v.end(), [](Integer const& x) { return sgn(x) == 0; });
  }

  bool is_nonnegative(IntVector const& v) {
    return std::all_of(
        v.begin(), v.end(), [](Integer const& x) { return sgn(x) >= 0; });
  }

  bool is_strictly_negative(IntVector const& v) {
    return !v.empty() && std::all_of(v.begin(), v.end(), [](Integer const& x) {
      return sgn(x) < 0;
    });
  }

  IntVector operator-(IntVector const& a, IntVector const& b) {
    if (a.size() != b.size()) {
      throw_input("vector difference with mismatched lengths");
    }
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i] = a[i] - b[i];
    }
    return out;
  }

  IntVector operator+(IntVector const& a, IntVector const& b) {
    if (a.size() != b.size()) {
      throw_input("vector sum with mismatched lengths");
    }
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i] = a[i] + b[i];
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Smith normal form
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
      if (a == b) {
        return;
      }
      for (std::size_t j = 0; j < m.cols(); ++j) {
        swap(m(a, j), m(b, j));
      }
    }

    void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
      if (a == b) {
        return;
      }
      for (std::size_t i = 0; i < m.rows(); ++i) {
        swap(m(i, a), m(i, b));
      }
    }

    // row_dst += q * row_src
    void add_row(IntMatrix& m, std::size_t dst, std::size_t src, Integer const& q) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m(dst, j) += q * m(src, j);
      }
    }

    void add_col(IntMatrix& m, std::size_t dst, std::size_t src, Integer const& q) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        m(i, dst) += q * m(i, src);
      }
    }
  }  // namespace

  std::vector<Integer> SmithForm::diagonal() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
      out.push_back(d(i, i));
    }
    return out;
  }

  SmithForm smith_normal_form(IntMatrix const& m) {
    std::size_t const r = m.rows(), c = m.cols();
    SmithForm    sf{IntMatrix::identity(r), m, IntMatrix::identity(c)};
    IntMatrix&   d = sf.d;
    Integer      q;

    for (std::size_t t = 0; t < std::min(r, c); ++t) {
      while (true) {
        // smallest nonzero |entry| in the trailing block
        std::size_t pi = r, pj = c;
        for (std::size_t i = t; i < r; ++i) {
          for (std::size_t j = t; j < c; ++j) {
            if (sgn(d(i, j)) != 0
                && (pi == r || mpz_cmpabs(d(i, j).get_mpz_t(), d(pi, pj).get_mpz_t()) < 0)) {
              pi = i;
              pj = j;
            }
          }
        }
        if (pi == r) {
          return sf;
        }
        swap_rows(d, t, pi);
        swap_rows(sf.u, t, pi);
        swap_cols(d, t, pj);
        swap_cols(sf.v, t, pj);

        bool dirty = false;
        for (std::size_t i = t + 1; i < r; ++i) {
          if (sgn(d(i, t)) != 0) {
            mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
            q = -q;
            add_row(d, i, t, q);
            add_row(sf.u, i, t, q);
            dirty |= sgn(d(i, t)) != 0;
          }
        }
        for (std::size_t j = t + 1; j < c; ++j) {
          if (sgn(d(t, j)) != 0) {
            mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
            q = -q;
            add_col(d, j, t, q);
            add_col(sf.v, j, t, q);
            dirty |= sgn(d(t, j)) != 0;
          }
        }
        if (dirty) {
          continue;
        }
        // divisibility of the trailing block
        std::size_t bad = r;
        for (std::size_t i = t + 1; i < r && bad == r; ++i) {
          for (std::size_t j = t + 1; j < c; ++j) {
            if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
              bad = i;
              break;
            }
          }
        }
        if (bad == r) {
          break;
        }
        add_row(d, t, bad, Integer(1));
        add_row(sf.u, t, bad, Integer(1));
      }
      if (sgn(d(t, t)) < 0) {
        for (std::size_t j = 0; j < c; ++j) {
          d(t, j) = -d(t, j);
        }
        for (std::size_t j = 0; j < r; ++j) {
          sf.u(t, j) = -sf.u(t, j);
        }
      }
    }
    return sf;
  }

  Integer determinant(IntMatrix const& m) {
    if (!m.is_square()) {
      throw_input("determinant of a non-square matrix");
    }
    std::size_t const n = m.rows();
    if (n == 0) {
      return 1;
    }
    // Bareiss fraction-free elimination
    IntMatrix a    = m;
    Integer   prev = 1;
    int       sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (sgn(a(k, k)) == 0) {
        std::size_t p = k + 1;
        while (p < n && sgn(a(p, k)) == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        swap_rows(a, k, p);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
          mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
        }
      }
      prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
  }

  std::size_t rank(IntMatrix const& m) {
    auto const  diag = smith_normal_form(m).diagonal();
    std::size_t k    = 0;
    for (auto const& x : diag) {
      k += sgn(x) != 0;
    }
    return k;
  }

  ////////////////////////////////////////////////////////////////////////
  // AbelianGroup
  ////////////////////////////////////////////////////////////////////////

  AbelianGroup::AbelianGroup(std::vector<Integer> invariant_factors,
                             std::size_t          free_rank,
                             IntMatrix            projection)
      : _factors(std::move(invariant_factors)),
        _free_rank(free_rank),
        _projection(std::move(projection)) {}

  IntVector AbelianGroup::project(IntVector const& v) const {
    IntVector out = _projection.apply(v);
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      mpz_fdiv_r(out[i].get_mpz_t(), out[i].get_mpz_t(), _factors[i].get_mpz_t());
    }
    return out;
  }

  bool AbelianGroup::isomorphic_to(AbelianGroup const& other) const {
    return _factors == other._factors && _free_rank == other._free_rank;
  }

  std::string AbelianGroup::describe() const {
    if (is_trivial()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    if (_free_rank > 0) {
      os << "Z";
      if (_free_rank > 1) {
        os << '^' << _free_rank;
      }
      first = false;
    }
    for (auto const& f : _factors) {
      os << (first ? "" : " + ") << "Z/" << f;
      first = false;
    }
    return os.str();
  }

  AbelianGroup cokernel(IntMatrix const& m) {
    SmithForm const sf   = smith_normal_form(m);
    auto const      diag = sf.diagonal();
    std::vector<Integer>     factors;
    std::vector<std::size_t> keep;
    std::size_t              rk = 0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
      if (sgn(diag[i]) == 0) {
        continue;
      }
      ++rk;
      if (diag[i] > 1) {
        factors.push_back(diag[i]);
        keep.push_back(i);
      }
    }
    for (std::size_t i = rk; i < m.rows(); ++i) {
      keep.push_back(i);
    }
    IntMatrix proj(keep.size(), m.rows());
    for (std::size_t a = 0; a < keep.size(); ++a) {
      for (std::size_t j = 0; j < m.rows(); ++j) {
        proj(a, j) = sf.u(keep[a], j);
      }
    }
    return AbelianGroup(std::move(factors), m.rows() - rk, std::move(proj));
  }

}  // namespace leavitt
