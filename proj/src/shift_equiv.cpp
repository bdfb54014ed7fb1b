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

#include "leavitt/shift_equiv.hpp"

#include <sstream>

#include "leavitt/error.hpp"

namespace leavitt {

  namespace {
    EquationCheck compare(std::string name, IntMatrix const& lhs, IntMatrix const& rhs) {
      EquationCheck c;
      c.name = std::move(name);
      for (std::size_t i = 0; i < lhs.rows() && c.pass; ++i) {
        for (std::size_t j = 0; j < lhs.cols(); ++j) {
          if (lhs(i, j) != rhs(i, j)) {
            c.pass = false;
            c.row  = i;
            c.col  = j;
            c.lhs  = lhs(i, j);
            c.rhs  = rhs(i, j);
            break;
          }
        }
      }
      return c;
    }

    std::string shape(IntMatrix const& m) {
      return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
    }
  }  // namespace

  bool SeReport::all_pass() const {
    for (auto const& e : equations) {
      if (!e.pass) {
        return false;
      }
    }
    return !equations.empty();
  }

  std::string SeReport::summary() const {
    std::ostringstream os;
    for (auto const& e : equations) {
      os << e.name << ": " << (e.pass ? "pass" : "FAIL");
      if (!e.pass) {
        os << " at (" << e.row << "," << e.col << ") " << e.lhs << " != " << e.rhs;
      }
      os << '\n';
    }
    return os.str();
  }

  SeReport verify_shift_equivalence(IntMatrix const& a,
                                    IntMatrix const& b,
                                    IntMatrix const& s,
                                    IntMatrix const& r,
                                    std::size_t      lag) {
    std::size_t const n = a.rows(), m = b.rows();
    if (!a.is_square() || !b.is_square() || s.rows() != m || s.cols() != n
        || r.rows() != n || r.cols() != m) {
      throw_input("incompatible shapes: A " + shape(a) + ", B " + shape(b) + ", S "
                  + shape(s) + ", R " + shape(r) + " (need S MxN, R NxM)");
    }
    if (lag == 0) {
      throw_input("shift equivalence lag must be at least 1");
    }
    if (!a.is_nonnegative() || !b.is_nonnegative() || !s.is_nonnegative()
        || !r.is_nonnegative()) {
      throw_input("shift equivalence data must be nonnegative");
    }
    SeReport rep;
    rep.equations.push_back(compare("AR=RB", a * r, r * b));
    rep.equations.push_back(compare("SA=BS", s * a, b * s));
    rep.equations.push_back(compare("A^l=RS", a.pow(lag), r * s));
    rep.equations.push_back(compare("B^l=SR", b.pow(lag), s * r));
    return rep;
  }

  ShiftEquivalence ShiftEquivalence::make(IntMatrix   a,
                                          IntMatrix   b,
                                          IntMatrix   s,
                                          IntMatrix   r,
                                          std::size_t lag) {
    SeReport const rep = verify_shift_equivalence(a, b, s, r, lag);
    if (!rep.all_pass()) {
      throw Error(ErrorCode::kInvalidCertificate,
                  "not a shift equivalence:\n" + rep.summary());
    }
    ShiftEquivalence se;
    se._a   = std::move(a);
    se._b   = std::move(b);
    se._s   = std::move(s);
    se._r   = std::move(r);
    se._lag = lag;
    return se;
  }

  ShiftEquivalence ShiftEquivalence::reversed() const {
    return make(_b, _a, _r, _s, _lag);
  }

  ////////////////////////////////////////////////////////////////////////
  // Search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class Searcher {
     public:
      Searcher(IntMatrix const& a, IntMatrix const& b, std::size_t lag, long bound)
          : _a(a),
            _b(b),
            _al(a.pow(lag)),
            _bl(b.pow(lag)),
            _n(a.rows()),
            _m(b.rows()),
            _bound(bound),
            _s(_m, _n),
            _r(_n, _m) {}

      bool run() {
        return fill_s(0);
      }
      IntMatrix const& s() const {
        return _s;
      }
      IntMatrix const& r() const {
        return _r;
      }

     private:
      // (SA)_{ij} == (BS)_{ij}; row i and column j of S must be set
      bool sa_bs(std::size_t i, std::size_t j) const {
        Integer lhs = 0, rhs = 0;
        for (std::size_t k = 0; k < _n; ++k) {
          lhs += _s(i, k) * _a(k, j);
        }
        for (std::size_t k = 0; k < _m; ++k) {
          rhs += _b(i, k) * _s(k, j);
        }
        return lhs == rhs;
      }

      // S is filled row-major. Equation (i, j) needs row i and column j,
      // so it closes at position (M-1)*N + j, or at the very end for i = M-1.
      bool s_consistent(std::size_t pos) const {
        std::size_t const i = pos / _n, j = pos % _n;
        if (i + 1 < _m) {
          return true;
        }
        for (std::size_t ip = 0; ip + 1 < _m; ++ip) {
          if (!sa_bs(ip, j)) {
            return false;
          }
        }
        if (j + 1 == _n) {
          for (std::size_t jp = 0; jp < _n; ++jp) {
            if (!sa_bs(i, jp)) {
              return false;
            }
          }
        }
        return true;
      }

      bool fill_s(std::size_t pos) {
        if (pos == _m * _n) {
          return fill_r(0);
        }
        std::size_t const i = pos / _n, j = pos % _n;
        for (long x = 0; x <= _bound; ++x) {
          _s(i, j) = x;
          if (s_consistent(pos) && fill_s(pos + 1)) {
            return true;
          }
        }
        _s(i, j) = 0;
        return false;
      }

      bool r_row_ok(std::size_t i) const {
        // (RS)_{i,.} == (A^l)_{i,.}
        for (std::size_t c = 0; c < _n; ++c) {
          Integer v = 0;
          for (std::size_t k = 0; k < _m; ++k) {
            v += _r(i, k) * _s(k, c);
          }
          if (v != _al(i, c)) {
            return false;
          }
        }
        return true;
      }

      // (AR)_{ij} == (RB)_{ij}; row i and column j of R must be set
      bool ar_rb(std::size_t i, std::size_t j) const {
        Integer lhs = 0, rhs = 0;
        for (std::size_t k = 0; k < _n; ++k) {
          lhs += _a(i, k) * _r(k, j);
        }
        for (std::size_t k = 0; k < _m; ++k) {
          rhs += _r(i, k) * _b(k, j);
        }
        return lhs == rhs;
      }

      // Called on the last row of R, where column j is complete; that row
      // itself is complete only at j = M-1.
      bool r_col_ok(std::size_t j) const {
        for (std::size_t i = 0; i + 1 < _n; ++i) {
          if (!ar_rb(i, j)) {
            return false;
          }
        }
        if (j + 1 == _m) {
          for (std::size_t jp = 0; jp < _m; ++jp) {
            if (!ar_rb(_n - 1, jp)) {
              return false;
            }
          }
        }
        // (SR)_{.,j} == (B^l)_{.,j}
        for (std::size_t i = 0; i < _m; ++i) {
          Integer v = 0;
          for (std::size_t k = 0; k < _n; ++k) {
            v += _s(i, k) * _r(k, j);
          }
          if (v != _bl(i, j)) {
            return false;
          }
        }
        return true;
      }

      bool fill_r(std::size_t pos) {
        if (pos == _n * _m) {
          return true;
        }
        std::size_t const i = pos / _m, j = pos % _m;
        for (long x = 0; x <= _bound; ++x) {
          _r(i, j) = x;
          if (j + 1 == _m && !r_row_ok(i)) {
            continue;
          }
          if (i + 1 == _n && !r_col_ok(j)) {
            continue;
          }
          if (fill_r(pos + 1)) {
            return true;
          }
        }
        _r(i, j) = 0;
        return false;
      }

      IntMatrix const& _a;
      IntMatrix const& _b;
      IntMatrix        _al, _bl;
      std::size_t      _n, _m;
      long             _bound;
      IntMatrix        _s, _r;
    };
  }  // namespace

  std::optional<ShiftEquivalence> search_shift_equivalence(IntMatrix const& a,
                                                           IntMatrix const& b,
                                                           std::size_t lag_max,
                                                           long entry_bound) {
    if (!a.is_square() || !b.is_square() || !a.is_nonnegative()
        || !b.is_nonnegative()) {
      throw_input("search needs square nonnegative matrices");
    }
    if (entry_bound < 0) {
      throw_input("entry bound must be nonnegative");
    }
    for (std::size_t lag = 1; lag <= lag_max; ++lag) {
      Searcher s(a, b, lag, entry_bound);
      if (s.run()) {
        return ShiftEquivalence::make(a, b, s.s(), s.r(), lag);
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Induced isomorphism
  ////////////////////////////////////////////////////////////////////////

  DimElem apply_induced_iso(InducedIso const& iso, DimElem const& e) {
    if (e.vec.size() != iso.se.a().rows()) {
      throw_input("element does not belong to the source triple");
    }
    return DimElem{e.level + iso.shift, iso.se.s().apply(e.vec)};
  }

  DimElem apply_induced_inverse(InducedIso const& iso, DimElem const& e) {
    if (e.vec.size() != iso.se.b().rows()) {
      throw_input("element does not belong to the target triple");
    }
    DimElem x = e;
    if (x.level < iso.shift) {
      DimensionTriple const tb(iso.se.b());
      x = tb.raise(x, iso.shift);
    }
    return DimElem{x.level - iso.shift + iso.se.lag(), iso.se.r().apply(x.vec)};
  }

  TriState preserves_order_unit(InducedIso const& iso, std::size_t bound) {
    DimensionTriple const tb(iso.se.b());
    DimElem const image{iso.shift, iso.se.s().apply(ones(iso.se.a().rows()))};
    return tb.equal(image, DimElem{0, ones(iso.se.b().rows())}, bound);
  }

  NormalizedEquivalence normalize_to_unital(ShiftEquivalence const& se,
                                            std::size_t             m,
                                            std::size_t             bound) {
    TriState const t = preserves_order_unit(InducedIso{se, m}, bound);
    if (t.verdict != Verdict::kYes) {
      throw Error(ErrorCode::kNotUnital,
                  std::string("the induced isomorphism does not preserve the "
                              "order unit (")
                      + to_string(t.verdict) + ")");
    }
    IntMatrix const& b  = se.b();
    IntVector const  on = ones(se.a().rows());
    IntMatrix        bk = IntMatrix::identity(b.rows());
    for (std::size_t k = 0; k <= bound; ++k, bk = bk * b) {
      if (m + k == 0) {
        continue;
      }
      IntMatrix const sk  = bk * se.s();
      IntVector const lhs = sk.apply(on);
      IntVector const rhs = b.pow(m + k).apply(ones(b.rows()));
      if (lhs == rhs) {
        return NormalizedEquivalence{
            ShiftEquivalence::make(se.a(), se.b(), sk, se.r(), se.lag() + k),
            m + k,
            k};
      }
    }
    throw Error(ErrorCode::kNotUnital,
                "no k <= " + std::to_string(bound) + " gives B^k S 1 = B^(m+k) 1");
  }

  ShiftEquivalence compose_elementary(std::vector<ElementaryPair> const& chain) {
    if (chain.empty()) {
      throw_input("empty chain of elementary equivalences");
    }
    IntMatrix const a0 = chain.front().r * chain.front().s;
    IntMatrix       s  = chain.front().s;
    IntMatrix       r  = chain.front().r;
    IntMatrix       cur = chain.front().s * chain.front().r;
    for (std::size_t i = 1; i < chain.size(); ++i) {
      auto const& [si, ri] = chain[i];
      if (ri.cols() != si.rows() || ri.rows() != cur.rows() || !(ri * si == cur)) {
        throw_input("chain mismatch at step " + std::to_string(i + 1)
                    + ": R_i S_i differs from the previous S R");
      }
      s   = si * s;
      r   = r * ri;
      cur = si * ri;
    }
    return ShiftEquivalence::make(a0, cur, s, r, chain.size());
  }

  FranksReport franks_obstruction(IntMatrix const& a, IntMatrix const& b) {
    FranksReport rep{bowen_franks(a), bowen_franks(b), false, ""};
    if (!rep.a.group.isomorphic_to(rep.b.group)) {
      rep.obstructed = true;
      rep.reason     = "Bowen-Franks groups differ: " + rep.a.group.describe()
                   + " vs " + rep.b.group.describe();
    } else if (rep.a.det_sign() != rep.b.det_sign()) {
      rep.obstructed = true;
      rep.reason     = "signs of det(I - A) differ: "
                   + std::to_string(rep.a.det_sign()) + " vs "
                   + std::to_string(rep.b.det_sign());
    } else {
      rep.reason = "invariants agree";
    }
    return rep;
  }

}  // namespace leavitt
