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

#ifndef LEAVITT_TESTS_LPA_GEN_HPP_
#define LEAVITT_TESTS_LPA_GEN_HPP_

#include <memory>
#include <random>
#include <vector>

#include "leavitt/graph.hpp"
#include "leavitt/lpa.hpp"
#include "leavitt/tower.hpp"

namespace gen {

  using leavitt::Graph;
  using leavitt::LpaElem;

  // Random rational combination of monomials with paths of length <= max_len.
  // Reducible monomials are kept, so the result is usually not canonical.
  inline LpaElem random_raw(std::mt19937_64& rng, std::shared_ptr<Graph const> const& g,
                            std::size_t max_len, int max_terms) {
    std::vector<leavitt::Path> paths;
    for (std::size_t n = 0; n <= max_len; ++n) {
      auto const p = leavitt::enumerate_paths(*g, n);
      paths.insert(paths.end(), p.begin(), p.end());
    }
    std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
    std::uniform_int_distribution<int>         coef(-3, 3), count(1, max_terms);
    LpaElem::Terms                             terms;
    int const                                  k = count(rng);
    for (int i = 0; i < k; ++i) {
      leavitt::Path const& gamma = paths[pick(rng)];
      std::vector<std::size_t> same;
      for (std::size_t j = 0; j < paths.size(); ++j) {
        if (paths[j].range(*g) == gamma.range(*g)) {
          same.push_back(j);
        }
      }
      leavitt::Path const& mu = paths[same[rng() % same.size()]];
      int                  c  = coef(rng);
      if (c == 0) {
        c = 1;
      }
      leavitt::Rational q(c, 1 + static_cast<int>(rng() % 2));
      q.canonicalize();
      terms[{gamma, mu}] += q;
    }
    return LpaElem::from_terms(g, std::move(terms));
  }

  // Random element of M(E)_n with entries in [-2, 2] allowed only where
  // `allow(gamma, mu)` holds; retried until invertible.
  template <class Allow>
  LpaElem random_invertible(std::mt19937_64& rng, leavitt::Tower const& t, std::size_t n,
                            Allow allow) {
    auto const                         lvl = t.level(n);
    std::uniform_int_distribution<int> entry(-2, 2);
    while (true) {
      std::vector<leavitt::MatricialElem::Term> terms;
      for (auto const& b : lvl->blocks()) {
        for (std::size_t i = 0; i < b.size; ++i) {
          for (std::size_t j = 0; j < b.size; ++j) {
            leavitt::PathId const a = b.begin + i, c = b.begin + j;
            if (!allow(lvl->path(a), lvl->path(c))) {
              continue;
            }
            int const x = entry(rng);
            if (x != 0) {
              terms.push_back({{a, c}, leavitt::Rational(x)});
            }
          }
        }
      }
      leavitt::MatricialElem const m(lvl, std::move(terms));
      if (leavitt::inverse(m)) {
        return leavitt::from_matricial(m);
      }
    }
  }

  // u invertible at level 1; z = u z0 u^-1 with z0 invertible at level 1 and
  // supported on e f* with s(e) = s(f), so z0 commutes with every vertex and z
  // commutes with every u v u^-1.
  inline leavitt::ThetaData random_theta_data(std::mt19937_64& rng, leavitt::Tower const& t) {
    LpaElem const u = random_invertible(rng, t, 1, [](auto const&, auto const&) { return true; });
    LpaElem const z0 = random_invertible(rng, t, 1, [&](leavitt::Path const& a,
                                                       leavitt::Path const& c) {
      return a.source == c.source;
    });
    auto const ui = leavitt::inverse(u);
    LpaElem const z = leavitt::multiply(leavitt::multiply(u, z0), *ui);
    return leavitt::make_theta_data(u, z);
  }

}  // namespace gen

#endif  // LEAVITT_TESTS_LPA_GEN_HPP_
