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

// Reference computations for the tests. Everything here is written
// directly from definitions with machine integers and brute force; none
// of it calls into the library's algorithms.

#ifndef LEAVITT_TESTS_ORACLES_HPP_
#define LEAVITT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "leavitt/graph.hpp"
#include "leavitt/intmatrix.hpp"

namespace oracle {

  using Mat = std::vector<std::vector<long long>>;

  inline Mat to_mat(leavitt::IntMatrix const& m) {
    Mat out(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out[i][j] = m(i, j).get_si();
      }
    }
    return out;
  }

  inline leavitt::IntMatrix from_mat(Mat const& m) {
    leavitt::IntMatrix out(m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        out(i, j) = static_cast<long>(m[i][j]);
      }
    }
    return out;
  }

  inline Mat mul(Mat const& a, Mat const& b) {
    Mat out(a.size(), std::vector<long long>(b.empty() ? 0 : b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        for (std::size_t j = 0; j < b[0].size(); ++j) {
          out[i][j] += a[i][k] * b[k][j];
        }
      }
    }
    return out;
  }

  inline Mat eye(std::size_t n) {
    Mat out(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      out[i][i] = 1;
    }
    return out;
  }

  inline Mat mpow(Mat const& a, unsigned k) {
    Mat out = eye(a.size());
    for (unsigned i = 0; i < k; ++i) {
      out = mul(out, a);
    }
    return out;
  }

  inline Mat i_minus(Mat const& a) {
    Mat out = eye(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        out[i][j] -= a[i][j];
      }
    }
    return out;
  }

  // Permutation expansion.
  inline long long leibniz_det(Mat const& m) {
    std::size_t const n = m.size();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    long long total = 0;
    do {
      long long term = 1;
      for (std::size_t i = 0; i < n; ++i) {
        term *= m[i][p[i]];
      }
      int inversions = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          inversions += p[i] > p[j];
        }
      }
      total += inversions % 2 ? -term : term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
  }

  // gcd of all k x k minors (0 if all vanish).
  inline long long determinantal_divisor(Mat const& m, std::size_t k) {
    std::size_t const r = m.size(), c = m[0].size();
    long long         g = 0;
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + k, true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + k, true);
      do {
        Mat sub;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rs[i]) {
            continue;
          }
          std::vector<long long> row;
          for (std::size_t j = 0; j < c; ++j) {
            if (cs[j]) {
              row.push_back(m[i][j]);
            }
          }
          sub.push_back(row);
        }
        g = std::gcd(g, std::llabs(leibniz_det(sub)));
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    return g;
  }

  // Invariant factors d_k = D_k / D_{k-1} of the nonzero part.
  inline std::vector<long long> invariant_factors(Mat const& m) {
    std::vector<long long> out;
    long long              prev = 1;
    for (std::size_t k = 1; k <= std::min(m.size(), m[0].size()); ++k) {
      long long const d = determinantal_divisor(m, k);
      if (d == 0) {
        break;
      }
      out.push_back(d / prev);
      prev = d;
    }
    return out;
  }

  // Number of paths of length d from `from` to `to`, by walking edges.
  inline long long count_paths(leavitt::Graph const& g, std::size_t d,
                               leavitt::VertexIndex from, leavitt::VertexIndex to) {
    if (d == 0) {
      return from == to ? 1 : 0;
    }
    long long n = 0;
    for (auto const& e : g.edges()) {
      if (e.source == from) {
        n += count_paths(g, d - 1, e.range, to);
      }
    }
    return n;
  }

  // Multigraph isomorphism ignoring names: some vertex bijection matches all
  // edge multiplicities.
  inline bool isomorphic(leavitt::Graph const& a, leavitt::Graph const& b) {
    std::size_t const n = a.num_vertices();
    if (n != b.num_vertices() || a.num_edges() != b.num_edges()) {
      return false;
    }
    Mat ma(n, std::vector<long long>(n, 0)), mb = ma;
    for (auto const& e : a.edges()) {
      ++ma[e.source][e.range];
    }
    for (auto const& e : b.edges()) {
      ++mb[e.source][e.range];
    }
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        for (std::size_t j = 0; j < n && ok; ++j) {
          ok = ma[i][j] == mb[p[i]][p[j]];
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

  // Random graph on n vertices with up to max_par parallel edges per pair.
  inline leavitt::Graph random_graph(std::mt19937_64& rng, std::size_t n, int max_par,
                                     double density = 0.5) {
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < n; ++i) {
      vs.push_back("v" + std::to_string(i));
    }
    std::vector<leavitt::Edge>             es;
    std::bernoulli_distribution            present(density);
    std::uniform_int_distribution<int>     mult(1, max_par);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!present(rng)) {
          continue;
        }
        int const k = mult(rng);
        for (int c = 0; c < k; ++c) {
          es.push_back({"e" + std::to_string(es.size()), static_cast<leavitt::VertexIndex>(i),
                        static_cast<leavitt::VertexIndex>(j)});
        }
      }
    }
    return leavitt::Graph(vs, es);
  }

  inline bool essential(leavitt::Graph const& g) {
    std::vector<int> in(g.num_vertices(), 0), out(g.num_vertices(), 0);
    for (auto const& e : g.edges()) {
      ++out[e.source];
      ++in[e.range];
    }
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      if (in[v] == 0 || out[v] == 0) {
        return false;
      }
    }
    return true;
  }

  inline leavitt::Graph random_essential_graph(std::mt19937_64& rng, std::size_t max_n,
                                               int max_par) {
    std::uniform_int_distribution<std::size_t> size(1, max_n);
    while (true) {
      leavitt::Graph g = random_graph(rng, size(rng), max_par);
      if (essential(g)) {
        return g;
      }
    }
  }

  // Random square nonnegative matrix with no zero row or column.
  inline Mat random_essential_matrix(std::mt19937_64& rng, std::size_t max_n, int max_entry) {
    std::uniform_int_distribution<std::size_t> size(1, max_n);
    std::uniform_int_distribution<int>         entry(0, max_entry);
    while (true) {
      std::size_t const n = size(rng);
      Mat               m(n, std::vector<long long>(n));
      for (auto& row : m) {
        for (auto& x : row) {
          x = entry(rng);
        }
      }
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        long long rs = 0, cs = 0;
        for (std::size_t j = 0; j < n; ++j) {
          rs += m[i][j];
          cs += m[j][i];
        }
        ok = rs > 0 && cs > 0;
      }
      if (ok) {
        return m;
      }
    }
  }

}  // namespace oracle

#endif  // LEAVITT_TESTS_ORACLES_HPP_
