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

#ifndef LEAVITT_LPA_HPP_
#define LEAVITT_LPA_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leavitt/graph.hpp"
#include "leavitt/intmatrix.hpp"
#include "leavitt/tower.hpp"

namespace leavitt {

  // gamma mu*, with r(gamma) = r(mu). A vertex v is (v, v).
  struct Monomial {
    Path gamma;
    Path mu;

    long degree() const noexcept {
      return static_cast<long>(gamma.length()) - static_cast<long>(mu.length());
    }
    auto operator<=>(Monomial const&) const = default;
    bool operator==(Monomial const&) const  = default;
  };

  enum class RewriteOrder { kLongestFirst, kShortestFirst, kRandom };

  // Element of L(E) over Q. Arithmetic always returns normal forms; raw
  // (unreduced) elements only come from from_terms and multiply_raw.
  class LpaElem {
   public:
    using Terms = std::map<Monomial, Rational>;

    explicit LpaElem(std::shared_ptr<Graph const> g) : _graph(std::move(g)) {}
    LpaElem(std::shared_ptr<Graph const> g, Terms terms);

    static LpaElem from_terms(std::shared_ptr<Graph const> g, Terms terms);
    static LpaElem monomial(std::shared_ptr<Graph const> g, Path gamma, Path mu,
                            Rational c = 1);
    static LpaElem scalar(std::shared_ptr<Graph const> g, Rational c);
    static LpaElem one(std::shared_ptr<Graph const> g);
    static LpaElem vertex(std::shared_ptr<Graph const> g, VertexIndex v);
    static LpaElem edge(std::shared_ptr<Graph const> g, EdgeIndex e);
    static LpaElem ghost(std::shared_ptr<Graph const> g, EdgeIndex e);

    Graph const& graph() const noexcept {
      return *_graph;
    }
    std::shared_ptr<Graph const> const& graph_ptr() const noexcept {
      return _graph;
    }
    Terms const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    bool is_canonical() const;
    bool is_homogeneous(long degree) const;
    // longest path occurring on either side
    std::size_t max_length() const;

    LpaElem operator+(LpaElem const& y) const;
    LpaElem operator-(LpaElem const& y) const;
    LpaElem operator-() const;
    LpaElem operator*(Rational const& q) const;
    bool    operator==(LpaElem const& y) const;
    bool    operator!=(LpaElem const& y) const {
      return !(*this == y);
    }

    std::string to_string() const;

   private:
    std::shared_ptr<Graph const> _graph;
    Terms                        _terms;
  };

  // The special edge of a non-sink vertex is its lowest-index outgoing edge.
  bool is_reducible(Graph const& g, Monomial const& m);

  LpaElem normal_form(LpaElem const& x,
                      RewriteOrder   order = RewriteOrder::kLongestFirst,
                      std::uint64_t  seed  = 0);

  LpaElem multiply(LpaElem const& x, LpaElem const& y);
  // product of monomials by the overlap rule, without reduction
  LpaElem multiply_raw(LpaElem const& x, LpaElem const& y);
  LpaElem star(LpaElem const& x);
  LpaElem power(LpaElem const& x, unsigned n);
  std::map<long, LpaElem> degree_components(LpaElem const& x);

  LpaElem t_plus(std::shared_ptr<Graph const> g, ChosenEdges const& c);
  LpaElem t_minus(std::shared_ptr<Graph const> g, ChosenEdges const& c);
  LpaElem t_plus(std::shared_ptr<Graph const> g);
  LpaElem t_minus(std::shared_ptr<Graph const> g);
  // t+ x t-
  LpaElem lpa_alpha(LpaElem const& x, ChosenEdges const& c);

  LpaElem from_matricial(MatricialElem const& x);
  // Degree-0 element as a level-n matrix; throws if some monomial is longer
  // than n or not of degree 0.
  MatricialElem to_matricial(LpaElem const& x, Tower const& t, std::size_t n);
  // Inverse of a degree-0 element, computed inside the level spanned by its
  // monomials.
  std::optional<LpaElem> inverse(LpaElem const& x);

  LpaElem parse_lpa(std::shared_ptr<Graph const> g, std::string_view text);

  ////////////////////////////////////////////////////////////////////////
  // theta_{u,z}
  ////////////////////////////////////////////////////////////////////////

  struct ThetaData {
    LpaElem u, z, u_inv, z_inv;
  };

  // Checks degree 0, invertibility and z (u v u^-1) = (u v u^-1) z for all v.
  ThetaData make_theta_data(LpaElem u, LpaElem z);

  class Theta {
   public:
    explicit Theta(ThetaData d);

    ThetaData const& data() const noexcept {
      return _d;
    }
    LpaElem const& on_vertex(VertexIndex v) const {
      return _vertex.at(v);
    }
    LpaElem const& on_edge(EdgeIndex e) const {
      return _edge.at(e);
    }
    LpaElem const& on_ghost(EdgeIndex e) const {
      return _ghost.at(e);
    }
    LpaElem on_path(Path const& p) const;
    LpaElem on_ghost_path(Path const& p) const;
    LpaElem operator()(LpaElem const& x) const;

   private:
    ThetaData            _d;
    std::vector<LpaElem> _vertex, _edge, _ghost;
  };

  LpaElem theta(ThetaData const& d, LpaElem const& x);

  struct ConjugatorReport {
    std::size_t n = 0;
    LpaElem     u_n, u_n_inv;
    std::size_t units_checked = 0;
    bool        pass          = false;
    std::string violation;
  };

  // u_n = sum over Q_n of u^gamma and its inverse from the dagger formula;
  // then theta(x) = u_n x u_n^-1 on every matrix unit x of M(E)_n.
  ConjugatorReport local_conjugator(ThetaData const& d, std::size_t n);

  struct GeneratorImages {
    std::vector<LpaElem> vertices, edges, ghosts;
  };

  GeneratorImages generator_images(Theta const& th);
  bool            agree_on_generators(Theta const& th, GeneratorImages const& images,
                                      std::string* detail);

  // a0 = phi(t+) t-, zeta = alpha(u) u^-1 a0, z = t- zeta t+.
  ThetaData decompose_graded_auto(GeneratorImages const& images, LpaElem const& u);

  bool kernel_test(LpaElem const& u, LpaElem const& z);

}  // namespace leavitt

#endif  // LEAVITT_LPA_HPP_
