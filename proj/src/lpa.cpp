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

#include "leavitt/lpa.hpp"

#include <algorithm>
#include <iterator>
#include <random>
#include <set>
#include <sstream>

#include "leavitt/error.hpp"

namespace leavitt {

  namespace {
    Path append(Path p, EdgeIndex e) {
      p.edges.push_back(e);
      return p;
    }

    Path append(Path p, std::vector<EdgeIndex>::const_iterator first,
                std::vector<EdgeIndex>::const_iterator last) {
      p.edges.insert(p.edges.end(), first, last);
      return p;
    }

    void add_term(LpaElem::Terms& t, Monomial m, Rational const& c) {
      if (c == 0) {
        return;
      }
      auto [it, fresh] = t.try_emplace(std::move(m), c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) {
          t.erase(it);
        }
      }
    }

    void check_graph(LpaElem const& x, LpaElem const& y) {
      if (x.graph_ptr() != y.graph_ptr() && !(x.graph() == y.graph())) {
        throw_input("elements live over different graphs");
      }
    }

    // validates composability and normalizes the source of a path
    Path checked_path(Graph const& g, Path p) {
      for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (p.edges[i] >= g.num_edges()) {
          throw_input("edge index out of range");
        }
        if (i > 0 && g.edge(p.edges[i - 1]).range != g.edge(p.edges[i]).source) {
          throw_input("edges do not form a path");
        }
      }
      if (!p.edges.empty()) {
        p.source = g.edge(p.edges.front()).source;
      } else if (p.source >= g.num_vertices()) {
        throw_input("vertex index out of range");
      }
      return p;
    }

    std::size_t total_length(Monomial const& m) {
      return m.gamma.length() + m.mu.length();
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // LpaElem
  ////////////////////////////////////////////////////////////////////////

  LpaElem::LpaElem(std::shared_ptr<Graph const> g, Terms terms)
      : _graph(std::move(g)) {
    *this = normal_form(from_terms(_graph, std::move(terms)));
  }

  LpaElem LpaElem::from_terms(std::shared_ptr<Graph const> g, Terms terms) {
    LpaElem x(std::move(g));
    for (auto& [m, c] : terms) {
      c.canonicalize();  // callers may hand in unreduced fractions
      if (c != 0) {
        x._terms.emplace(m, c);
      }
    }
    return x;
  }

  LpaElem LpaElem::monomial(std::shared_ptr<Graph const> g, Path gamma, Path mu,
                            Rational c) {
    gamma = checked_path(*g, std::move(gamma));
    mu    = checked_path(*g, std::move(mu));
    if (gamma.range(*g) != mu.range(*g)) {
      throw_input("monomial gamma mu* needs r(gamma) = r(mu)");
    }
    Terms t;
    add_term(t, Monomial{std::move(gamma), std::move(mu)}, c);
    return LpaElem(std::move(g), std::move(t));
  }

  LpaElem LpaElem::scalar(std::shared_ptr<Graph const> g, Rational c) {
    Terms t;
    for (VertexIndex v = 0; v < g->num_vertices(); ++v) {
      add_term(t, Monomial{vertex_path(v), vertex_path(v)}, c);
    }
    return from_terms(std::move(g), std::move(t));
  }

  LpaElem LpaElem::one(std::shared_ptr<Graph const> g) {
    return scalar(std::move(g), 1);
  }

  LpaElem LpaElem::vertex(std::shared_ptr<Graph const> g, VertexIndex v) {
    return monomial(std::move(g), vertex_path(v), vertex_path(v));
  }

  LpaElem LpaElem::edge(std::shared_ptr<Graph const> g, EdgeIndex e) {
    Path const p = edge_path(*g, e);
    VertexIndex const r = g->edge(e).range;
    return monomial(std::move(g), p, vertex_path(r));
  }

  LpaElem LpaElem::ghost(std::shared_ptr<Graph const> g, EdgeIndex e) {
    Path const p = edge_path(*g, e);
    VertexIndex const r = g->edge(e).range;
    return monomial(std::move(g), vertex_path(r), p);
  }

  bool LpaElem::is_canonical() const {
    return std::none_of(_terms.begin(), _terms.end(), [&](auto const& t) {
      return is_reducible(*_graph, t.first);
    });
  }

  bool LpaElem::is_homogeneous(long degree) const {
    return std::all_of(_terms.begin(), _terms.end(),
                       [&](auto const& t) { return t.first.degree() == degree; });
  }

  std::size_t LpaElem::max_length() const {
    std::size_t n = 0;
    for (auto const& [m, c] : _terms) {
      n = std::max({n, m.gamma.length(), m.mu.length()});
    }
    return n;
  }

  LpaElem LpaElem::operator+(LpaElem const& y) const {
    check_graph(*this, y);
    LpaElem out = *this;
    for (auto const& [m, c] : y._terms) {
      add_term(out._terms, m, c);
    }
    return out.is_canonical() ? out : normal_form(out);
  }

  LpaElem LpaElem::operator-(LpaElem const& y) const {
    return *this + (-y);
  }

  LpaElem LpaElem::operator-() const {
    return *this * Rational(-1);
  }

  LpaElem LpaElem::operator*(Rational const& q) const {
    LpaElem out(_graph);
    if (q == 0) {
      return out;
    }
    for (auto const& [m, c] : _terms) {
      out._terms.emplace(m, c * q);
    }
    return out;
  }

  bool LpaElem::operator==(LpaElem const& y) const {
    if (is_canonical() && y.is_canonical()) {
      return _terms == y._terms;
    }
    return normal_form(*this)._terms == normal_form(y)._terms;
  }

  std::string LpaElem::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    if (*this == one(_graph)) {
      return "1";
    }
    Graph const&       g = *_graph;
    std::ostringstream os;
    bool               first = true;
    for (auto const& [m, c] : _terms) {
      Rational a = c;
      if (first) {
        if (a < 0) {
          os << '-';
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        a = abs(a);
      }
      first = false;
      if (a != 1) {
        os << a.get_str() << ' ';
      }
      std::vector<std::string> parts;
      for (EdgeIndex e : m.gamma.edges) {
        parts.push_back(g.edge(e).id);
      }
      for (auto it = m.mu.edges.rbegin(); it != m.mu.edges.rend(); ++it) {
        parts.push_back(g.edge(*it).id + "*");
      }
      if (parts.empty()) {
        parts.push_back(g.vertex_id(m.gamma.source));
      }
      for (std::size_t i = 0; i < parts.size(); ++i) {
        os << (i ? " " : "") << parts[i];
      }
    }
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal form
  ////////////////////////////////////////////////////////////////////////

  bool is_reducible(Graph const& g, Monomial const& m) {
    if (m.gamma.edges.empty() || m.mu.edges.empty()) {
      return false;
    }
    EdgeIndex const f = m.gamma.edges.back();
    return f == m.mu.edges.back() && g.out_edges(g.edge(f).source).front() == f;
  }

  LpaElem normal_form(LpaElem const& x, RewriteOrder order, std::uint64_t seed) {
    Graph const& g = x.graph();
    using Key      = std::pair<std::size_t, Monomial>;
    std::map<Key, Rational> pending;
    LpaElem::Terms          done;

    auto push = [&](Monomial m, Rational const& c) {
      if (is_reducible(g, m)) {
        Key k{total_length(m), std::move(m)};
        auto [it, fresh] = pending.try_emplace(std::move(k), c);
        if (!fresh) {
          it->second += c;
          if (it->second == 0) {
            pending.erase(it);
          }
        }
      } else {
        add_term(done, std::move(m), c);
      }
    };
    for (auto const& [m, c] : x.terms()) {
      push(m, c);
    }

    std::mt19937_64 rng(seed);
    while (!pending.empty()) {
      auto it = pending.begin();
      switch (order) {
        case RewriteOrder::kLongestFirst:
          it = std::prev(pending.end());
          break;
        case RewriteOrder::kShortestFirst:
          break;
        case RewriteOrder::kRandom:
          std::advance(it, std::uniform_int_distribution<std::size_t>(
                               0, pending.size() - 1)(rng));
          break;
      }
      Monomial const m = it->first.second;
      Rational const c = it->second;
      pending.erase(it);

      // (g'f)(m'f)* -> g'm'* - sum over e != f leaving s(f) of (g'e)(m'e)*
      Path gp = m.gamma;
      Path mp = m.mu;
      EdgeIndex const f = gp.edges.back();
      gp.edges.pop_back();
      mp.edges.pop_back();
      for (EdgeIndex e : g.out_edges(g.edge(f).source)) {
        if (e != f) {
          push(Monomial{append(gp, e), append(mp, e)}, -c);
        }
      }
      push(Monomial{std::move(gp), std::move(mp)}, c);
    }
    return LpaElem::from_terms(x.graph_ptr(), std::move(done));
  }

  ////////////////////////////////////////////////////////////////////////
  // Products
  ////////////////////////////////////////////////////////////////////////

  LpaElem multiply_raw(LpaElem const& x, LpaElem const& y) {
    check_graph(x, y);
    Graph const& g = x.graph();
    constexpr std::int64_t kNoEdge = -1;
    // y's terms bucketed by (source, first edge of gamma)
    std::map<std::pair<VertexIndex, std::int64_t>,
             std::vector<LpaElem::Terms::value_type const*>>
        by_first;
    std::map<VertexIndex, std::vector<LpaElem::Terms::value_type const*>> by_source;
    for (auto const& t : y.terms()) {
      Path const& gm = t.first.gamma;
      by_first[{gm.source, gm.edges.empty() ? kNoEdge : std::int64_t(gm.edges.front())}]
          .push_back(&t);
      by_source[gm.source].push_back(&t);
    }
    static std::vector<LpaElem::Terms::value_type const*> const kEmpty;
    auto bucket = [&](VertexIndex v, std::int64_t e) -> auto const& {
      auto it = by_first.find({v, e});
      return it == by_first.end() ? kEmpty : it->second;
    };

    LpaElem::Terms out;
    auto           mult = [&](Monomial const& a, Rational const& ca,
                    LpaElem::Terms::value_type const* bt) {
      Monomial const& b   = bt->first;
      auto const&     m1  = a.mu.edges;
      auto const&     g2  = b.gamma.edges;
      Rational const  c   = ca * bt->second;
      if (m1.size() <= g2.size()) {
        if (std::equal(m1.begin(), m1.end(), g2.begin())) {
          add_term(out, Monomial{append(a.gamma, g2.begin() + m1.size(), g2.end()), b.mu},
                   c);
        }
      } else if (std::equal(g2.begin(), g2.end(), m1.begin())) {
        add_term(out, Monomial{a.gamma, append(b.mu, m1.begin() + g2.size(), m1.end())},
                 c);
      }
    };
    for (auto const& [a, ca] : x.terms()) {
      VertexIndex const v = a.mu.source;
      if (a.mu.edges.empty()) {
        auto it = by_source.find(v);
        if (it != by_source.end()) {
          for (auto const* bt : it->second) {
            mult(a, ca, bt);
          }
        }
      } else {
        for (auto const* bt : bucket(v, kNoEdge)) {
          mult(a, ca, bt);
        }
        for (auto const* bt : bucket(v, a.mu.edges.front())) {
          mult(a, ca, bt);
        }
      }
    }
    (void)g;
    return LpaElem::from_terms(x.graph_ptr(), std::move(out));
  }

  LpaElem multiply(LpaElem const& x, LpaElem const& y) {
    return normal_form(multiply_raw(x, y));
  }

  LpaElem star(LpaElem const& x) {
    LpaElem::Terms t;
    for (auto const& [m, c] : x.terms()) {
      t.emplace(Monomial{m.mu, m.gamma}, c);
    }
    return normal_form(LpaElem::from_terms(x.graph_ptr(), std::move(t)));
  }

  LpaElem power(LpaElem const& x, unsigned n) {
    LpaElem out = LpaElem::one(x.graph_ptr());
    for (unsigned i = 0; i < n; ++i) {
      out = multiply(out, x);
    }
    return out;
  }

  std::map<long, LpaElem> degree_components(LpaElem const& x) {
    std::map<long, LpaElem::Terms> parts;
    for (auto const& [m, c] : x.terms()) {
      parts[m.degree()].emplace(m, c);
    }
    std::map<long, LpaElem> out;
    for (auto& [d, t] : parts) {
      out.emplace(d, LpaElem::from_terms(x.graph_ptr(), std::move(t)));
    }
    return out;
  }

  LpaElem t_plus(std::shared_ptr<Graph const> g, ChosenEdges const& c) {
    check_chosen_edges(*g, c);
    LpaElem out(g);
    for (EdgeIndex e : c.into) {
      out = out + LpaElem::edge(g, e);
    }
    return out;
  }

  LpaElem t_minus(std::shared_ptr<Graph const> g, ChosenEdges const& c) {
    return star(t_plus(std::move(g), c));
  }

  LpaElem t_plus(std::shared_ptr<Graph const> g) {
    ChosenEdges const c = default_chosen_edges(*g);
    return t_plus(std::move(g), c);
  }

  LpaElem t_minus(std::shared_ptr<Graph const> g) {
    ChosenEdges const c = default_chosen_edges(*g);
    return t_minus(std::move(g), c);
  }

  LpaElem lpa_alpha(LpaElem const& x, ChosenEdges const& c) {
    return multiply(multiply(t_plus(x.graph_ptr(), c), x), t_minus(x.graph_ptr(), c));
  }

  ////////////////////////////////////////////////////////////////////////
  // Matricial embedding
  ////////////////////////////////////////////////////////////////////////

  LpaElem from_matricial(MatricialElem const& x) {
    Level const&   lv = x.level();
    LpaElem::Terms t;
    for (auto const& [k, c] : x.terms()) {
      add_term(t, Monomial{lv.path(k.first), lv.path(k.second)}, c);
    }
    return normal_form(LpaElem::from_terms(lv.graph_ptr(), std::move(t)));
  }

  MatricialElem to_matricial(LpaElem const& x, Tower const& t, std::size_t n) {
    LevelPtr const target = t.level(n);
    std::map<std::size_t, std::vector<MatricialElem::Term>> by_length;
    for (auto const& [m, c] : x.terms()) {
      if (m.degree() != 0) {
        throw_input("element is not of degree 0");
      }
      if (m.gamma.length() > n) {
        throw_input("element does not live at level " + std::to_string(n));
      }
      LevelPtr const lv = t.level(m.gamma.length());
      auto           a  = lv->index_of(m.gamma);
      auto           b  = lv->index_of(m.mu);
      if (!a || !b || lv->block_of(*a) != lv->block_of(*b)) {
        throw_input("monomial is not a matrix unit of its level");
      }
      by_length[m.gamma.length()].push_back({{*a, *b}, c});
    }
    MatricialElem out(target);
    for (auto& [d, terms] : by_length) {
      out = out + connecting_map(MatricialElem(t.level(d), std::move(terms)), target);
    }
    return out;
  }

  std::optional<LpaElem> inverse(LpaElem const& x) {
    if (x.is_zero() || !x.is_homogeneous(0)) {
      return std::nullopt;
    }
    Tower const t(x.graph_ptr());
    auto        inv = inverse(to_matricial(x, t, x.max_length()));
    if (!inv) {
      return std::nullopt;
    }
    return from_matricial(*inv);
  }

  ////////////////////////////////////////////////////////////////////////
  // theta_{u,z}
  ////////////////////////////////////////////////////////////////////////

  ThetaData make_theta_data(LpaElem u, LpaElem z) {
    check_graph(u, z);
    auto const g = u.graph_ptr();
    if (g->has_sources()) {
      throw_input("theta needs a graph without sources");
    }
    if (!u.is_homogeneous(0) || !z.is_homogeneous(0)) {
      throw_input("u and z must be of degree 0");
    }
    auto ui = inverse(u);
    if (!ui) {
      throw_input("u is not invertible");
    }
    auto zi = inverse(z);
    if (!zi) {
      throw_input("z is not invertible");
    }
    for (VertexIndex v = 0; v < g->num_vertices(); ++v) {
      LpaElem const c = multiply(multiply(u, LpaElem::vertex(g, v)), *ui);
      if (multiply(z, c) != multiply(c, z)) {
        throw_input("z does not commute with u " + g->vertex_id(v) + " u^-1");
      }
    }
    return ThetaData{std::move(u), std::move(z), std::move(*ui), std::move(*zi)};
  }

  Theta::Theta(ThetaData d) : _d(std::move(d)) {
    auto const&  g  = _d.u.graph_ptr();
    for (VertexIndex v = 0; v < g->num_vertices(); ++v) {
      _vertex.push_back(multiply(multiply(_d.u, LpaElem::vertex(g, v)), _d.u_inv));
    }
    for (EdgeIndex e = 0; e < g->num_edges(); ++e) {
      LpaElem const ue = multiply(multiply(_d.u, LpaElem::edge(g, e)), _d.u_inv);
      LpaElem const ug = multiply(multiply(_d.u, LpaElem::ghost(g, e)), _d.u_inv);
      _edge.push_back(multiply(ue, _d.z));
      _ghost.push_back(multiply(_d.z_inv, ug));
    }
  }

  LpaElem Theta::on_path(Path const& p) const {
    if (p.edges.empty()) {
      return _vertex.at(p.source);
    }
    LpaElem out = _edge.at(p.edges.front());
    for (std::size_t i = 1; i < p.edges.size(); ++i) {
      out = multiply(out, _edge.at(p.edges[i]));
    }
    return out;
  }

  LpaElem Theta::on_ghost_path(Path const& p) const {
    if (p.edges.empty()) {
      return _vertex.at(p.source);
    }
    LpaElem out = _ghost.at(p.edges.back());
    for (std::size_t i = p.edges.size() - 1; i-- > 0;) {
      out = multiply(out, _ghost.at(p.edges[i]));
    }
    return out;
  }

  LpaElem Theta::operator()(LpaElem const& x) const {
    LpaElem out(x.graph_ptr());
    for (auto const& [m, c] : x.terms()) {
      LpaElem term = m.mu.edges.empty()      ? on_path(m.gamma)
                     : m.gamma.edges.empty() ? on_ghost_path(m.mu)
                                             : multiply(on_path(m.gamma), on_ghost_path(m.mu));
      out = out + term * c;
    }
    return out;
  }

  LpaElem theta(ThetaData const& d, LpaElem const& x) {
    return Theta(d)(x);
  }

  ConjugatorReport local_conjugator(ThetaData const& d, std::size_t n) {
    Theta const  th(d);
    auto const&  g = d.u.graph_ptr();
    LpaElem      un(g), uninv(g);
    for (Path const& gamma : q_paths(*g, n)) {
      if (gamma.edges.empty()) {
        LpaElem const v = LpaElem::vertex(g, gamma.source);
        un    = un + multiply(d.u, v);
        uninv = uninv + multiply(v, d.u_inv);
        continue;
      }
      // (u e1 u^-1) z ... (u e_{k-1} u^-1) z (u e_k) gamma*
      LpaElem const last  = LpaElem::edge(g, gamma.edges.back());
      LpaElem const gstar = LpaElem::monomial(g, vertex_path(gamma.range(*g)), gamma);
      LpaElem       head  = d.u;
      if (gamma.edges.size() > 1) {
        Path front = gamma;
        front.edges.pop_back();
        head = multiply(th.on_path(front), d.u);
      }
      un = un + multiply(multiply(head, last), gstar);
      // dagger: gamma u^-1 z theta(gamma*)
      LpaElem const gm = LpaElem::monomial(g, gamma, vertex_path(gamma.range(*g)));
      uninv = uninv
              + multiply(multiply(multiply(gm, d.u_inv), d.z), th.on_ghost_path(gamma));
    }

    LpaElem const    one = LpaElem::one(g);
    ConjugatorReport rep{n, std::move(un), std::move(uninv), 0, false, ""};
    if (multiply(rep.u_n, rep.u_n_inv) != one || multiply(rep.u_n_inv, rep.u_n) != one) {
      rep.violation = "u_n and its dagger sum are not mutually inverse";
      return rep;
    }
    Tower const    t(g);
    LevelPtr const lv = t.level(n);
    rep.pass          = true;
    for (std::size_t k = 0; k < lv->unit_count(); ++k) {
      auto const [a, c] = lv->unit_at(k);
      LpaElem const x   = LpaElem::monomial(g, lv->path(a), lv->path(c));
      ++rep.units_checked;
      if (th(x) != multiply(multiply(rep.u_n, x), rep.u_n_inv)) {
        rep.pass      = false;
        rep.violation = "theta(x) != u_n x u_n^-1 at x = "
                        + path_to_string(*g, lv->path(a)) + " (" + path_to_string(*g, lv->path(c))
                        + ")*";
        break;
      }
    }
    return rep;
  }

  GeneratorImages generator_images(Theta const& th) {
    Graph const&    g = th.data().u.graph();
    GeneratorImages out;
    for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
      out.vertices.push_back(th.on_vertex(v));
    }
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
      out.edges.push_back(th.on_edge(e));
      out.ghosts.push_back(th.on_ghost(e));
    }
    return out;
  }

  bool agree_on_generators(Theta const& th, GeneratorImages const& images,
                           std::string* detail) {
    Graph const& g = th.data().u.graph();
    if (images.vertices.size() != g.num_vertices() || images.edges.size() != g.num_edges()
        || images.ghosts.size() != g.num_edges()) {
      if (detail) {
        *detail = "image lists do not match the graph";
      }
      return false;
    }
    for (VertexIndex v = 0; v < g.num_vertices(); ++v) {
      if (th.on_vertex(v) != images.vertices[v]) {
        if (detail) {
          *detail = "disagreement on vertex " + g.vertex_id(v);
        }
        return false;
      }
    }
    for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
      if (th.on_edge(e) != images.edges[e]) {
        if (detail) {
          *detail = "disagreement on edge " + g.edge(e).id;
        }
        return false;
      }
      if (th.on_ghost(e) != images.ghosts[e]) {
        if (detail) {
          *detail = "disagreement on ghost edge " + g.edge(e).id + "*";
        }
        return false;
      }
    }
    return true;
  }

  ThetaData decompose_graded_auto(GeneratorImages const& images, LpaElem const& u) {
    auto const&       g = u.graph_ptr();
    ChosenEdges const c = default_chosen_edges(*g);
    if (images.edges.size() != g->num_edges()) {
      throw_input("edge images do not match the graph");
    }
    LpaElem phi_tp(g);
    for (EdgeIndex e : c.into) {
      phi_tp = phi_tp + images.edges[e];
    }
    LpaElem const tm = t_minus(g, c);
    LpaElem const tp = t_plus(g, c);
    LpaElem const a0 = multiply(phi_tp, tm);
    auto          ui = inverse(u);
    if (!ui) {
      throw_input("u is not invertible");
    }
    LpaElem const zeta = multiply(multiply(lpa_alpha(u, c), *ui), a0);
    LpaElem const z    = multiply(multiply(tm, zeta), tp);
    if (!inverse(z)) {
      throw_verification("zeta is not invertible in the corner p M(E) p");
    }
    ThetaData   d = make_theta_data(u, z);
    std::string detail;
    if (!agree_on_generators(Theta(d), images, &detail)) {
      throw_verification("theta(u, z) does not reproduce the input: " + detail);
    }
    return d;
  }

  bool kernel_test(LpaElem const& u, LpaElem const& z) {
    if (!u.is_homogeneous(0) || !z.is_homogeneous(0)) {
      return false;
    }
    auto ui = inverse(u);
    auto zi = inverse(z);
    if (!ui || !zi) {
      return false;
    }
    auto const&       g = u.graph_ptr();
    std::size_t const n = u.max_length();
    Tower const       t(g);
    MatricialElem const m  = to_matricial(u, t, n);
    Level const&        lv = m.level();

    // u must be a scalar on every block of its level
    std::vector<std::optional<Rational>> coef(lv.blocks().size());
    for (std::size_t b = 0; b < lv.blocks().size(); ++b) {
      coef[b] = m.coefficient(lv.blocks()[b].begin, lv.blocks()[b].begin);
    }
    for (auto const& [k, c] : m.terms()) {
      if (k.first != k.second || c != *coef[lv.block_of(k.first)]) {
        return false;
      }
    }
    for (std::size_t b = 0; b < lv.blocks().size(); ++b) {
      for (PathId p = lv.blocks()[b].begin; p < lv.blocks()[b].begin + lv.blocks()[b].size;
           ++p) {
        if (m.coefficient(p, p) != *coef[b]) {
          return false;
        }
      }
    }
    // and stay block-scalar through the connecting maps: the length-n blocks
    // feed the blocks of their out-neighbours at the next level
    std::vector<std::optional<Rational>> top(g->num_vertices());
    for (std::size_t b = 0; b < lv.blocks().size(); ++b) {
      if (lv.blocks()[b].length == n) {
        top[lv.blocks()[b].range] = coef[b];
      }
    }
    std::set<std::vector<std::string>> seen;
    while (true) {
      std::vector<std::string> key;
      for (auto const& x : top) {
        key.push_back(x ? x->get_str() : "-");
      }
      if (!seen.insert(key).second) {
        break;
      }
      std::vector<std::optional<Rational>> next(g->num_vertices());
      for (auto const& e : g->edges()) {
        auto const& cv = top[e.source];
        if (!cv) {
          continue;
        }
        if (next[e.range] && *next[e.range] != *cv) {
          return false;
        }
        next[e.range] = cv;
      }
      top = std::move(next);
    }

    for (EdgeIndex e = 0; e < g->num_edges(); ++e) {
      LpaElem const x = LpaElem::edge(g, e);
      if (multiply(multiply(u, x), *ui) != multiply(x, *zi)) {
        return false;
      }
    }
    return true;
  }

}  // namespace leavitt
