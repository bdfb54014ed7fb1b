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

#include "leavitt/lift.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <limits>
#include <random>
#include <sstream>

#include "leavitt/error.hpp"

namespace leavitt {

  namespace {
    constexpr PathId kUnset = std::numeric_limits<PathId>::max();

    std::size_t as_size(Integer const& x) {
      return x.get_ui();
    }

    // Offsets of the (j, q) and (i, r) orderings.
    class Layout {
     public:
      explicit Layout(ShiftEquivalence const& se)
          : _s(se.s()), _r(se.r()), _n(se.a().rows()), _m(se.b().rows()) {}

      std::size_t n() const {
        return _n;
      }
      std::size_t m() const {
        return _m;
      }
      std::size_t s(std::size_t j, std::size_t i) const {
        return as_size(_s(j, i));
      }
      std::size_t r(std::size_t i, std::size_t j) const {
        return as_size(_r(i, j));
      }
      // position of (j, 0) in the image of an E-path ending at v_c
      std::size_t off_s(std::size_t c, std::size_t j) const {
        std::size_t o = 0;
        for (std::size_t jp = 0; jp < j; ++jp) {
          o += s(jp, c);
        }
        return o;
      }
      std::size_t width_s(std::size_t c) const {
        return off_s(c, _m);
      }
      // position of (i, 0) in the image of an F-path ending at w_j
      std::size_t off_r(std::size_t j, std::size_t i) const {
        std::size_t o = 0;
        for (std::size_t ip = 0; ip < i; ++ip) {
          o += r(ip, j);
        }
        return o;
      }
      std::size_t width_r(std::size_t j) const {
        return off_r(j, _n);
      }
      // index of (i, p, q) in w_t F^l w_j
      std::size_t bridge_index(std::size_t j,
                               std::size_t t,
                               std::size_t i,
                               std::size_t p,
                               std::size_t q) const {
        std::size_t o = 0;
        for (std::size_t ip = 0; ip < i; ++ip) {
          o += r(ip, t) * s(j, ip);
        }
        return o + p * s(j, i) + q;
      }
      // which j owns position pos in an E-image ending at v_c
      std::size_t owner_s(std::size_t c, std::size_t pos) const {
        std::size_t j = 0;
        while (pos >= s(j, c)) {
          pos -= s(j, c);
          ++j;
        }
        return j;
      }
      std::size_t owner_r(std::size_t j, std::size_t pos) const {
        std::size_t i = 0;
        while (pos >= r(i, j)) {
          pos -= r(i, j);
          ++i;
        }
        return i;
      }

     private:
      IntMatrix const& _s;
      IntMatrix const& _r;
      std::size_t      _n, _m;
    };

    class Shuffler {
     public:
      explicit Shuffler(std::uint64_t seed) : _seed(seed), _rng(seed) {}
      template <typename T>
      void operator()(std::vector<T>& v) {
        if (_seed != 0) {
          std::shuffle(v.begin(), v.end(), _rng);
        }
      }

     private:
      std::uint64_t   _seed;
      std::mt19937_64 _rng;
    };

    // Refuses levels whose largest block would exceed the guard; the block
    // sizes are read off A^n 1 before anything is enumerated.
    LevelPtr guarded_level(Tower const& t, IntMatrix const& a, std::size_t n,
                           std::size_t guard) {
      IntVector const sizes = a.pow(n).apply(ones(a.rows()));
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] > static_cast<unsigned long>(guard)) {
          throw Error(ErrorCode::kBoundExceeded,
                      "level " + std::to_string(n) + " has a block of "
                          + sizes[i].get_str() + " paths (guard "
                          + std::to_string(guard) + ")");
        }
      }
      return t.level(n);
    }

    PathId id_of(Level const& lv, Path const& p) {
      auto id = lv.index_of(p);
      if (!id) {
        throw_verification("path " + path_to_string(lv.graph(), p)
                           + " is not in level " + std::to_string(lv.n()));
      }
      return *id;
    }

    std::vector<PathId> block_ids(Level const& lv, VertexIndex v) {
      std::vector<PathId> out;
      auto                b = lv.block_for_vertex(v);
      if (b) {
        auto const& blk = lv.blocks()[*b];
        for (PathId p = blk.begin; p < blk.begin + blk.size; ++p) {
          out.push_back(p);
        }
      }
      return out;
    }

    std::vector<PathId> ids_of(Level const& lv, std::vector<Path> const& paths) {
      std::vector<PathId> out;
      for (auto const& p : paths) {
        out.push_back(id_of(lv, p));
      }
      return out;
    }

    PathTable empty_table(LevelPtr src, LevelPtr dst) {
      PathTable t{src, dst, {}};
      t.images.resize(src->paths().size());
      return t;
    }

    [[noreturn]] void not_unital(std::size_t j, std::size_t have, std::size_t want) {
      throw Error(ErrorCode::kNotUnital,
                  "unit condition fails at row j=" + std::to_string(j)
                      + ": |F^m w_j| = " + std::to_string(have)
                      + " but row sum of S is " + std::to_string(want));
    }
  }  // namespace

  LiftInput make_lift_input(std::shared_ptr<Graph const> e,
                            std::shared_ptr<Graph const> f,
                            ShiftEquivalence             se,
                            std::size_t                  m,
                            std::uint64_t                seed,
                            ChosenEdges                  e_edges,
                            ChosenEdges                  f_edges,
                            std::size_t                  block_guard) {
    if (!e || !f) {
      throw_input("lift needs two graphs");
    }
    if (!classify_vertices(*e).essential || !classify_vertices(*f).essential) {
      throw_input("lift needs essential graphs (no sources, no sinks)");
    }
    if (!(se.a() == adjacency(*e, true)) || !(se.b() == adjacency(*f, true))) {
      throw Error(ErrorCode::kInvalidCertificate,
                  "certificate matrices are not the working matrices of the graphs");
    }
    if (m == 0) {
      throw_input("lift needs m >= 1; normalize the certificate first");
    }
    IntVector const lhs = se.s().apply(ones(se.a().rows()));
    IntVector const rhs = se.b().pow(m).apply(ones(se.b().rows()));
    for (std::size_t j = 0; j < lhs.size(); ++j) {
      if (lhs[j] != rhs[j]) {
        not_unital(j, as_size(rhs[j]), as_size(lhs[j]));
      }
    }
    if (e_edges.into.empty()) {
      e_edges = default_chosen_edges(*e);
    }
    if (f_edges.into.empty()) {
      f_edges = default_chosen_edges(*f);
    }
    check_chosen_edges(*e, e_edges);
    check_chosen_edges(*f, f_edges);
    return LiftInput{std::move(e), std::move(f), std::move(se), m,
                     std::move(e_edges), std::move(f_edges), seed, block_guard};
  }

  ////////////////////////////////////////////////////////////////////////
  // Base tables
  ////////////////////////////////////////////////////////////////////////

  PartitionTables base_partitions(LiftInput const& input) {
    PartitionTables t{input,
                      std::make_shared<Tower>(input.e),
                      std::make_shared<Tower>(input.f),
                      {},
                      {},
                      {},
                      {},
                      0};
    Graph const&      ge = *input.e;
    Graph const&      gf = *input.f;
    Layout const      lay(input.se);
    std::size_t const n = lay.n(), mm = lay.m(), l = input.se.lag(), m = input.m;
    IntMatrix const&  a = input.se.a();
    IntMatrix const&  b = input.se.b();
    Shuffler          shuffle(input.seed);

    LevelPtr const e0 = guarded_level(*t.tower_e, a, 0, input.block_guard);
    LevelPtr const e1 = guarded_level(*t.tower_e, a, 1, input.block_guard);
    LevelPtr const el = guarded_level(*t.tower_e, a, l, input.block_guard);
    LevelPtr const fm = guarded_level(*t.tower_f, b, m, input.block_guard);
    LevelPtr const f1 = guarded_level(*t.tower_f, b, m + 1, input.block_guard);

    // lambda0: slice F^m w_j by s_{ji}
    PathTable lam0 = empty_table(e0, fm);
    for (VertexIndex i = 0; i < n; ++i) {
      lam0.images[id_of(*e0, vertex_path(i))].assign(lay.width_s(i), kUnset);
    }
    for (std::size_t j = 0; j < mm; ++j) {
      std::vector<PathId> pool = block_ids(*fm, j);
      std::size_t         want = 0;
      for (std::size_t i = 0; i < n; ++i) {
        want += lay.s(j, i);
      }
      if (want != pool.size()) {
        not_unital(j, pool.size(), want);
      }
      shuffle(pool);
      std::size_t pos = 0;
      for (VertexIndex i = 0; i < n; ++i) {
        auto& img = lam0.images[id_of(*e0, vertex_path(i))];
        for (std::size_t q = 0; q < lay.s(j, i); ++q) {
          img[lay.off_s(i, j) + q] = pool[pos++];
        }
      }
    }

    // lambda1: chosen edges forced to hats, the rest sliced in edge order
    PathTable lam1 = empty_table(e1, f1);
    for (EdgeIndex e = 0; e < ge.num_edges(); ++e) {
      lam1.images[id_of(*e1, edge_path(ge, e))].assign(
          lay.width_s(ge.edge(e).range), kUnset);
    }
    for (std::size_t j = 0; j < mm; ++j) {
      std::vector<PathId> pool = block_ids(*f1, j);
      std::vector<char>   used(f1->paths().size(), 0);
      for (VertexIndex k = 0; k < n; ++k) {
        auto const& src = lam0.images[id_of(*e0, vertex_path(k))];
        auto&       img = lam1.images[id_of(*e1, edge_path(ge, input.e_edges.into[k]))];
        for (std::size_t q = 0; q < lay.s(j, k); ++q) {
          PathId const h = id_of(*f1, hat(gf, input.f_edges, fm->path(src[lay.off_s(k, j) + q])));
          if (used[h]) {
            throw_verification("forced lambda1 entries collide");
          }
          used[h]                     = 1;
          img[lay.off_s(k, j) + q] = h;
        }
      }
      std::vector<PathId> rest;
      for (PathId p : pool) {
        if (!used[p]) {
          rest.push_back(p);
        }
      }
      shuffle(rest);
      std::size_t pos = 0;
      for (EdgeIndex e = 0; e < ge.num_edges(); ++e) {
        VertexIndex const k = ge.edge(e).range;
        if (input.e_edges.into[k] == e) {
          continue;
        }
        auto& img = lam1.images[id_of(*e1, edge_path(ge, e))];
        for (std::size_t q = 0; q < lay.s(j, k); ++q) {
          if (pos == rest.size()) {
            throw_verification("F^(m+1) w_j too small for the lambda1 slices");
          }
          img[lay.off_s(k, j) + q] = rest[pos++];
        }
      }
      if (pos != rest.size()) {
        throw_verification("lambda1 slices leave paths of F^(m+1) w_j unused");
      }
    }

    // gamma0: slice v_k E^l v_i over (j, lambda in Lambda_j^{m,v_k}), r_ij each
    PathTable gam0 = empty_table(fm, el);
    for (PathId p = 0; p < fm->paths().size(); ++p) {
      gam0.images[p].assign(lay.width_r(fm->path(p).range(gf)), kUnset);
    }
    for (VertexIndex k = 0; k < n; ++k) {
      auto const& lam = lam0.images[id_of(*e0, vertex_path(k))];
      for (VertexIndex i = 0; i < n; ++i) {
        std::vector<PathId> pool = ids_of(*el, enumerate_paths(ge, l, k, i));
        shuffle(pool);
        std::size_t pos = 0;
        for (std::size_t j = 0; j < mm; ++j) {
          for (std::size_t q = 0; q < lay.s(j, k); ++q) {
            auto& img = gam0.images[lam[lay.off_s(k, j) + q]];
            for (std::size_t r = 0; r < lay.r(i, j); ++r) {
              if (pos == pool.size()) {
                throw_verification("v_k E^l v_i too small for the gamma0 slices");
              }
              img[lay.off_r(j, i) + r] = pool[pos++];
            }
          }
        }
        if (pos != pool.size()) {
          throw_verification("gamma0 slices leave paths of v_k E^l v_i unused");
        }
      }
    }

    // bridge: w_t F^l w_j indexed by (i, p, q)
    t.bridge.assign(mm, std::vector<std::vector<Path>>(mm));
    for (std::size_t j = 0; j < mm; ++j) {
      for (std::size_t tt = 0; tt < mm; ++tt) {
        auto        pool = enumerate_paths(gf, l, tt, j);
        std::size_t want = 0;
        for (std::size_t i = 0; i < n; ++i) {
          want += lay.r(i, tt) * lay.s(j, i);
        }
        if (want != pool.size()) {
          throw_verification("|w_t F^l w_j| differs from (SR)_jt");
        }
        shuffle(pool);
        t.bridge[j][tt] = std::move(pool);
      }
    }

    t.gamma0 = std::move(gam0);
    t.phi.push_back({std::move(lam0), std::move(lam1)});
    t.psi.push_back({PathTable{}, PathTable{}});
    for (auto const& c : check_tables(t)) {
      if (!c.pass) {
        throw_verification("base table check '" + c.name + "' failed: " + c.detail);
      }
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Derived tables
  ////////////////////////////////////////////////////////////////////////

  PartitionTables extend_tables(PartitionTables t, std::size_t depth) {
    Graph const&      ge = *t.input.e;
    Graph const&      gf = *t.input.f;
    Layout const      lay(t.input.se);
    std::size_t const n = lay.n(), mm = lay.m(), l = t.input.se.lag(), m = t.input.m;
    IntMatrix const&  a = t.input.se.a();
    IntMatrix const&  b = t.input.se.b();
    Level const&      e0 = *t.tower_e->level(0);
    Level const&      el = *t.tower_e->level(l);
    t.phi.reserve(depth + 1);
    t.psi.reserve(depth + 1);
    PathTable const& lam0 = t.phi[0][0];

    for (std::size_t k = t.depth + 1; k <= depth; ++k) {
      std::array<PathTable, 2> psi_k, phi_k;
      for (int eps = 0; eps < 2; ++eps) {
        PathTable const& prev = t.phi[k - 1][eps];
        LevelPtr const   fsrc = prev.target;  // F_{m+(k-1)l+eps}
        LevelPtr const   edst =
            guarded_level(*t.tower_e, a, k * l + eps, t.input.block_guard);
        LevelPtr const fdst =
            guarded_level(*t.tower_f, b, m + k * l + eps, t.input.block_guard);

        // gamma_{ir}(lambda_{jq}(gamma)) = gamma . gamma0_{ir}(lambda0_{jq}(r(gamma)))
        PathTable psi = empty_table(fsrc, edst);
        for (PathId p = 0; p < fsrc->paths().size(); ++p) {
          psi.images[p].assign(lay.width_r(fsrc->path(p).range(gf)), kUnset);
        }
        for (PathId g = 0; g < prev.source->paths().size(); ++g) {
          Path const&       gamma = prev.source->path(g);
          VertexIndex const c     = gamma.range(ge);
          auto const&       lam0c = lam0.images[id_of(e0, vertex_path(c))];
          for (std::size_t j = 0; j < mm; ++j) {
            for (std::size_t q = 0; q < lay.s(j, c); ++q) {
              PathId const lam  = prev.images[g][lay.off_s(c, j) + q];
              PathId const base = lam0c[lay.off_s(c, j) + q];
              auto&        img  = psi.images[lam];
              for (VertexIndex i = 0; i < n; ++i) {
                for (std::size_t r = 0; r < lay.r(i, j); ++r) {
                  Path const& tail =
                      el.path(t.gamma0.images[base][lay.off_r(j, i) + r]);
                  img.at(lay.off_r(j, i) + r) = id_of(*edst, concat(ge, gamma, tail));
                }
              }
            }
          }
        }

        // lambda_{jq}(gamma_{ip}(lambda)) = lambda . bridge^{j,t}_{ipq}
        PathTable phi = empty_table(edst, fdst);
        for (PathId p = 0; p < edst->paths().size(); ++p) {
          phi.images[p].assign(lay.width_s(edst->path(p).range(ge)), kUnset);
        }
        for (PathId lam = 0; lam < fsrc->paths().size(); ++lam) {
          Path const&       lpath = fsrc->path(lam);
          VertexIndex const tt    = lpath.range(gf);
          for (VertexIndex i = 0; i < n; ++i) {
            for (std::size_t p = 0; p < lay.r(i, tt); ++p) {
              PathId const g   = psi.images[lam][lay.off_r(tt, i) + p];
              auto&        img = phi.images.at(g);
              for (std::size_t j = 0; j < mm; ++j) {
                for (std::size_t q = 0; q < lay.s(j, i); ++q) {
                  Path const& tail = t.bridge[j][tt][lay.bridge_index(j, tt, i, p, q)];
                  img.at(lay.off_s(i, j) + q) = id_of(*fdst, concat(gf, lpath, tail));
                }
              }
            }
          }
        }
        psi_k[eps] = std::move(psi);
        phi_k[eps] = std::move(phi);
      }
      t.psi.push_back(std::move(psi_k));
      t.phi.push_back(std::move(phi_k));
      t.depth = k;
    }
    for (auto const& c : check_tables(t)) {
      if (!c.pass) {
        throw_verification("table check '" + c.name + "' failed at k="
                           + std::to_string(c.k) + ", eps=" + std::to_string(c.eps)
                           + ": " + c.detail);
      }
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Table checks
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Every image list has the right width, every slot ends at the vertex its
    // index names, and the slots biject onto the target level.
    TableCheck check_bijection(std::string const& name,
                               std::size_t        k,
                               int                eps,
                               PathTable const&   t,
                               bool               from_e,
                               Layout const&      lay) {
      TableCheck   c{name, k, eps, true, ""};
      Graph const& gs = t.source->graph();
      Graph const& gt = t.target->graph();
      std::vector<char> hit(t.target->paths().size(), 0);
      for (PathId p = 0; p < t.source->paths().size() && c.pass; ++p) {
        VertexIndex const rs = t.source->path(p).range(gs);
        auto const&       img = t.images[p];
        std::size_t const want = from_e ? lay.width_s(rs) : lay.width_r(rs);
        if (img.size() != want) {
          c.pass   = false;
          c.detail = "image of " + path_to_string(gs, t.source->path(p))
                     + " has " + std::to_string(img.size()) + " paths, expected "
                     + std::to_string(want);
          break;
        }
        for (std::size_t pos = 0; pos < img.size(); ++pos) {
          PathId const x = img[pos];
          if (x == kUnset || x >= hit.size()) {
            c.pass   = false;
            c.detail = "unassigned slot in the image of "
                       + path_to_string(gs, t.source->path(p));
            break;
          }
          std::size_t const owner = from_e ? lay.owner_s(rs, pos) : lay.owner_r(rs, pos);
          if (t.target->path(x).range(gt) != owner) {
            c.pass   = false;
            c.detail = path_to_string(gt, t.target->path(x)) + " sits in the slot of vertex "
                       + gt.vertex_id(owner);
            break;
          }
          if (hit[x]) {
            c.pass   = false;
            c.detail = path_to_string(gt, t.target->path(x)) + " is used twice";
            break;
          }
          hit[x] = 1;
        }
      }
      if (c.pass) {
        auto it = std::find(hit.begin(), hit.end(), 0);
        if (it != hit.end()) {
          c.pass   = false;
          c.detail = path_to_string(gt, t.target->path(it - hit.begin()))
                     + " is not covered";
        }
      }
      return c;
    }

    void fail(TableCheck& c, std::string detail) {
      if (c.pass) {
        c.pass   = false;
        c.detail = std::move(detail);
      }
    }
  }  // namespace

  std::vector<TableCheck> check_tables(PartitionTables const& t) {
    std::vector<TableCheck> out;
    Graph const&            ge = *t.input.e;
    Graph const&            gf = *t.input.f;
    Layout const            lay(t.input.se);
    std::size_t const       n = lay.n(), mm = lay.m(), l = t.input.se.lag();
    IntMatrix const         al = t.input.se.a().pow(l);
    IntMatrix const         bl = t.input.se.b().pow(l);
    auto const&             ce = t.input.e_edges;
    auto const&             cf = t.input.f_edges;

    PathTable const& lam0 = t.phi[0][0];
    Level const&     e0   = *lam0.source;

    // base families
    out.push_back(check_bijection("partition lambda0", 0, 0, lam0, true, lay));
    out.push_back(check_bijection("partition lambda1", 0, 1, t.phi[0][1], true, lay));
    out.push_back(check_bijection("partition gamma0", 0, 0, t.gamma0, false, lay));
    {
      TableCheck c{"gamma0 sources", 0, 0, true, ""};
      for (VertexIndex k = 0; k < n; ++k) {
        for (PathId lam : lam0.images[id_of(e0, vertex_path(k))]) {
          for (PathId g : t.gamma0.images[lam]) {
            if (g == kUnset || t.gamma0.target->path(g).source != k) {
              fail(c, "a gamma0 path of a lambda in Lambda^{m,v_k} does not start at v_k");
            }
          }
        }
      }
      out.push_back(c);
    }
    {
      TableCheck c{"bridge", 0, 0, true, ""};
      for (std::size_t j = 0; j < mm; ++j) {
        for (std::size_t tt = 0; tt < mm; ++tt) {
          auto const& br = t.bridge[j][tt];
          if (br.size() != as_size(bl(j, tt))) {
            fail(c, "bridge size differs from (B^l)_jt");
          }
          for (auto const& p : br) {
            if (p.length() != l || p.source != tt || p.range(gf) != j) {
              fail(c, "bridge path " + path_to_string(gf, p) + " has wrong endpoints");
            }
          }
          auto sorted = br;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            fail(c, "bridge repeats a path");
          }
        }
      }
      out.push_back(c);
    }

    // Ex1: lambda1(e_k) = hat(lambda0(v_k)), slot by slot
    {
      TableCheck   c{"Ex1", 0, 0, true, ""};
      PathTable const& lam1 = t.phi[0][1];
      for (VertexIndex k = 0; k < n; ++k) {
        auto const& src = lam0.images[id_of(e0, vertex_path(k))];
        auto const& img = lam1.images[id_of(*lam1.source, edge_path(ge, ce.into[k]))];
        for (std::size_t pos = 0; pos < src.size(); ++pos) {
          auto h = lam1.target->index_of(hat(gf, cf, lam0.target->path(src[pos])));
          if (!h || pos >= img.size() || img[pos] != *h) {
            fail(c, "lambda1(e_" + ge.vertex_id(k) + ") differs from the hat of lambda0");
          }
        }
      }
      out.push_back(c);
    }

    for (std::size_t k = 1; k <= t.depth; ++k) {
      for (int eps = 0; eps < 2; ++eps) {
        PathTable const& psi  = t.psi[k][eps];
        PathTable const& phi  = t.phi[k][eps];
        PathTable const& prev = t.phi[k - 1][eps];
        out.push_back(check_bijection("partition psi", k, eps, psi, false, lay));
        out.push_back(check_bijection("partition phi", k, eps, phi, true, lay));

        // psi images of the lambdas over gamma partition gamma E^l v_i
        TableCheck cp{"prefix psi", k, eps, true, ""};
        for (PathId g = 0; g < prev.source->paths().size() && cp.pass; ++g) {
          Path const&              gamma = prev.source->path(g);
          std::vector<std::size_t> count(n, 0);
          for (PathId lam : prev.images[g]) {
            for (PathId x : psi.images[lam]) {
              Path const& p = psi.target->path(x);
              if (!is_prefix(gamma, p) || p.length() != gamma.length() + l) {
                fail(cp, path_to_string(ge, p) + " does not extend "
                             + path_to_string(ge, gamma) + " by l edges");
              }
              ++count[p.range(ge)];
            }
          }
          for (VertexIndex i = 0; i < n; ++i) {
            if (count[i] != as_size(al(i, gamma.range(ge)))) {
              fail(cp, "family over " + path_to_string(ge, gamma)
                           + " does not exhaust gamma E^l v_i");
            }
          }
        }
        out.push_back(cp);

        // phi images of the gammas over lambda partition lambda F^l w_j
        TableCheck cq{"prefix phi", k, eps, true, ""};
        for (PathId lam = 0; lam < psi.source->paths().size() && cq.pass; ++lam) {
          Path const&              lp = psi.source->path(lam);
          std::vector<std::size_t> count(mm, 0);
          for (PathId g : psi.images[lam]) {
            for (PathId x : phi.images[g]) {
              Path const& p = phi.target->path(x);
              if (!is_prefix(lp, p) || p.length() != lp.length() + l) {
                fail(cq, path_to_string(gf, p) + " does not extend "
                             + path_to_string(gf, lp) + " by l edges");
              }
              ++count[p.range(gf)];
            }
          }
          for (std::size_t j = 0; j < mm; ++j) {
            if (count[j] != as_size(bl(j, lp.range(gf)))) {
              fail(cq, "family over " + path_to_string(gf, lp)
                           + " does not exhaust lambda F^l w_j");
            }
          }
        }
        out.push_back(cq);
      }

      // Ex(2k): psi[k][1](hat lambda) = hat(psi[k][0](lambda))
      {
        TableCheck       c{"Ex" + std::to_string(2 * k), k, 0, true, ""};
        PathTable const& p0 = t.psi[k][0];
        PathTable const& p1 = t.psi[k][1];
        for (PathId lam = 0; lam < p0.source->paths().size() && c.pass; ++lam) {
          auto hl = p1.source->index_of(hat(gf, cf, p0.source->path(lam)));
          if (!hl) {
            fail(c, "hat of a lambda is missing from the next level");
            break;
          }
          auto const& a0 = p0.images[lam];
          auto const& a1 = p1.images[*hl];
          for (std::size_t pos = 0; pos < a0.size(); ++pos) {
            auto h = p1.target->index_of(hat(ge, ce, p0.target->path(a0[pos])));
            if (!h || pos >= a1.size() || a1[pos] != *h) {
              fail(c, "gamma table of hat(" + path_to_string(gf, p0.source->path(lam))
                          + ") is not the hat of the gamma table");
              break;
            }
          }
        }
        out.push_back(c);
      }
      // Ex(2k+1): phi[k][1](hat gamma) = hat(phi[k][0](gamma))
      {
        TableCheck       c{"Ex" + std::to_string(2 * k + 1), k, 0, true, ""};
        PathTable const& p0 = t.phi[k][0];
        PathTable const& p1 = t.phi[k][1];
        for (PathId g = 0; g < p0.source->paths().size() && c.pass; ++g) {
          auto hg = p1.source->index_of(hat(ge, ce, p0.source->path(g)));
          if (!hg) {
            fail(c, "hat of a gamma is missing from the next level");
            break;
          }
          auto const& a0 = p0.images[g];
          auto const& a1 = p1.images[*hg];
          for (std::size_t pos = 0; pos < a0.size(); ++pos) {
            auto h = p1.target->index_of(hat(gf, cf, p0.target->path(a0[pos])));
            if (!h || pos >= a1.size() || a1[pos] != *h) {
              fail(c, "lambda table of hat(" + path_to_string(ge, p0.source->path(g))
                          + ") is not the hat of the lambda table");
              break;
            }
          }
        }
        out.push_back(c);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms and diamond checks
  ////////////////////////////////////////////////////////////////////////

  TowerHom const& LiftResult::phi_at(std::size_t k, int eps) const {
    auto it = phi.find({k, eps});
    if (it == phi.end()) {
      throw_input("phi at k=" + std::to_string(k) + " was not built");
    }
    return it->second;
  }

  TowerHom const& LiftResult::psi_at(std::size_t k, int eps) const {
    auto it = psi.find({k, eps});
    if (it == psi.end()) {
      throw Error(ErrorCode::kInputError,
                  "psi at k=" + std::to_string(k) + " was not built (depth too small)");
    }
    return it->second;
  }

  TowerHom hom_from_table(PathTable const& t) {
    Level const&               src = *t.source;
    std::vector<MatricialElem> images;
    images.reserve(src.unit_count());
    for (std::size_t u = 0; u < src.unit_count(); ++u) {
      auto const [a, c] = src.unit_at(u);
      auto const& ia    = t.images[a];
      auto const& ic    = t.images[c];
      if (ia.size() != ic.size()) {
        throw_verification("table rows of one block have different widths");
      }
      std::vector<MatricialElem::Term> terms;
      terms.reserve(ia.size());
      for (std::size_t x = 0; x < ia.size(); ++x) {
        terms.push_back({{ia[x], ic[x]}, Rational(1)});
      }
      images.emplace_back(t.target, std::move(terms));
    }
    return TowerHom(t.source, t.target, std::move(images));
  }

  LiftResult build_towers(PartitionTables t, std::size_t depth) {
    if (t.depth < depth) {
      t = extend_tables(std::move(t), depth);
    }
    LiftResult r{std::move(t), {}, {}};
    for (std::size_t k = 0; k <= depth; ++k) {
      for (int eps = 0; eps < 2; ++eps) {
        r.phi.emplace(std::make_pair(k, eps), hom_from_table(r.tables.phi[k][eps]));
        if (k >= 1) {
          r.psi.emplace(std::make_pair(k, eps), hom_from_table(r.tables.psi[k][eps]));
        }
      }
    }
    return r;
  }

  bool DiamondReport::all_pass() const {
    return std::all_of(
        checks.begin(), checks.end(), [](TableCheck const& c) { return c.pass; });
  }

  namespace {
    template <typename F>
    void record(DiamondReport& rep, std::string name, std::size_t k, int eps, F&& f) {
      TableCheck c{std::move(name), k, eps, true, ""};
      try {
        f(c);
      } catch (Error const& e) {
        c.pass   = false;
        c.detail = e.what();
      }
      rep.checks.push_back(std::move(c));
    }

    // A composite applied right to left; every factor is an algebra map on elements.
    struct Chain {
      std::vector<std::function<MatricialElem(MatricialElem const&)>> maps;
      bool                                                           homs = true;

      Chain& then(TowerHom const& h, bool verified) {
        maps.push_back([&h](MatricialElem const& x) { return h.apply(x); });
        homs = homs && verified;
        return *this;
      }
      Chain& then_connect(LevelPtr dst) {
        maps.push_back([dst](MatricialElem const& x) { return connecting_map(x, dst); });
        return *this;
      }
      Chain& then_alpha(LevelPtr dst, ChosenEdges const& chosen) {
        maps.push_back([dst, &chosen](MatricialElem const& x) {
          return corner_alpha(x, chosen, dst);
        });
        return *this;
      }
      MatricialElem operator()(MatricialElem x) const {
        for (auto const& f : maps) {
          x = f(x);
        }
        return x;
      }
    };

    // Two unital homomorphisms agree once they agree on E_{a,b0} and E_{b0,a} for
    // the first path b0 of every block, since E_{ac} = E_{a,b0} E_{b0,c}. Without
    // verified factors every matrix unit is compared.
    void check_equal(TableCheck& c, LevelPtr const& src, Chain const& x, Chain const& y) {
      bool const gens = x.homs && y.homs;
      auto const probe = [&](PathId a, PathId b) {
        MatricialElem const u  = MatricialElem::unit(src, a, b);
        MatricialElem const fx = x(u), fy = y(u);
        if (fx != fy) {
          c.pass   = false;
          c.detail = "images of (" + path_to_string(src->graph(), src->path(a)) + ")("
                     + path_to_string(src->graph(), src->path(b)) + ")* differ: "
                     + fx.to_string() + " vs " + fy.to_string();
          return false;
        }
        return true;
      };
      if (!gens) {
        for (std::size_t u = 0; u < src->unit_count(); ++u) {
          auto const [a, b] = src->unit_at(u);
          if (!probe(a, b)) {
            return;
          }
        }
        return;
      }
      for (auto const& blk : src->blocks()) {
        for (PathId a = blk.begin; a < blk.begin + blk.size; ++a) {
          if (!probe(a, blk.begin) || (a != blk.begin && !probe(blk.begin, a))) {
            return;
          }
        }
      }
    }
  }  // namespace

  DiamondReport verify_diamond(LiftResult const& r) {
    DiamondReport          rep;
    PartitionTables const& t  = r.tables;
    ShiftEquivalence const& se = t.input.se;
    std::size_t const       l = se.lag(), m = t.input.m;

    record(rep, "unitality S1=B^m 1", 0, 0, [&](TableCheck& c) {
      if (!(se.s().apply(ones(se.a().rows()))
            == se.b().pow(m).apply(ones(se.b().rows())))) {
        c.pass   = false;
        c.detail = "S 1 != B^m 1";
      }
    });
    for (auto const& c : check_tables(t)) {
      rep.checks.push_back(c);
    }

    std::map<std::pair<std::size_t, int>, bool> phi_ok, psi_ok;
    auto hom_checks = [&](std::string const& name, std::size_t k, int eps,
                          TowerHom const& h, IntMatrix const& expect) {
      HomReport hr;
      hr.multiplicative = false;
      hr.violation      = "verification did not complete";
      record(rep, "hom " + name, k, eps, [&](TableCheck& c) {
        hr       = verify_hom(h, true);
        c.pass   = hr.pass();
        c.detail = hr.mode + (hr.pass() ? "" : ": " + hr.violation);
      });
      (name == "phi" ? phi_ok : psi_ok)[{k, eps}] = rep.checks.back().pass;
      record(rep, "K0(" + name + ")=" + (name == "phi" ? "S" : "R"), k, eps,
             [&](TableCheck& c) {
               IntMatrix const k0 = k0_of_hom(h, hr);
               if (!(k0 == expect)) {
                 c.pass   = false;
                 c.detail = "K0 is " + k0.to_string();
               }
             });
    };
    for (auto const& [key, h] : r.phi) {
      hom_checks("phi", key.first, key.second, h, se.s());
    }
    for (auto const& [key, h] : r.psi) {
      hom_checks("psi", key.first, key.second, h, se.r());
    }

    Tower const& te = *t.tower_e;
    Tower const& tf = *t.tower_f;
    auto phi = [&](Chain& ch, std::size_t k, int eps) -> Chain& {
      return ch.then(r.phi_at(k, eps), phi_ok.at({k, eps}));
    };
    auto psi = [&](Chain& ch, std::size_t k, int eps) -> Chain& {
      return ch.then(r.psi_at(k, eps), psi_ok.at({k, eps}));
    };
    for (std::size_t k = 1; k <= t.depth; ++k) {
      for (int eps = 0; eps < 2; ++eps) {
        record(rep, "psi.phi=j^E", k, eps, [&](TableCheck& c) {
          Chain lhs, rhs;
          psi(phi(lhs, k - 1, eps), k, eps);
          rhs.then_connect(te.level(k * l + eps));
          check_equal(c, te.level((k - 1) * l + eps), lhs, rhs);
        });
        record(rep, "phi.psi=j^F", k, eps, [&](TableCheck& c) {
          Chain lhs, rhs;
          phi(psi(lhs, k, eps), k, eps);
          rhs.then_connect(tf.level(m + k * l + eps));
          check_equal(c, tf.level(m + (k - 1) * l + eps), lhs, rhs);
        });
      }
    }
    for (std::size_t k = 0; k <= t.depth; ++k) {
      record(rep, "phi.alpha=beta.phi", k, 0, [&](TableCheck& c) {
        Chain lhs, rhs;
        phi(lhs.then_alpha(te.level(k * l + 1), t.input.e_edges), k, 1);
        phi(rhs, k, 0).then_alpha(tf.level(m + k * l + 1), t.input.f_edges);
        check_equal(c, te.level(k * l), lhs, rhs);
      });
      if (k >= 1) {
        record(rep, "alpha.psi=psi.beta", k, 0, [&](TableCheck& c) {
          Chain lhs, rhs;
          psi(lhs, k, 0).then_alpha(te.level(k * l + 1), t.input.e_edges);
          psi(rhs.then_alpha(tf.level(m + (k - 1) * l + 1), t.input.f_edges), k, 1);
          check_equal(c, tf.level(m + (k - 1) * l), lhs, rhs);
        });
      }
    }
    return rep;
  }

  TowerHom twist_hom(LiftResult const& r, std::size_t k) {
    std::size_t const l = r.tables.input.se.lag(), m = r.tables.input.m;
    TowerHom const    jf =
        connecting_hom(*r.tables.tower_f, m + k * l + 1, m + (k + 1) * l);
    return compose(r.psi_at(k + 2, 0), compose(jf, r.phi_at(k, 1)));
  }

  MatricialElem twist_g(LiftResult const& r, MatricialElem const& x, std::size_t k) {
    return twist_hom(r, k).apply(x);
  }

  DiamondReport twist_k0_check(LiftResult const& r) {
    DiamondReport     rep;
    std::size_t const l  = r.tables.input.se.lag();
    IntMatrix const   want = r.tables.input.se.a().pow(2 * l - 1);
    for (std::size_t k = 0; k + 2 <= r.tables.depth; ++k) {
      record(rep, "K0(g)=A^(2l-1)", k, 1, [&](TableCheck& c) {
        TowerHom const  g  = twist_hom(r, k);
        HomReport const hr = verify_hom(g, true);
        if (!hr.pass()) {
          c.pass   = false;
          c.detail = "twist is not a unital homomorphism: " + hr.violation;
          return;
        }
        IntMatrix const k0 = k0_of_hom(g, hr);
        if (!(k0 == want)) {
          c.pass   = false;
          c.detail = "K0 is " + k0.to_string() + ", expected " + want.to_string();
        }
      });
    }
    return rep;
  }

  DiamondReport graded_iso_check(LiftResult const& r, std::size_t depth) {
    DiamondReport     rep;
    std::size_t const l = r.tables.input.se.lag(), m = r.tables.input.m;
    Tower const&      te = *r.tables.tower_e;
    Tower const&      tf = *r.tables.tower_f;
    depth                = std::min(depth, r.tables.depth);
    for (std::size_t k = 0; k + 2 <= depth; ++k) {
      record(rep, "phi.(g.alpha)=beta.phi", k, 0, [&](TableCheck& c) {
        auto const ok = [](TowerHom const& h) { return verify_hom(h, true).pass(); };
        TowerHom const& phi_k1 = r.phi_at(k, 1);
        TowerHom const& phi_k0 = r.phi_at(k, 0);
        TowerHom const& psi_k2 = r.psi_at(k + 2, 0);
        TowerHom const& phi_k2 = r.phi_at(k + 2, 0);
        Chain           lhs, rhs;
        lhs.then_alpha(te.level(k * l + 1), r.tables.input.e_edges)
            .then(phi_k1, ok(phi_k1))
            .then_connect(tf.level(m + (k + 1) * l))
            .then(psi_k2, ok(psi_k2))
            .then(phi_k2, ok(phi_k2));
        rhs.then(phi_k0, ok(phi_k0))
            .then_alpha(tf.level(m + k * l + 1), r.tables.input.f_edges)
            .then_connect(tf.level(m + (k + 2) * l));
        check_equal(c, te.level(k * l), lhs, rhs);
      });
    }
    if (rep.checks.empty()) {
      rep.checks.push_back(
          TableCheck{"phi.(g.alpha)=beta.phi", 0, 0, true, "vacuous: depth < 2"});
    }
    return rep;
  }

}  // namespace leavitt
