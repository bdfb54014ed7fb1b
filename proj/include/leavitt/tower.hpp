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

#ifndef LEAVITT_TOWER_HPP_
#define LEAVITT_TOWER_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "leavitt/graph.hpp"
#include "leavitt/intmatrix.hpp"

namespace leavitt {

  using PathId = std::uint32_t;

  // The level algebra M(E)_n: one full matrix block per (range, length)
  // class of Q_n. Paths are numbered so that each block is contiguous.
  class Level {
   public:
    struct Block {
      VertexIndex range;
      std::size_t length;
      PathId      begin;
      std::size_t size;
      std::size_t unit_offset;
    };

    Level(std::shared_ptr<Graph const> g, std::size_t n);

    Graph const& graph() const noexcept {
      return *_graph;
    }
    std::shared_ptr<Graph const> const& graph_ptr() const noexcept {
      return _graph;
    }
    std::size_t n() const noexcept {
      return _n;
    }
    std::vector<Path> const& paths() const noexcept {
      return _paths;
    }
    Path const& path(PathId p) const {
      return _paths.at(p);
    }
    std::vector<Block> const& blocks() const noexcept {
      return _blocks;
    }
    std::size_t block_of(PathId p) const {
      return _block_of.at(p);
    }
    std::optional<PathId> index_of(Path const& p) const;
    std::optional<std::size_t> block_for_vertex(VertexIndex v) const;

    std::size_t unit_count() const noexcept {
      return _unit_count;
    }
    std::size_t unit_index(PathId a, PathId c) const;
    std::pair<PathId, PathId> unit_at(std::size_t u) const;
    std::size_t largest_block() const noexcept;

    bool same_as(Level const& other) const noexcept {
      return _graph == other._graph && _n == other._n;
    }

   private:
    std::shared_ptr<Graph const>                  _graph;
    std::size_t                                   _n;
    std::vector<Path>                             _paths;
    std::vector<Block>                            _blocks;
    std::vector<std::size_t>                      _block_of;
    std::unordered_map<Path, PathId, PathHash>    _index;
    std::size_t                                   _unit_count = 0;
  };

  using LevelPtr = std::shared_ptr<Level const>;

  // Levels of one graph, built on demand and shared.
  class Tower {
   public:
    explicit Tower(std::shared_ptr<Graph const> g) : _graph(std::move(g)) {}

    LevelPtr level(std::size_t n) const;
    std::shared_ptr<Graph const> const& graph_ptr() const noexcept {
      return _graph;
    }
    Graph const& graph() const noexcept {
      return *_graph;
    }

   private:
    std::shared_ptr<Graph const>               _graph;
    mutable std::mutex                         _mutex;
    mutable std::map<std::size_t, LevelPtr>    _levels;
  };

  // Rational combination of matrix units (gamma, mu) of one level.
  class MatricialElem {
   public:
    using Key  = std::pair<PathId, PathId>;
    using Term = std::pair<Key, Rational>;

    explicit MatricialElem(LevelPtr level) : _level(std::move(level)) {}
    MatricialElem(LevelPtr level, std::vector<Term> terms);

    static MatricialElem unit(LevelPtr level, PathId a, PathId c);
    static MatricialElem identity(LevelPtr level);
    static MatricialElem block_identity(LevelPtr level, std::size_t block);

    LevelPtr const& level_ptr() const noexcept {
      return _level;
    }
    Level const& level() const noexcept {
      return *_level;
    }
    // sorted by key, no zero coefficients
    std::vector<Term> const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    Rational coefficient(PathId a, PathId c) const;

    MatricialElem operator+(MatricialElem const& y) const;
    MatricialElem operator-(MatricialElem const& y) const;
    MatricialElem operator*(Rational const& q) const;
    bool          operator==(MatricialElem const& y) const;
    bool          operator!=(MatricialElem const& y) const {
      return !(*this == y);
    }

    std::string to_string() const;

   private:
    void canonicalize();

    LevelPtr          _level;
    std::vector<Term> _terms;
  };

  MatricialElem multiply(MatricialElem const& x, MatricialElem const& y);
  MatricialElem star(MatricialElem const& x);
  // Block-wise inverse over Q; nullopt when some block is singular.
  std::optional<MatricialElem> inverse(MatricialElem const& x);

  // j_{n,n'}: gamma mu* -> sum over kappa in r(gamma) Q_{n'-n} of
  // (gamma kappa)(mu kappa)*.
  MatricialElem connecting_map(MatricialElem const& x, LevelPtr const& target);

  // One edge e_v in r^{-1}(v) for every vertex.
  struct ChosenEdges {
    std::vector<EdgeIndex> into;
  };

  ChosenEdges default_chosen_edges(Graph const& g);
  void        check_chosen_edges(Graph const& g, ChosenEdges const& c);
  Path        hat(Graph const& g, ChosenEdges const& c, Path const& p);

  // gamma mu* -> hat(gamma) hat(mu)*, into the next level.
  MatricialElem corner_alpha(MatricialElem const& x,
                             ChosenEdges const&   chosen,
                             LevelPtr const&      target);

  // Homomorphism between levels given by the images of all matrix units.
  class TowerHom {
   public:
    TowerHom(LevelPtr source, LevelPtr target, std::vector<MatricialElem> images);

    LevelPtr const& source() const noexcept {
      return _source;
    }
    LevelPtr const& target() const noexcept {
      return _target;
    }
    MatricialElem const& unit_image(PathId a, PathId c) const;
    MatricialElem const& unit_image(std::size_t u) const {
      return _images.at(u);
    }
    MatricialElem apply(MatricialElem const& x) const;

   private:
    LevelPtr                   _source;
    LevelPtr                   _target;
    std::vector<MatricialElem> _images;
  };

  TowerHom connecting_hom(Tower const& t, std::size_t n, std::size_t n2);
  TowerHom alpha_hom(Tower const& t, std::size_t n, ChosenEdges const& chosen);
  TowerHom identity_hom(LevelPtr const& level);
  // second after first
  TowerHom compose(TowerHom const& second, TowerHom const& first);

  struct HomReport {
    std::string mode;  // "exhaustive" or "presentation"
    bool        multiplicative = true;
    bool        star_compatible = true;
    bool        unital_checked  = false;
    bool        unital          = true;
    std::string violation;
    bool        pass() const {
      return multiplicative && star_compatible && unital;
    }
  };

  inline constexpr std::size_t kExhaustiveUnitLimit = 450;

  HomReport verify_hom(TowerHom const& h, bool unital);

  // (target block, source block) ranks; runs verify_hom first and throws
  // kVerificationFailed on a non-multiplicative table.
  IntMatrix k0_of_hom(TowerHom const& h);
  // Uses an existing verification report for h instead of recomputing it.
  IntMatrix k0_of_hom(TowerHom const& h, HomReport const& rep);

  // Equality on every matrix unit; the first difference goes to `detail`.
  bool equal_on_units(TowerHom const& f, TowerHom const& g, std::string* detail);

  std::string bratteli_dot(Graph const& g, std::size_t levels);

}  // namespace leavitt

#endif  // LEAVITT_TOWER_HPP_
