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

#ifndef LEAVITT_LIFT_HPP_
#define LEAVITT_LIFT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "leavitt/graph.hpp"
#include "leavitt/shift_equiv.hpp"
#include "leavitt/tower.hpp"

namespace leavitt {

  inline constexpr std::size_t kDefaultBlockGuard = 10000;

  struct LiftInput {
    std::shared_ptr<Graph const> e;
    std::shared_ptr<Graph const> f;
    ShiftEquivalence             se;  // A = A_E^t, B = A_F^t
    std::size_t                  m;
    ChosenEdges                  e_edges;
    ChosenEdges                  f_edges;
    std::uint64_t                seed        = 0;
    std::size_t                  block_guard = kDefaultBlockGuard;
  };

  // Checks essentiality, that the matrices belong to the graphs, m >= 1 and
  // S 1 = B^m 1 (kNotUnital, naming the first bad row). Empty chosen-edge
  // lists are replaced by the first edge into each vertex.
  LiftInput make_lift_input(std::shared_ptr<Graph const> e,
                            std::shared_ptr<Graph const> f,
                            ShiftEquivalence             se,
                            std::size_t                  m,
                            std::uint64_t                seed        = 0,
                            ChosenEdges                  e_edges     = {},
                            ChosenEdges                  f_edges     = {},
                            std::size_t                  block_guard = kDefaultBlockGuard);

  // Sends each path of `source` to an ordered list of paths of `target`.
  struct PathTable {
    LevelPtr                         source;
    LevelPtr                         target;
    std::vector<std::vector<PathId>> images;
  };

  struct TableCheck {
    std::string name;
    std::size_t k   = 0;
    int         eps = 0;
    bool        pass = true;
    std::string detail;
  };

  // Tables keyed by (k, eps):
  //   phi[k][eps]: E_{kl+eps} -> F_{m+kl+eps}, image of gamma in order (j, q)
  //   psi[k][eps]: F_{m+(k-1)l+eps} -> E_{kl+eps}, image of lambda in order
  //                (i, r); psi[0] is empty
  struct PartitionTables {
    LiftInput                                   input;
    std::shared_ptr<Tower>                      tower_e;
    std::shared_ptr<Tower>                      tower_f;
    PathTable                                   gamma0;  // F_m -> E_l
    std::vector<std::vector<std::vector<Path>>> bridge;  // [j][t], order (i, p, q)
    std::vector<std::array<PathTable, 2>>       phi;
    std::vector<std::array<PathTable, 2>>       psi;
    std::size_t                                 depth = 0;
  };

  PartitionTables base_partitions(LiftInput const& input);
  PartitionTables extend_tables(PartitionTables t, std::size_t depth);

  // Partition, bijection and exchange checks of everything built so far.
  std::vector<TableCheck> check_tables(PartitionTables const& t);

  struct LiftResult {
    PartitionTables                              tables;
    std::map<std::pair<std::size_t, int>, TowerHom> phi;
    std::map<std::pair<std::size_t, int>, TowerHom> psi;

    TowerHom const& phi_at(std::size_t k, int eps) const;
    TowerHom const& psi_at(std::size_t k, int eps) const;
  };

  TowerHom   hom_from_table(PathTable const& t);
  LiftResult build_towers(PartitionTables t, std::size_t depth);

  struct DiamondReport {
    std::vector<TableCheck> checks;
    bool                    all_pass() const;
  };

  DiamondReport verify_diamond(LiftResult const& r);

  // psi[k+2][0] . j^F_{m+kl+1, m+(k+1)l} . phi[k][1], from E_{kl+1} to E_{(k+2)l}.
  TowerHom      twist_hom(LiftResult const& r, std::size_t k);
  MatricialElem twist_g(LiftResult const& r, MatricialElem const& x, std::size_t k);

  // K0(twist) = A^{2l-1} for every k with k + 2 <= depth.
  DiamondReport twist_k0_check(LiftResult const& r);

  // phi[k+2][0](g(alpha(a))) = j^F(beta(phi[k][0](a))) on all units a of E_{kl}.
  DiamondReport graded_iso_check(LiftResult const& r, std::size_t depth);

}  // namespace leavitt

#endif  // LEAVITT_LIFT_HPP_
