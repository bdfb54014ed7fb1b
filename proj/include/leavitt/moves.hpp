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

#ifndef LEAVITT_MOVES_HPP_
#define LEAVITT_MOVES_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "leavitt/graph.hpp"
#include "leavitt/intmatrix.hpp"

namespace leavitt {

  // parts[v] is an ordered partition of s^{-1}(v) (out) or r^{-1}(v) (in).
  // An empty list means "one part" for vertices with edges and is the only
  // option for vertices without.
  struct SplitSpec {
    std::vector<std::vector<std::vector<EdgeIndex>>> parts;
  };

  enum class MoveDirection { kIn, kOut };

  // R S = A (old working matrix), S R = B (new one); verified with lag 1.
  struct MoveResult {
    Graph     graph;
    IntMatrix s;
    IntMatrix r;
  };

  MoveResult out_split(Graph const& g, SplitSpec const& spec);
  MoveResult in_split(Graph const& g, SplitSpec const& spec);

  // Merges the first mergeable pair; the pair goes from g to the result.
  std::optional<MoveResult> amalgamate(Graph const& g, MoveDirection dir);

  // {"vertex-id": [[edge-ids...], ...]}; unlisted vertices keep one part.
  SplitSpec parse_split_spec(Graph const& g, std::string_view json_text);

}  // namespace leavitt

#endif  // LEAVITT_MOVES_HPP_
