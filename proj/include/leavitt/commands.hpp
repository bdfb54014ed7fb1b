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

#ifndef LEAVITT_COMMANDS_HPP_
#define LEAVITT_COMMANDS_HPP_

// JSON-producing entry points shared by the C API and the tests. Each
// returns a report object; failures surface as leavitt::Error.

#include <cstdint>
#include <optional>
#include <string_view>

#include "leavitt/graph.hpp"
#include "leavitt/json_io.hpp"
#include "leavitt/lift.hpp"
#include "leavitt/moves.hpp"

namespace leavitt {

  Json cmd_graph_info(Graph const& g);

  Json cmd_bowen_franks(IntMatrix const& a);
  Json cmd_dim_equal(IntMatrix const& a, DimElem const& x, DimElem const& y,
                     std::size_t bound);
  Json cmd_dim_positive(IntMatrix const& a, DimElem const& x, std::size_t bound);
  Json cmd_franks(IntMatrix const& a, IntMatrix const& b);
  DimElem parse_dim_elem(std::string_view text);

  // The certificate must carry A and B.
  Json cmd_se_verify(SeCertificate const& c);
  Json cmd_se_search(IntMatrix const& a, IntMatrix const& b, std::size_t lag_max,
                     long entry_bound);
  Json cmd_se_unit(SeCertificate const& c, std::size_t m, std::size_t bound);
  Json cmd_se_normalize(SeCertificate const& c, std::size_t m, std::size_t bound);

  struct MoveOutput {
    Graph graph;
    Json  certificate;  // {"S", "R", "lag": 1, "A", "B"}
  };

  MoveOutput cmd_split(Graph const& g, SplitSpec const& spec, MoveDirection dir);
  std::optional<MoveOutput> cmd_amalgamate(Graph const& g, MoveDirection dir);

  struct LiftOptions {
    std::optional<std::size_t> m;
    bool                       auto_normalize = false;
    std::size_t                depth          = 2;
    std::uint64_t              seed           = 0;
    std::size_t                block_guard    = kDefaultBlockGuard;
    bool                       include_tables = false;
  };

  // Report with "pass" true iff every table, diamond, twist and graded
  // check passed.
  Json cmd_lift(Graph const& e, Graph const& f, SeCertificate const& c,
                LiftOptions const& opt);

  Json cmd_lpa_eval(std::shared_ptr<Graph const> g, std::string_view expr);
  // theta_{u,z}(x); with conjugator_level set, also runs the conjugator check.
  Json cmd_lpa_theta(std::shared_ptr<Graph const> g, std::string_view u,
                     std::string_view z, std::string_view x,
                     std::optional<std::size_t> conjugator_level);

}  // namespace leavitt

#endif  // LEAVITT_COMMANDS_HPP_
