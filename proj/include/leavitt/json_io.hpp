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

#ifndef LEAVITT_JSON_IO_HPP_
#define LEAVITT_JSON_IO_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "leavitt/intmatrix.hpp"
#include "leavitt/ktheory.hpp"
#include "leavitt/lift.hpp"
#include "leavitt/shift_equiv.hpp"
#include "leavitt/tower.hpp"

namespace leavitt {

  using Json = nlohmann::ordered_json;

  // Entries that do not fit in 64 bits are written as decimal strings;
  // both forms are accepted on input.
  Json      integer_to_json(Integer const& x);
  Json      vector_to_json(IntVector const& v);
  Json      matrix_to_json(IntMatrix const& m);
  IntMatrix matrix_from_json(Json const& j);
  IntMatrix parse_matrix(std::string_view text);

  // {"S": [[...]], "R": [[...]], "lag": l} with optional "A", "B", "m".
  struct SeCertificate {
    std::optional<IntMatrix>   a, b;
    IntMatrix                  s, r;
    std::size_t                lag = 1;
    std::optional<std::size_t> m;
  };

  SeCertificate parse_se_certificate(std::string_view text);
  Json          se_to_json(ShiftEquivalence const& se, std::optional<std::size_t> m = {});

  Json se_report_to_json(SeReport const& r);
  Json group_to_json(AbelianGroup const& g);
  Json bowen_franks_to_json(BowenFranks const& bf);
  Json hom_report_to_json(HomReport const& r);
  Json checks_to_json(std::vector<TableCheck> const& checks);

}  // namespace leavitt

#endif  // LEAVITT_JSON_IO_HPP_
