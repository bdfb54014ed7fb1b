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

#include "leavitt/json_io.hpp"

#include "leavitt/error.hpp"

namespace leavitt {

  Json integer_to_json(Integer const& x) {
    if (x.fits_slong_p()) {
      return Json(x.get_si());
    }
    return Json(x.get_str());
  }

  Json vector_to_json(IntVector const& v) {
    Json out = Json::array();
    for (auto const& x : v) {
      out.push_back(integer_to_json(x));
    }
    return out;
  }

  Json matrix_to_json(IntMatrix const& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) {
        row.push_back(integer_to_json(m(i, j)));
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  namespace {
    Integer integer_from_json(Json const& j) {
      if (j.is_number_integer()) {
        return Integer(j.get<long>());
      }
      if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) != 0) {
          throw_input("matrix entry '" + j.get<std::string>() + "' is not an integer");
        }
        return x;
      }
      throw_input("matrix entries must be integers");
    }
  }  // namespace

  IntMatrix matrix_from_json(Json const& j) {
    if (!j.is_array() || j.empty()) {
      throw_input("a matrix is a non-empty array of rows");
    }
    std::size_t const cols = j.front().is_array() ? j.front().size() : 0;
    if (cols == 0) {
      throw_input("matrix rows must be non-empty arrays");
    }
    IntMatrix m(j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_array() || j[i].size() != cols) {
        throw_input("matrix row " + std::to_string(i) + " has the wrong length");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        m(i, c) = integer_from_json(j[i][c]);
      }
    }
    return m;
  }

  IntMatrix parse_matrix(std::string_view text) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (Json::parse_error const& e) {
      throw_input(std::string("invalid JSON: ") + e.what());
    }
    return matrix_from_json(j);
  }

  SeCertificate parse_se_certificate(std::string_view text) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (Json::parse_error const& e) {
      throw_input(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("S") || !j.contains("R")) {
      throw_input("certificate needs \"S\" and \"R\"");
    }
    SeCertificate c;
    c.s = matrix_from_json(j["S"]);
    c.r = matrix_from_json(j["R"]);
    if (j.contains("A")) {
      c.a = matrix_from_json(j["A"]);
    }
    if (j.contains("B")) {
      c.b = matrix_from_json(j["B"]);
    }
    if (j.contains("lag")) {
      if (!j["lag"].is_number_unsigned() || j["lag"].get<std::size_t>() == 0) {
        throw_input("\"lag\" must be a positive integer");
      }
      c.lag = j["lag"].get<std::size_t>();
    }
    if (j.contains("m")) {
      if (!j["m"].is_number_unsigned()) {
        throw_input("\"m\" must be a nonnegative integer");
      }
      c.m = j["m"].get<std::size_t>();
    }
    return c;
  }

  Json se_to_json(ShiftEquivalence const& se, std::optional<std::size_t> m) {
    Json out;
    out["A"]   = matrix_to_json(se.a());
    out["B"]   = matrix_to_json(se.b());
    out["S"]   = matrix_to_json(se.s());
    out["R"]   = matrix_to_json(se.r());
    out["lag"] = se.lag();
    if (m) {
      out["m"] = *m;
    }
    return out;
  }

  Json se_report_to_json(SeReport const& r) {
    Json eqs = Json::array();
    for (auto const& e : r.equations) {
      Json x;
      x["equation"] = e.name;
      x["pass"]     = e.pass;
      if (!e.pass) {
        x["row"] = e.row;
        x["col"] = e.col;
        x["lhs"] = integer_to_json(e.lhs);
        x["rhs"] = integer_to_json(e.rhs);
      }
      eqs.push_back(std::move(x));
    }
    Json out;
    out["pass"]      = r.all_pass();
    out["equations"] = std::move(eqs);
    return out;
  }

  Json group_to_json(AbelianGroup const& g) {
    Json out;
    Json f = Json::array();
    for (auto const& d : g.invariant_factors()) {
      f.push_back(integer_to_json(d));
    }
    out["invariant_factors"] = std::move(f);
    out["free_rank"]         = g.free_rank();
    out["description"]       = g.describe();
    return out;
  }

  Json bowen_franks_to_json(BowenFranks const& bf) {
    Json out;
    out["group"]    = group_to_json(bf.group);
    out["det"]      = integer_to_json(bf.det);
    out["det_sign"] = bf.det_sign();
    return out;
  }

  Json hom_report_to_json(HomReport const& r) {
    Json out;
    out["mode"]            = r.mode;
    out["multiplicative"]  = r.multiplicative;
    out["star_compatible"] = r.star_compatible;
    if (r.unital_checked) {
      out["unital"] = r.unital;
    }
    out["pass"] = r.pass();
    if (!r.violation.empty()) {
      out["violation"] = r.violation;
    }
    return out;
  }

  Json checks_to_json(std::vector<TableCheck> const& checks) {
    Json out = Json::array();
    for (auto const& c : checks) {
      Json x;
      x["check"] = c.name;
      x["k"]     = c.k;
      x["eps"]   = c.eps;
      x["pass"]  = c.pass;
      if (!c.detail.empty()) {
        x["detail"] = c.detail;
      }
      out.push_back(std::move(x));
    }
    return out;
  }

}  // namespace leavitt
