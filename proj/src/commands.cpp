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

#include "leavitt/commands.hpp"

#include <sstream>

#include "leavitt/error.hpp"
#include "leavitt/ktheory.hpp"
#include "leavitt/lpa.hpp"
#include "leavitt/shift_equiv.hpp"

namespace leavitt {

  namespace {
    Json ids(Graph const& g, std::vector<VertexIndex> const& vs) {
      Json out = Json::array();
      for (VertexIndex v : vs) {
        out.push_back(g.vertex_id(v));
      }
      return out;
    }

    std::string unit_string(K0Data const& k) {
      if (k.group.is_trivial()) {
        return "0";
      }
      std::ostringstream os;
      os << '(';
      for (std::size_t i = 0; i < k.order_unit.size(); ++i) {
        os << (i ? ", " : "") << k.order_unit[i].get_str();
      }
      os << ')';
      return os.str();
    }

    ShiftEquivalence certificate_se(SeCertificate const& c) {
      if (!c.a || !c.b) {
        throw_input("certificate needs \"A\" and \"B\" here");
      }
      return ShiftEquivalence::make(*c.a, *c.b, c.s, c.r, c.lag);
    }

    Json tri_to_json(TriState const& t) {
      Json out;
      out["verdict"] = to_string(t.verdict);
      out["bound"]   = t.bound;
      out["witness"] = t.witness;
      return out;
    }

    Json table_to_json(std::string const& name, std::size_t k, int eps,
                       PathTable const& t) {
      Graph const& gs = t.source->graph();
      Graph const& gt = t.target->graph();
      Json         rows = Json::object();
      for (PathId p = 0; p < t.images.size(); ++p) {
        Json img = Json::array();
        for (PathId x : t.images[p]) {
          img.push_back(path_to_string(gt, t.target->path(x)));
        }
        rows[path_to_string(gs, t.source->path(p))] = std::move(img);
      }
      Json out;
      out["map"]  = name;
      out["k"]    = k;
      out["eps"]  = eps;
      out["rows"] = std::move(rows);
      return out;
    }

    std::size_t count_failed(std::vector<TableCheck> const& cs) {
      std::size_t n = 0;
      for (auto const& c : cs) {
        n += c.pass ? 0 : 1;
      }
      return n;
    }
  }  // namespace

  Json cmd_graph_info(Graph const& g) {
    VertexClassification const cls = classify_vertices(g);
    IntMatrix const            a   = adjacency(g, true);
    Json                       out;
    out["vertices"]    = g.num_vertices();
    out["edges"]       = g.num_edges();
    out["vertex_ids"]  = g.vertex_ids();
    out["sources"]     = ids(g, cls.sources);
    out["sinks"]       = ids(g, cls.sinks);
    out["essential"]   = cls.essential;
    out["irreducible"] = is_irreducible(a);
    out["A_E"]         = matrix_to_json(adjacency(g, false));
    out["A"]           = matrix_to_json(a);
    BowenFranks const bf = bowen_franks(a);
    out["bowen_franks"]  = bowen_franks_to_json(bf);
    std::string k0_line;
    if (g.has_sinks()) {
      out["K0"] = nullptr;
      k0_line   = "K0: not computed (graph has sinks)";
    } else {
      K0Data const k = k0_with_unit(g);
      Json         kj;
      kj["group"] = group_to_json(k.group);
      kj["unit"]  = vector_to_json(k.order_unit);
      out["K0"]   = std::move(kj);
      k0_line = "K0: " + (k.group.is_trivial() ? std::string("trivial") : k.group.describe())
                + "; unit: " + unit_string(k);
    }
    out["summary"] = k0_line + "; det(I-A): " + bf.det.get_str();
    return out;
  }

  Json cmd_bowen_franks(IntMatrix const& a) {
    Json out = bowen_franks_to_json(bowen_franks(a));
    out["matrix"] = matrix_to_json(a);
    return out;
  }

  DimElem parse_dim_elem(std::string_view text) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (Json::parse_error const& e) {
      throw_input(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vec")) {
      throw_input("an element is {\"level\": n, \"vec\": [...]}");
    }
    DimElem e;
    e.level = j.value("level", std::size_t{0});
    IntMatrix const row = matrix_from_json(Json::array({j["vec"]}));
    for (std::size_t i = 0; i < row.cols(); ++i) {
      e.vec.push_back(row(0, i));
    }
    return e;
  }

  Json cmd_dim_equal(IntMatrix const& a, DimElem const& x, DimElem const& y,
                     std::size_t bound) {
    return tri_to_json(DimensionTriple(a).equal(x, y, bound));
  }

  Json cmd_dim_positive(IntMatrix const& a, DimElem const& x, std::size_t bound) {
    return tri_to_json(DimensionTriple(a).positive(x, bound));
  }

  Json cmd_franks(IntMatrix const& a, IntMatrix const& b) {
    FranksReport const r = franks_obstruction(a, b);
    Json               out;
    out["A"]          = bowen_franks_to_json(r.a);
    out["B"]          = bowen_franks_to_json(r.b);
    out["obstructed"] = r.obstructed;
    out["reason"]     = r.reason;
    return out;
  }

  Json cmd_se_verify(SeCertificate const& c) {
    if (!c.a || !c.b) {
      throw_input("certificate needs \"A\" and \"B\" here");
    }
    Json out   = se_report_to_json(verify_shift_equivalence(*c.a, *c.b, c.s, c.r, c.lag));
    out["lag"] = c.lag;
    return out;
  }

  Json cmd_se_search(IntMatrix const& a, IntMatrix const& b, std::size_t lag_max,
                     long entry_bound) {
    auto found = search_shift_equivalence(a, b, lag_max, entry_bound);
    Json out;
    out["found"]       = found.has_value();
    out["lag_max"]     = lag_max;
    out["entry_bound"] = entry_bound;
    if (found) {
      out["certificate"] = se_to_json(*found);
    }
    return out;
  }

  Json cmd_se_unit(SeCertificate const& c, std::size_t m, std::size_t bound) {
    ShiftEquivalence const se = certificate_se(c);
    Json out = tri_to_json(preserves_order_unit(InducedIso{se, m}, bound));
    out["m"] = m;
    return out;
  }

  Json cmd_se_normalize(SeCertificate const& c, std::size_t m, std::size_t bound) {
    NormalizedEquivalence const n = normalize_to_unital(certificate_se(c), m, bound);
    Json                        out;
    out["k"]           = n.k;
    out["m"]           = n.m;
    out["lag"]         = n.se.lag();
    out["certificate"] = se_to_json(n.se, n.m);
    return out;
  }

  MoveOutput cmd_split(Graph const& g, SplitSpec const& spec, MoveDirection dir) {
    MoveResult r = dir == MoveDirection::kOut ? out_split(g, spec) : in_split(g, spec);
    Json       c;
    c["A"]   = matrix_to_json(adjacency(g, true));
    c["B"]   = matrix_to_json(adjacency(r.graph, true));
    c["S"]   = matrix_to_json(r.s);
    c["R"]   = matrix_to_json(r.r);
    c["lag"] = 1;
    return MoveOutput{std::move(r.graph), std::move(c)};
  }

  std::optional<MoveOutput> cmd_amalgamate(Graph const& g, MoveDirection dir) {
    auto r = amalgamate(g, dir);
    if (!r) {
      return std::nullopt;
    }
    Json c;
    c["A"]   = matrix_to_json(adjacency(g, true));
    c["B"]   = matrix_to_json(adjacency(r->graph, true));
    c["S"]   = matrix_to_json(r->s);
    c["R"]   = matrix_to_json(r->r);
    c["lag"] = 1;
    return MoveOutput{std::move(r->graph), std::move(c)};
  }

  Json cmd_lift(Graph const& e, Graph const& f, SeCertificate const& c,
                LiftOptions const& opt) {
    auto const      ge = std::make_shared<Graph const>(e);
    auto const      gf = std::make_shared<Graph const>(f);
    IntMatrix const a  = adjacency(e, true);
    IntMatrix const b  = adjacency(f, true);
    if ((c.a && !(*c.a == a)) || (c.b && !(*c.b == b))) {
      throw Error(ErrorCode::kInvalidCertificate,
                  "certificate matrices differ from the graphs' adjacency matrices");
    }
    ShiftEquivalence se = ShiftEquivalence::make(a, b, c.s, c.r, c.lag);
    std::optional<std::size_t> m = opt.m ? opt.m : c.m;
    if (!m) {
      throw_input("lift needs m (from --m or the certificate)");
    }
    std::size_t k = 0;
    if (opt.auto_normalize) {
      NormalizedEquivalence n = normalize_to_unital(se, *m);
      k                       = n.k;
      m                       = n.m;
      se                      = std::move(n.se);
    }

    LiftInput const in = make_lift_input(ge, gf, se, *m, opt.seed, {}, {}, opt.block_guard);
    LiftResult const r = build_towers(base_partitions(in), opt.depth);
    DiamondReport const diamond = verify_diamond(r);
    DiamondReport const twist   = twist_k0_check(r);
    DiamondReport const graded  = graded_iso_check(r, opt.depth);

    Json input;
    input["lag"]            = se.lag();
    input["m"]              = *m;
    input["normalized_by"]  = k;
    input["m_exceeds_lag"]  = *m > se.lag();
    input["depth"]          = opt.depth;
    input["seed"]           = opt.seed;
    input["S"]              = matrix_to_json(se.s());
    input["R"]              = matrix_to_json(se.r());

    std::size_t const total =
        diamond.checks.size() + twist.checks.size() + graded.checks.size();
    std::size_t const failed =
        count_failed(diamond.checks) + count_failed(twist.checks) + count_failed(graded.checks);

    Json out;
    out["input"]      = std::move(input);
    out["diamond"]    = checks_to_json(diamond.checks);
    out["twist"]      = checks_to_json(twist.checks);
    out["graded_iso"] = checks_to_json(graded.checks);
    out["checks"]     = total;
    out["failed"]     = failed;
    out["pass"]       = failed == 0;
    if (opt.include_tables) {
      Json tables = Json::array();
      for (std::size_t kk = 0; kk <= r.tables.depth; ++kk) {
        for (int eps = 0; eps < 2; ++eps) {
          tables.push_back(table_to_json("phi", kk, eps, r.tables.phi[kk][eps]));
          if (kk >= 1) {
            tables.push_back(table_to_json("psi", kk, eps, r.tables.psi[kk][eps]));
          }
        }
      }
      tables.push_back(table_to_json("gamma0", 0, 0, r.tables.gamma0));
      out["tables"] = std::move(tables);
    }
    return out;
  }

  Json cmd_lpa_eval(std::shared_ptr<Graph const> g, std::string_view expr) {
    LpaElem const x = parse_lpa(g, expr);
    Json          comps = Json::object();
    for (auto const& [d, c] : degree_components(x)) {
      comps[std::to_string(d)] = c.to_string();
    }
    Json out;
    out["input"]       = std::string(expr);
    out["normal_form"] = x.to_string();
    out["components"]  = std::move(comps);
    return out;
  }

  Json cmd_lpa_theta(std::shared_ptr<Graph const> g, std::string_view u,
                     std::string_view z, std::string_view x,
                     std::optional<std::size_t> conjugator_level) {
    ThetaData const d = make_theta_data(parse_lpa(g, u), parse_lpa(g, z));
    Theta const     th(d);
    Json            out;
    out["u"]     = d.u.to_string();
    out["z"]     = d.z.to_string();
    out["x"]     = parse_lpa(g, x).to_string();
    out["theta"] = th(parse_lpa(g, x)).to_string();
    out["pass"]  = true;
    if (conjugator_level) {
      ConjugatorReport const rep = local_conjugator(d, *conjugator_level);
      Json                   cj;
      cj["n"]             = rep.n;
      cj["pass"]          = rep.pass;
      cj["units_checked"] = rep.units_checked;
      cj["u_n"]           = rep.u_n.to_string();
      if (!rep.violation.empty()) {
        cj["violation"] = rep.violation;
      }
      out["conjugator"] = std::move(cj);
      out["pass"]       = rep.pass;
    }
    return out;
  }

}  // namespace leavitt
