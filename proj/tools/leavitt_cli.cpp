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

// leavitt: command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "leavitt/leavitt.h"

namespace {

  using Json = nlohmann::ordered_json;

  struct Failure {
    lvt_status  status;
    std::string message;
  };

  // Inline JSON when the argument looks like JSON, a file path otherwise.
  std::string load(std::string const& arg) {
    auto const first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) {
      return arg;
    }
    std::ifstream in(arg);
    if (!in) {
      throw Failure{LVT_ERR_INPUT, "cannot read '" + arg + "'"};
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  struct Text {
    char* p = nullptr;
    ~Text() {
      lvt_string_free(p);
    }
    std::string str() const {
      return p ? std::string(p) : std::string();
    }
    Json json() const {
      return Json::parse(str());
    }
  };

  struct GraphHandle {
    lvt_graph* g = nullptr;
    ~GraphHandle() {
      lvt_graph_free(g);
    }
  };

  void check(lvt_status s) {
    if (s != LVT_OK) {
      throw Failure{s, lvt_last_error()};
    }
  }

  // For calls that hand back a report alongside a failing status.
  lvt_status soft(lvt_status s, Text const& report) {
    if (s != LVT_OK && !report.p) {
      throw Failure{s, lvt_last_error()};
    }
    return s;
  }

  void read_graph(std::string const& arg, GraphHandle& h) {
    check(lvt_graph_parse(load(arg).c_str(), &h.g));
  }

  void write_file(std::string const& path, std::string const& text) {
    std::ofstream out(path);
    if (!out) {
      throw Failure{LVT_ERR_INPUT, "cannot write '" + path + "'"};
    }
    out << text << '\n';
  }

  std::string matrix_text(Json const& m) {
    std::string out;
    for (auto const& row : m) {
      out += "  ";
      for (std::size_t i = 0; i < row.size(); ++i) {
        out += (i ? " " : "") + row[i].dump();
      }
      out += '\n';
    }
    return out;
  }

  std::string names(Json const& list) {
    if (list.empty()) {
      return "none";
    }
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i) {
      out += (i ? ", " : "") + list[i].get<std::string>();
    }
    return out;
  }

  void print_checks(Json const& checks, char const* group) {
    for (auto const& c : checks) {
      std::printf("%s %-10s %-24s k=%zu eps=%d%s%s\n", c["pass"].get<bool>() ? "PASS" : "FAIL",
                  group, c["check"].get<std::string>().c_str(), c["k"].get<std::size_t>(),
                  c["eps"].get<int>(), c.contains("detail") ? "  " : "",
                  c.contains("detail") ? c["detail"].get<std::string>().c_str() : "");
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph algebras, shift equivalence and graded K-theory toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print machine-readable JSON");

  // graph
  auto*       graph_cmd = app.add_subcommand("graph", "Invariants of a graph");
  std::string graph_file;
  std::size_t dot_levels = 0;
  graph_cmd->add_option("graph", graph_file, "Graph JSON file")->required();
  graph_cmd->add_option("--dot", dot_levels, "Also print the Bratteli diagram to this level");

  // ktheory
  auto* kt = app.add_subcommand("ktheory", "Dimension groups and Bowen-Franks data");
  kt->require_subcommand(1);
  std::string kt_matrix, kt_x, kt_y, kt_b;
  std::size_t kt_bound = 64;
  auto*       kt_bf    = kt->add_subcommand("bf", "Bowen-Franks group and det(I-A)");
  kt_bf->add_option("matrix", kt_matrix, "Matrix (file or inline JSON)")->required();
  auto* kt_eq = kt->add_subcommand("dim-equal", "Equality in the dimension group");
  kt_eq->add_option("matrix", kt_matrix, "Matrix (file or inline JSON)")->required();
  kt_eq->add_option("--x", kt_x, "{\"level\": n, \"vec\": [...]}")->required();
  kt_eq->add_option("--y", kt_y, "Second element, same format")->required();
  kt_eq->add_option("--bound", kt_bound, "Largest level tried")->capture_default_str();
  auto* kt_pos = kt->add_subcommand("dim-positive", "Positivity in the dimension group");
  kt_pos->add_option("matrix", kt_matrix, "Matrix (file or inline JSON)")->required();
  kt_pos->add_option("--x", kt_x, "{\"level\": n, \"vec\": [...]}")->required();
  kt_pos->add_option("--bound", kt_bound, "Largest power tried")->capture_default_str();
  auto* kt_fr = kt->add_subcommand("franks", "Flow-equivalence obstruction");
  kt_fr->add_option("a", kt_matrix, "First matrix")->required();
  kt_fr->add_option("b", kt_b, "Second matrix")->required();

  // se
  auto* se = app.add_subcommand("se", "Shift equivalences");
  se->require_subcommand(1);
  std::string se_cert, se_a, se_b;
  std::size_t se_lag_max = 1, se_m = 0, se_bound = 64;
  long        se_entry   = 2;
  auto*       se_verify  = se->add_subcommand("verify", "Check the four equations");
  se_verify->add_option("certificate", se_cert, "Certificate JSON file")->required();
  auto* se_search = se->add_subcommand("search", "Bounded search for (S, R)");
  se_search->add_option("a", se_a, "Matrix A")->required();
  se_search->add_option("b", se_b, "Matrix B")->required();
  se_search->add_option("--lag-max", se_lag_max, "Largest lag tried")->capture_default_str();
  se_search->add_option("--entry-bound", se_entry, "Largest entry of S and R")->capture_default_str();
  auto* se_unit = se->add_subcommand("unit", "Does the induced map preserve order units?");
  se_unit->add_option("certificate", se_cert, "Certificate JSON file")->required();
  se_unit->add_option("--m", se_m, "Level shift")->capture_default_str();
  se_unit->add_option("--bound", se_bound, "Largest extra power tried")->capture_default_str();
  auto* se_norm = se->add_subcommand("normalize", "Make S 1 = B^m 1 hold exactly");
  se_norm->add_option("certificate", se_cert, "Certificate JSON file")->required();
  se_norm->add_option("--m", se_m, "Level shift")->capture_default_str();
  se_norm->add_option("--bound", se_bound, "Largest extra power tried")->capture_default_str();

  // moves
  auto* mv = app.add_subcommand("moves", "State splittings and amalgamations");
  mv->require_subcommand(1);
  std::string mv_graph, mv_spec, mv_out, mv_cert, mv_dir = "out";
  auto*       mv_os = mv->add_subcommand("outsplit", "Out-split vertices");
  auto*       mv_is = mv->add_subcommand("insplit", "In-split vertices");
  for (auto* c : {mv_os, mv_is}) {
    c->add_option("graph", mv_graph, "Graph JSON file")->required();
    c->add_option("--spec", mv_spec, "{\"v\": [[edges], ...]}");
    c->add_option("-o,--output", mv_out, "Write the new graph here");
    c->add_option("--certificate", mv_cert, "Write the (S, R) certificate here");
  }
  auto* mv_am = mv->add_subcommand("amalgamate", "Merge the first mergeable pair");
  mv_am->add_option("graph", mv_graph, "Graph JSON file")->required();
  mv_am->add_option("--direction", mv_dir, "in or out")->capture_default_str()->check(CLI::IsMember({"in", "out"}));
  mv_am->add_option("-o,--output", mv_out, "Write the new graph here");
  mv_am->add_option("--certificate", mv_cert, "Write the (S, R) certificate here");

  // lift
  auto*       lift = app.add_subcommand("lift", "Lift a shift equivalence to the towers");
  std::string lift_e, lift_f, lift_cert, lift_out;
  std::optional<std::size_t> lift_m;
  bool          lift_norm = false, lift_tables = false;
  std::size_t   lift_depth = 2, lift_guard = 10000;
  std::uint64_t lift_seed  = 0;
  lift->add_option("E", lift_e, "Graph E (JSON file)")->required();
  lift->add_option("F", lift_f, "Graph F (JSON file)")->required();
  lift->add_option("certificate", lift_cert, "Shift equivalence from A_E^t to A_F^t")->required();
  lift->add_option("--m", lift_m, "Level shift (default: from the certificate)");
  lift->add_flag("--auto-normalize", lift_norm, "Normalize the certificate first");
  lift->add_option("--depth", lift_depth, "Number of lifted stages")->capture_default_str();
  lift->add_option("--seed", lift_seed, "Seed for the table choices")->capture_default_str();
  lift->add_option("--guard", lift_guard, "Largest block allowed per level")->capture_default_str();
  lift->add_flag("--tables", lift_tables, "Include the path tables in the report");
  lift->add_option("-o,--output", lift_out, "Write the JSON report here");

  // lpa
  auto* lpa = app.add_subcommand("lpa", "Symbolic computation in L(E)");
  lpa->require_subcommand(1);
  std::string lpa_graph, lpa_expr, lpa_u = "1", lpa_z = "1";
  long        lpa_conj = -1;
  auto*       lpa_eval = lpa->add_subcommand("eval", "Normal form of an expression");
  lpa_eval->add_option("graph", lpa_graph, "Graph JSON file")->required();
  lpa_eval->add_option("expr", lpa_expr, "Expression in the generators")->required();
  auto* lpa_theta = lpa->add_subcommand("theta", "Apply theta_{u,z}");
  lpa_theta->add_option("graph", lpa_graph, "Graph JSON file")->required();
  lpa_theta->add_option("expr", lpa_expr, "Expression in the generators")->required();
  lpa_theta->add_option("--u", lpa_u, "Invertible degree-0 element")->capture_default_str();
  lpa_theta->add_option("--z", lpa_z, "Invertible degree-0 element")->capture_default_str();
  lpa_theta->add_option("--conjugator", lpa_conj, "Check u_n x u_n^-1 on level n");

  // bratteli
  auto*       br = app.add_subcommand("bratteli", "Bratteli diagram in DOT");
  std::string br_graph;
  std::size_t br_levels = 3;
  br->add_option("graph", br_graph, "Graph JSON file")->required();
  br->add_option("--levels", br_levels, "Last level drawn")->capture_default_str();

  for (auto* s : app.get_subcommands({})) {
    s->fallthrough();
    for (auto* t : s->get_subcommands({})) {
      t->fallthrough();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? 0 : LVT_ERR_INPUT;
  }

  try {
    lvt_status status = LVT_OK;

    if (graph_cmd->parsed()) {
      GraphHandle g;
      read_graph(graph_file, g);
      Text info;
      check(lvt_graph_info(g.g, &info.p));
      Json const j = info.json();
      Text       dot;
      if (dot_levels > 0) {
        check(lvt_graph_bratteli(g.g, dot_levels, &dot.p));
      }
      if (as_json) {
        Json out = j;
        if (dot.p) {
          out["bratteli_dot"] = dot.str();
        }
        std::puts(out.dump(2).c_str());
      } else {
        std::printf("vertices: %zu  edges: %zu\n", j["vertices"].get<std::size_t>(),
                    j["edges"].get<std::size_t>());
        std::printf("sources: %s  sinks: %s  essential: %s\n", names(j["sources"]).c_str(),
                    names(j["sinks"]).c_str(), j["essential"].get<bool>() ? "yes" : "no");
        std::printf("A_E:\n%sA:\n%s", matrix_text(j["A_E"]).c_str(),
                    matrix_text(j["A"]).c_str());
        std::printf("Bowen-Franks: %s, sign %d\n",
                    j["bowen_franks"]["group"]["description"].get<std::string>().c_str(),
                    j["bowen_franks"]["det_sign"].get<int>());
        std::printf("%s\n", j["summary"].get<std::string>().c_str());
        if (dot.p) {
          std::fputs(dot.str().c_str(), stdout);
        }
      }
    } else if (kt->parsed()) {
      Text r;
      if (kt_bf->parsed()) {
        check(lvt_bowen_franks(load(kt_matrix).c_str(), &r.p));
      } else if (kt_eq->parsed()) {
        check(lvt_dim_equal(load(kt_matrix).c_str(), load(kt_x).c_str(), load(kt_y).c_str(),
                            kt_bound, &r.p));
      } else if (kt_pos->parsed()) {
        check(lvt_dim_positive(load(kt_matrix).c_str(), load(kt_x).c_str(), kt_bound, &r.p));
      } else {
        check(lvt_franks(load(kt_matrix).c_str(), load(kt_b).c_str(), &r.p));
      }
      Json const j = r.json();
      if (as_json) {
        std::puts(j.dump(2).c_str());
      } else if (kt_bf->parsed()) {
        std::printf("coker(I-A): %s\ndet(I-A): %s\n",
                    j["group"]["description"].get<std::string>().c_str(), j["det"].dump().c_str());
      } else if (kt_fr->parsed()) {
        std::printf("A: %s, det(I-A) = %s\nB: %s, det(I-B) = %s\n%s: %s\n",
                    j["A"]["group"]["description"].get<std::string>().c_str(),
                    j["A"]["det"].dump().c_str(),
                    j["B"]["group"]["description"].get<std::string>().c_str(),
                    j["B"]["det"].dump().c_str(),
                    j["obstructed"].get<bool>() ? "obstructed" : "not obstructed",
                    j["reason"].get<std::string>().c_str());
      } else {
        std::printf("%s (bound %zu, witness %zu)\n", j["verdict"].get<std::string>().c_str(),
                    j["bound"].get<std::size_t>(), j["witness"].get<std::size_t>());
      }
    } else if (se->parsed()) {
      Text r;
      if (se_verify->parsed()) {
        status = soft(lvt_se_verify(load(se_cert).c_str(), &r.p), r);
      } else if (se_search->parsed()) {
        status = soft(lvt_se_search(load(se_a).c_str(), load(se_b).c_str(), se_lag_max,
                                    se_entry, &r.p),
                      r);
      } else if (se_unit->parsed()) {
        check(lvt_se_unit(load(se_cert).c_str(), se_m, se_bound, &r.p));
      } else {
        check(lvt_se_normalize(load(se_cert).c_str(), se_m, se_bound, &r.p));
      }
      Json const j = r.json();
      if (as_json) {
        std::puts(j.dump(2).c_str());
      } else if (se_verify->parsed()) {
        for (auto const& e : j["equations"]) {
          std::printf("%s %s", e["pass"].get<bool>() ? "PASS" : "FAIL",
                      e["equation"].get<std::string>().c_str());
          if (!e["pass"].get<bool>()) {
            std::printf("  at (%zu,%zu): %s != %s", e["row"].get<std::size_t>(),
                        e["col"].get<std::size_t>(), e["lhs"].dump().c_str(),
                        e["rhs"].dump().c_str());
          }
          std::printf("\n");
        }
        std::printf("shift equivalence of lag %zu: %s\n", j["lag"].get<std::size_t>(),
                    j["pass"].get<bool>() ? "pass" : "fail");
      } else if (se_search->parsed()) {
        if (j["found"].get<bool>()) {
          auto const& c = j["certificate"];
          std::printf("found, lag %zu\nS:\n%sR:\n%s", c["lag"].get<std::size_t>(),
                      matrix_text(c["S"]).c_str(), matrix_text(c["R"]).c_str());
        } else {
          std::printf("none with lag <= %zu and entries <= %ld\n", se_lag_max, se_entry);
        }
      } else if (se_unit->parsed()) {
        std::printf("preserves order unit at m=%zu: %s (bound %zu)\n", se_m,
                    j["verdict"].get<std::string>().c_str(), j["bound"].get<std::size_t>());
      } else {
        auto const& c = j["certificate"];
        std::printf("m = %zu, lag = %zu (S multiplied by B^%zu)\nS:\n%sR:\n%s",
                    j["m"].get<std::size_t>(), j["lag"].get<std::size_t>(),
                    j["k"].get<std::size_t>(), matrix_text(c["S"]).c_str(),
                    matrix_text(c["R"]).c_str());
      }
    } else if (mv->parsed()) {
      GraphHandle g, out;
      read_graph(mv_graph, g);
      Text cert;
      if (mv_am->parsed()) {
        check(lvt_moves_amalgamate(g.g, mv_dir == "out" ? LVT_OUT : LVT_IN, &out.g, &cert.p));
      } else {
        std::string const spec = mv_spec.empty() ? std::string() : load(mv_spec);
        check(lvt_moves_split(g.g, spec.empty() ? nullptr : spec.c_str(),
                              mv_os->parsed() ? LVT_OUT : LVT_IN, &out.g, &cert.p));
      }
      if (!out.g) {
        if (as_json) {
          std::puts("null");
        } else {
          std::puts("no mergeable pair");
        }
      } else {
        Text gj;
        check(lvt_graph_to_json(out.g, &gj.p));
        if (!mv_out.empty()) {
          write_file(mv_out, gj.str());
        }
        if (!mv_cert.empty()) {
          write_file(mv_cert, cert.json().dump(2));
        }
        if (as_json) {
          Json j;
          j["graph"]       = gj.json();
          j["certificate"] = cert.json();
          std::puts(j.dump(2).c_str());
        } else {
          Json const c = cert.json();
          std::printf("%s\nS:\n%sR:\n%s", gj.str().c_str(), matrix_text(c["S"]).c_str(),
                      matrix_text(c["R"]).c_str());
        }
      }
    } else if (lift->parsed()) {
      GraphHandle e, f;
      read_graph(lift_e, e);
      read_graph(lift_f, f);
      lvt_lift_options opt;
      lvt_lift_options_init(&opt);
      opt.has_m          = lift_m.has_value();
      opt.m              = lift_m.value_or(0);
      opt.auto_normalize = lift_norm;
      opt.depth          = lift_depth;
      opt.seed           = lift_seed;
      opt.block_guard    = lift_guard;
      opt.include_tables = lift_tables;
      Text r;
      status       = soft(lvt_lift(e.g, f.g, load(lift_cert).c_str(), &opt, &r.p), r);
      Json const j = r.json();
      if (!lift_out.empty()) {
        write_file(lift_out, j.dump(2));
      }
      if (as_json) {
        std::puts(j.dump(2).c_str());
      } else {
        auto const& in = j["input"];
        std::printf("lift: lag %zu, m %zu, depth %zu, seed %llu%s\n",
                    in["lag"].get<std::size_t>(), in["m"].get<std::size_t>(),
                    in["depth"].get<std::size_t>(),
                    static_cast<unsigned long long>(in["seed"].get<std::uint64_t>()),
                    in["m_exceeds_lag"].get<bool>() ? " (m > l)" : "");
        print_checks(j["diamond"], "diamond");
        print_checks(j["twist"], "twist");
        print_checks(j["graded_iso"], "graded");
        std::printf("%zu checks, %zu failed\n", j["checks"].get<std::size_t>(),
                    j["failed"].get<std::size_t>());
      }
    } else if (lpa->parsed()) {
      GraphHandle g;
      read_graph(lpa_graph, g);
      Text r;
      if (lpa_eval->parsed()) {
        check(lvt_lpa_eval(g.g, lpa_expr.c_str(), &r.p));
      } else {
        status = soft(lvt_lpa_theta(g.g, lpa_u.c_str(), lpa_z.c_str(), lpa_expr.c_str(),
                                    lpa_conj, &r.p),
                      r);
      }
      Json const j = r.json();
      if (as_json) {
        std::puts(j.dump(2).c_str());
      } else if (lpa_eval->parsed()) {
        std::printf("%s\n", j["normal_form"].get<std::string>().c_str());
      } else {
        std::printf("%s\n", j["theta"].get<std::string>().c_str());
        if (j.contains("conjugator")) {
          auto const& c = j["conjugator"];
          std::printf("conjugator at level %zu: %s (%zu units)\n", c["n"].get<std::size_t>(),
                      c["pass"].get<bool>() ? "pass" : "FAIL",
                      c["units_checked"].get<std::size_t>());
        }
      }
    } else if (br->parsed()) {
      GraphHandle g;
      read_graph(br_graph, g);
      Text dot;
      check(lvt_graph_bratteli(g.g, br_levels, &dot.p));
      std::fputs(dot.str().c_str(), stdout);
    }
    return status;
  } catch (Failure const& f) {
    std::fprintf(stderr, "error: %s\n", f.message.c_str());
    return f.status;
  } catch (Json::exception const& e) {
    std::fprintf(stderr, "error: malformed report: %s\n", e.what());
    return LVT_ERR_INTERNAL;
  }
}
