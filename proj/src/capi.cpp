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

#include "leavitt/leavitt.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "leavitt/commands.hpp"
#include "leavitt/error.hpp"
#include "leavitt/tower.hpp"

struct lvt_graph {
  std::shared_ptr<leavitt::Graph const> g;
};

namespace {
  thread_local std::string last_error;

  char* dup(std::string const& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) {
      throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  std::string dump(leavitt::Json const& j) {
    return j.dump(2);
  }

  template <typename F>
  lvt_status guarded(F&& f) {
    last_error.clear();
    try {
      return f();
    } catch (leavitt::Error const& e) {
      last_error = e.what();
      return static_cast<lvt_status>(e.code());
    } catch (std::bad_alloc const&) {
      last_error = "out of memory";
      return LVT_ERR_INTERNAL;
    } catch (std::exception const& e) {
      last_error = e.what();
      return LVT_ERR_INTERNAL;
    }
  }

  void need(void const* p, char const* what) {
    if (!p) {
      leavitt::throw_input(std::string(what) + " is NULL");
    }
  }

  leavitt::SeCertificate certificate(char const* text) {
    need(text, "certificate");
    return leavitt::parse_se_certificate(text);
  }
}  // namespace

extern "C" {

const char* lvt_version(void) {
  return "0.1.0";
}

const char* lvt_last_error(void) {
  return last_error.c_str();
}

void lvt_string_free(char* s) {
  std::free(s);
}

lvt_status lvt_graph_parse(const char* json, lvt_graph** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new lvt_graph{std::make_shared<leavitt::Graph const>(leavitt::parse_graph(json))};
    return LVT_OK;
  });
}

void lvt_graph_free(lvt_graph* g) {
  delete g;
}

size_t lvt_graph_num_vertices(const lvt_graph* g) {
  return g ? g->g->num_vertices() : 0;
}

size_t lvt_graph_num_edges(const lvt_graph* g) {
  return g ? g->g->num_edges() : 0;
}

lvt_status lvt_graph_to_json(const lvt_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    *out = dup(leavitt::graph_to_json(*g->g));
    return LVT_OK;
  });
}

lvt_status lvt_graph_info(const lvt_graph* g, char** report) {
  return guarded([&] {
    need(g, "graph");
    *report = dup(dump(leavitt::cmd_graph_info(*g->g)));
    return LVT_OK;
  });
}

lvt_status lvt_graph_bratteli(const lvt_graph* g, size_t levels, char** dot) {
  return guarded([&] {
    need(g, "graph");
    *dot = dup(leavitt::bratteli_dot(*g->g, levels));
    return LVT_OK;
  });
}

lvt_status lvt_bowen_franks(const char* matrix, char** report) {
  return guarded([&] {
    need(matrix, "matrix");
    *report = dup(dump(leavitt::cmd_bowen_franks(leavitt::parse_matrix(matrix))));
    return LVT_OK;
  });
}

lvt_status lvt_dim_equal(const char* matrix, const char* x, const char* y, size_t bound,
                         char** report) {
  return guarded([&] {
    need(matrix, "matrix");
    need(x, "x");
    need(y, "y");
    *report = dup(dump(leavitt::cmd_dim_equal(leavitt::parse_matrix(matrix),
                                              leavitt::parse_dim_elem(x),
                                              leavitt::parse_dim_elem(y), bound)));
    return LVT_OK;
  });
}

lvt_status lvt_dim_positive(const char* matrix, const char* x, size_t bound, char** report) {
  return guarded([&] {
    need(matrix, "matrix");
    need(x, "x");
    *report = dup(dump(leavitt::cmd_dim_positive(leavitt::parse_matrix(matrix),
                                                 leavitt::parse_dim_elem(x), bound)));
    return LVT_OK;
  });
}

lvt_status lvt_franks(const char* a, const char* b, char** report) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    *report = dup(dump(leavitt::cmd_franks(leavitt::parse_matrix(a), leavitt::parse_matrix(b))));
    return LVT_OK;
  });
}

lvt_status lvt_se_verify(const char* cert, char** report) {
  return guarded([&] {
    leavitt::Json const j = leavitt::cmd_se_verify(certificate(cert));
    *report               = dup(dump(j));
    return j["pass"].get<bool>() ? LVT_OK : LVT_ERR_CERTIFICATE;
  });
}

lvt_status lvt_se_search(const char* a, const char* b, size_t lag_max, long entry_bound,
                         char** report) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    leavitt::Json const j = leavitt::cmd_se_search(leavitt::parse_matrix(a),
                                                   leavitt::parse_matrix(b), lag_max,
                                                   entry_bound);
    *report = dup(dump(j));
    return j["found"].get<bool>() ? LVT_OK : LVT_ERR_BOUND;
  });
}

lvt_status lvt_se_unit(const char* cert, size_t m, size_t bound, char** report) {
  return guarded([&] {
    *report = dup(dump(leavitt::cmd_se_unit(certificate(cert), m, bound)));
    return LVT_OK;
  });
}

lvt_status lvt_se_normalize(const char* cert, size_t m, size_t bound, char** report) {
  return guarded([&] {
    *report = dup(dump(leavitt::cmd_se_normalize(certificate(cert), m, bound)));
    return LVT_OK;
  });
}

lvt_status lvt_moves_split(const lvt_graph* g, const char* spec, lvt_direction dir,
                           lvt_graph** out, char** cert) {
  return guarded([&] {
    need(g, "graph");
    leavitt::SplitSpec const s =
        spec ? leavitt::parse_split_spec(*g->g, spec) : leavitt::SplitSpec{};
    leavitt::MoveOutput r = leavitt::cmd_split(
        *g->g, s, dir == LVT_OUT ? leavitt::MoveDirection::kOut : leavitt::MoveDirection::kIn);
    *cert = dup(dump(r.certificate));
    *out  = new lvt_graph{std::make_shared<leavitt::Graph const>(std::move(r.graph))};
    return LVT_OK;
  });
}

lvt_status lvt_moves_amalgamate(const lvt_graph* g, lvt_direction dir, lvt_graph** out,
                                char** cert) {
  return guarded([&] {
    need(g, "graph");
    auto r = leavitt::cmd_amalgamate(
        *g->g, dir == LVT_OUT ? leavitt::MoveDirection::kOut : leavitt::MoveDirection::kIn);
    *out  = nullptr;
    *cert = nullptr;
    if (r) {
      *cert = dup(dump(r->certificate));
      *out  = new lvt_graph{std::make_shared<leavitt::Graph const>(std::move(r->graph))};
    }
    return LVT_OK;
  });
}

void lvt_lift_options_init(lvt_lift_options* opt) {
  if (opt) {
    *opt             = lvt_lift_options{};
    opt->depth       = 2;
    opt->block_guard = leavitt::kDefaultBlockGuard;
  }
}

lvt_status lvt_lift(const lvt_graph* e, const lvt_graph* f, const char* cert,
                    const lvt_lift_options* opt, char** report) {
  return guarded([&] {
    need(e, "graph E");
    need(f, "graph F");
    lvt_lift_options o;
    lvt_lift_options_init(&o);
    if (opt) {
      o = *opt;
    }
    leavitt::LiftOptions lo;
    if (o.has_m) {
      lo.m = o.m;
    }
    lo.auto_normalize = o.auto_normalize != 0;
    lo.depth          = o.depth;
    lo.seed           = o.seed;
    lo.block_guard    = o.block_guard ? o.block_guard : leavitt::kDefaultBlockGuard;
    lo.include_tables = o.include_tables != 0;
    leavitt::Json const j = leavitt::cmd_lift(*e->g, *f->g, certificate(cert), lo);
    *report               = dup(dump(j));
    return j["pass"].get<bool>() ? LVT_OK : LVT_ERR_VERIFICATION;
  });
}

lvt_status lvt_lpa_eval(const lvt_graph* g, const char* expr, char** report) {
  return guarded([&] {
    need(g, "graph");
    need(expr, "expression");
    *report = dup(dump(leavitt::cmd_lpa_eval(g->g, expr)));
    return LVT_OK;
  });
}

lvt_status lvt_lpa_theta(const lvt_graph* g, const char* u, const char* z, const char* x,
                         long conjugator_level, char** report) {
  return guarded([&] {
    need(g, "graph");
    need(u, "u");
    need(z, "z");
    need(x, "x");
    std::optional<std::size_t> n;
    if (conjugator_level >= 0) {
      n = static_cast<std::size_t>(conjugator_level);
    }
    leavitt::Json const j = leavitt::cmd_lpa_theta(g->g, u, z, x, n);
    *report               = dup(dump(j));
    return j["pass"].get<bool>() ? LVT_OK : LVT_ERR_VERIFICATION;
  });
}

}  // extern "C"
