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

/* Exercises the C interface from C, linking only the shared library. */

#include <stdio.h>
#include <string.h>

#include "leavitt/leavitt.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int contains(const char* s, const char* needle) {
  return s != NULL && strstr(s, needle) != NULL;
}

static const char* kFib =
    "{\"vertices\":[\"v\",\"w\"],"
    "\"edges\":[[\"a\",\"v\",\"v\"],[\"b\",\"v\",\"w\"],[\"c\",\"w\",\"v\"]]}";
static const char* kL2 =
    "{\"vertices\":[\"v\"],\"edges\":[[\"e1\",\"v\",\"v\"],[\"e2\",\"v\",\"v\"]]}";
static const char* kCert =
    "{\"A\":[[1,1],[1,0]],\"B\":[[1,1,0],[0,0,1],[1,1,0]],"
    "\"S\":[[1,0],[0,1],[1,0]],\"R\":[[1,1,0],[0,0,1]],\"lag\":1}";

static void graphs(void) {
  lvt_graph* g   = NULL;
  char*      out = NULL;
  EXPECT(lvt_graph_parse(kL2, &g) == LVT_OK);
  EXPECT(lvt_graph_num_vertices(g) == 1);
  EXPECT(lvt_graph_num_edges(g) == 2);
  EXPECT(lvt_graph_info(g, &out) == LVT_OK);
  EXPECT(contains(out, "K0: trivial; unit: 0; det(I-A): -1"));
  lvt_string_free(out);
  out = NULL;
  EXPECT(lvt_graph_bratteli(g, 2, &out) == LVT_OK);
  EXPECT(contains(out, "digraph"));
  lvt_string_free(out);
  lvt_graph_free(g);

  g = NULL;
  EXPECT(lvt_graph_parse("{\"vertices\":[\"v\"],\"edges\":[[\"e\",\"v\",\"w\"]]}", &g)
         == LVT_ERR_INPUT);
  EXPECT(g == NULL);
  EXPECT(strlen(lvt_last_error()) > 0);
  EXPECT(lvt_graph_parse(NULL, &g) == LVT_ERR_INPUT);
}

static void ktheory(void) {
  char* out = NULL;
  EXPECT(lvt_bowen_franks("[[2]]", &out) == LVT_OK);
  EXPECT(contains(out, "\"det\": -1"));
  lvt_string_free(out);
  out = NULL;
  EXPECT(lvt_bowen_franks("[[-2]]", &out) == LVT_ERR_INPUT);
  EXPECT(lvt_dim_equal("[[2]]", "{\"level\":0,\"vec\":[1]}", "{\"level\":0,\"vec\":[2]}", 16,
                       &out)
         == LVT_OK);
  EXPECT(contains(out, "\"no\""));
  lvt_string_free(out);
  out = NULL;
  EXPECT(lvt_dim_positive("[[1,1],[1,0]]", "{\"level\":0,\"vec\":[1,-1]}", 16, &out) == LVT_OK);
  EXPECT(contains(out, "\"yes\""));
  lvt_string_free(out);
  out = NULL;
  EXPECT(lvt_franks("[[2]]", "[[3]]", &out) == LVT_OK);
  EXPECT(contains(out, "\"obstructed\": true"));
  lvt_string_free(out);
}

static void shift_equivalence(void) {
  char* out = NULL;
  EXPECT(lvt_se_verify(kCert, &out) == LVT_OK);
  lvt_string_free(out);
  out = NULL;
  EXPECT(lvt_se_verify("{\"A\":[[2]],\"B\":[[3]],\"S\":[[1]],\"R\":[[1]],\"lag\":1}", &out)
         == LVT_ERR_CERTIFICATE);
  lvt_string_free(out);
  out = NULL;
  EXPECT(lvt_se_search("[[2]]", "[[2]]", 1, 2, &out) == LVT_OK);
  lvt_string_free(out);
  out = NULL;
  EXPECT(lvt_se_search("[[2]]", "[[4]]", 2, 4, &out) == LVT_ERR_BOUND);
  lvt_string_free(out);
  out = NULL;
  EXPECT(lvt_se_unit(kCert, 0, 16, &out) == LVT_OK);
  EXPECT(contains(out, "\"yes\""));
  lvt_string_free(out);
  out = NULL;
  EXPECT(lvt_se_unit(kCert, 1, 16, &out) == LVT_OK);
  EXPECT(contains(out, "\"no\""));
  lvt_string_free(out);
  out = NULL;
  EXPECT(lvt_se_normalize(kCert, 1, 16, &out) == LVT_ERR_NOT_UNITAL);
  lvt_string_free(out);
}

static void moves_and_lift(void) {
  lvt_graph* e    = NULL;
  lvt_graph* f    = NULL;
  lvt_graph* back = NULL;
  char*      cert = NULL;
  char*      out  = NULL;
  EXPECT(lvt_graph_parse(kFib, &e) == LVT_OK);
  EXPECT(lvt_moves_split(e, "{\"v\":[[\"a\"],[\"c\"]]}", LVT_IN, &f, &cert) == LVT_OK);
  EXPECT(lvt_graph_num_vertices(f) == 3);
  EXPECT(lvt_moves_amalgamate(f, LVT_IN, &back, &out) == LVT_OK);
  EXPECT(back != NULL && lvt_graph_num_vertices(back) == 2);
  lvt_string_free(out);
  out = NULL;

  lvt_lift_options opt;
  lvt_lift_options_init(&opt);
  opt.has_m          = 1;
  opt.m              = 0;
  opt.auto_normalize = 1;
  opt.depth          = 1;
  EXPECT(lvt_lift(e, f, cert, &opt, &out) == LVT_OK);
  EXPECT(contains(out, "\"failed\": 0"));
  lvt_string_free(out);
  out = NULL;
  opt.auto_normalize = 0;
  opt.m              = 1;
  EXPECT(lvt_lift(e, f, cert, &opt, &out) == LVT_ERR_NOT_UNITAL);
  EXPECT(contains(lvt_last_error(), "j=0"));
  lvt_string_free(out);

  lvt_string_free(cert);
  lvt_graph_free(back);
  lvt_graph_free(f);
  lvt_graph_free(e);

  lvt_graph* l = NULL;
  EXPECT(lvt_graph_parse(kL2, &l) == LVT_OK);
  EXPECT(lvt_moves_amalgamate(l, LVT_OUT, &back, &out) == LVT_OK);
  EXPECT(back == NULL);
  lvt_graph_free(l);
}

static void lpa(void) {
  lvt_graph* g   = NULL;
  char*      out = NULL;
  EXPECT(lvt_graph_parse(kL2, &g) == LVT_OK);
  EXPECT(lvt_lpa_eval(g, "t-*t+", &out) == LVT_OK);
  EXPECT(contains(out, "\"normal_form\": \"1\""));
  lvt_string_free(out);
  out = NULL;
  EXPECT(lvt_lpa_eval(g, "e1 e1*", &out) == LVT_OK);
  EXPECT(contains(out, "v - e2 e2*"));
  lvt_string_free(out);
  out = NULL;
  EXPECT(lvt_lpa_eval(g, "e1 +", &out) == LVT_ERR_INPUT);
  EXPECT(lvt_lpa_theta(g, "1", "3/2", "e1 e2*", 2, &out) == LVT_OK);
  EXPECT(contains(out, "\"pass\": true"));
  lvt_string_free(out);
  lvt_graph_free(g);
}

int main(void) {
  EXPECT(strlen(lvt_version()) > 0);
  graphs();
  ktheory();
  shift_equivalence();
  moves_and_lift();
  lpa();
  if (failures != 0) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("c api: all checks passed\n");
  return 0;
}
