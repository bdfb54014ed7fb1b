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

#ifndef LEAVITT_LEAVITT_H_
#define LEAVITT_LEAVITT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LVT_BUILDING_LIBRARY)
#    define LVT_API __declspec(dllexport)
#  else
#    define LVT_API __declspec(dllimport)
#  endif
#else
#  define LVT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as the CLI exit codes. */
typedef enum lvt_status {
  LVT_OK                   = 0,
  LVT_ERR_VERIFICATION     = 1,
  LVT_ERR_INPUT            = 2,
  LVT_ERR_BOUND            = 3,
  LVT_ERR_CERTIFICATE      = 4,
  LVT_ERR_NOT_UNITAL       = 5,
  LVT_ERR_INTERNAL         = 6
} lvt_status;

typedef struct lvt_graph lvt_graph;

typedef enum lvt_direction { LVT_IN = 0, LVT_OUT = 1 } lvt_direction;

typedef struct lvt_lift_options {
  int      has_m;          /* when 0, m comes from the certificate */
  size_t   m;
  int      auto_normalize;
  size_t   depth;
  uint64_t seed;           /* 0: lexicographic choices */
  size_t   block_guard;    /* 0: library default */
  int      include_tables;
} lvt_lift_options;

LVT_API const char* lvt_version(void);

/* Message of the last failed call on this thread, or "". */
LVT_API const char* lvt_last_error(void);

/* Every char* handed out by the library is released with this. */
LVT_API void lvt_string_free(char* s);

LVT_API lvt_status lvt_graph_parse(const char* json, lvt_graph** out);
LVT_API void       lvt_graph_free(lvt_graph* g);
LVT_API size_t     lvt_graph_num_vertices(const lvt_graph* g);
LVT_API size_t     lvt_graph_num_edges(const lvt_graph* g);
LVT_API lvt_status lvt_graph_to_json(const lvt_graph* g, char** out);
LVT_API lvt_status lvt_graph_info(const lvt_graph* g, char** report);
LVT_API lvt_status lvt_graph_bratteli(const lvt_graph* g, size_t levels, char** dot);

/* Matrices are JSON arrays of rows. */
LVT_API lvt_status lvt_bowen_franks(const char* matrix, char** report);
LVT_API lvt_status lvt_dim_equal(const char* matrix, const char* x, const char* y,
                                 size_t bound, char** report);
LVT_API lvt_status lvt_dim_positive(const char* matrix, const char* x, size_t bound,
                                    char** report);
LVT_API lvt_status lvt_franks(const char* a, const char* b, char** report);

/* Certificates: {"A", "B", "S", "R", "lag"[, "m"]}. */
LVT_API lvt_status lvt_se_verify(const char* certificate, char** report);
LVT_API lvt_status lvt_se_search(const char* a, const char* b, size_t lag_max,
                                 long entry_bound, char** report);
LVT_API lvt_status lvt_se_unit(const char* certificate, size_t m, size_t bound,
                               char** report);
LVT_API lvt_status lvt_se_normalize(const char* certificate, size_t m, size_t bound,
                                    char** report);

/* *out is NULL when nothing can be amalgamated. */
LVT_API lvt_status lvt_moves_split(const lvt_graph* g, const char* spec,
                                   lvt_direction dir, lvt_graph** out,
                                   char** certificate);
LVT_API lvt_status lvt_moves_amalgamate(const lvt_graph* g, lvt_direction dir,
                                        lvt_graph** out, char** certificate);

LVT_API void       lvt_lift_options_init(lvt_lift_options* opt);
/* LVT_ERR_VERIFICATION with a full report when some identity fails. */
LVT_API lvt_status lvt_lift(const lvt_graph* e, const lvt_graph* f,
                            const char* certificate, const lvt_lift_options* opt,
                            char** report);

LVT_API lvt_status lvt_lpa_eval(const lvt_graph* g, const char* expr, char** report);
/* conjugator_level < 0 skips the conjugator check. */
LVT_API lvt_status lvt_lpa_theta(const lvt_graph* g, const char* u, const char* z,
                                 const char* x, long conjugator_level, char** report);

#ifdef __cplusplus
}
#endif

#endif /* LEAVITT_LEAVITT_H_ */
