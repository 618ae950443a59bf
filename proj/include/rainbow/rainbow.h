/*
 * Copyright 2026 The Rainbow Matching Toolkit Authors.
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

/*
 * C interface to the rainbow matching toolkit.
 *
 * Objects are opaque handles released with the matching *_free call.
 * Every fallible call returns an rb_status; on failure the thread-local
 * rb_last_error() describes what went wrong. Strings handed out through a
 * char** are owned by the caller and released with rb_string_free.
 */

#ifndef RAINBOW_RAINBOW_H
#define RAINBOW_RAINBOW_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(RB_BUILDING_LIBRARY)
#define RB_API __declspec(dllexport)
#else
#define RB_API __declspec(dllimport)
#endif
#else
#define RB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rb_status {
  RB_OK = 0,
  RB_ERR_INVALID_ARGUMENT = 1,
  RB_ERR_PARSE = 2,
  RB_ERR_LOOP_EDGE = 3,
  RB_ERR_DUPLICATE_EDGE = 4,
  RB_ERR_IMPROPER_COLORING = 5,
  RB_ERR_VERTEX_OUT_OF_RANGE = 6,
  RB_ERR_UNKNOWN_EDGE = 7,
  RB_ERR_BUDGET_EXCEEDED = 8,
  RB_ERR_NOT_STUCK = 9,
  RB_ERR_INVALID_STATE = 10,
  RB_ERR_ORDER_TOO_LARGE = 11,
  RB_ERR_NOT_COMPLETE_BIPARTITE = 12,
  RB_ERR_WRONG_COLOUR_COUNT = 13,
  RB_ERR_INFEASIBLE_DEGREE = 14,
  RB_ERR_CAP_UNSAFE = 15,
  RB_ERR_RECURSION_BUDGET = 16,
  RB_ERR_IO = 17,
  RB_ERR_INVALID_LATIN_SQUARE = 18,
  RB_ERR_INTERNAL = 100
} rb_status;

typedef enum rb_format { RB_FORMAT_CSV = 0, RB_FORMAT_JSON = 1, RB_FORMAT_TABLE = 2 } rb_format;

typedef struct rb_graph rb_graph;
typedef struct rb_latin rb_latin;
typedef struct rb_solution rb_solution;

#define RB_UNLIMITED_NODES UINT64_MAX
#define RB_DEFAULT_CAMPAIGN_BUDGET 100000000ull

/* Errors and strings. */
RB_API const char* rb_last_error(void);
RB_API const char* rb_status_name(rb_status status);
RB_API void rb_string_free(char* s);

/* Graphs. Text format: "g n" header, then "e u v colour" lines; JSON is
 * {"n": n, "edges": [[u, v, colour], ...]}. parse auto-detects. */
RB_API rb_status rb_graph_parse(const char* text, rb_graph** out);
RB_API rb_status rb_graph_load(const char* path, rb_graph** out);
/* triples holds m consecutive (u, v, colour) entries. */
RB_API rb_status rb_graph_build(uint32_t n, const uint32_t* triples, size_t m, rb_graph** out);
RB_API void rb_graph_free(rb_graph* g);
RB_API uint32_t rb_graph_order(const rb_graph* g);
RB_API size_t rb_graph_edge_count(const rb_graph* g);
RB_API rb_status rb_graph_edge(const rb_graph* g, uint32_t e, uint32_t* u, uint32_t* v,
                               uint32_t* colour);
RB_API uint32_t rb_graph_min_degree(const rb_graph* g);
RB_API uint32_t rb_graph_max_degree(const rb_graph* g);
RB_API uint32_t rb_graph_palette_size(const rb_graph* g);
/* Largest colour class size. */
RB_API uint32_t rb_graph_largest_class(const rb_graph* g);
RB_API rb_status rb_graph_to_text(const rb_graph* g, char** out);
RB_API rb_status rb_graph_to_json(const rb_graph* g, char** out);
RB_API rb_status rb_is_rainbow_matching(const rb_graph* g, const uint32_t* edges, size_t k,
                                        int* out);

RB_API uint64_t rb_bound_n(uint64_t delta);
RB_API uint64_t rb_diemunsch_bound(uint64_t delta);

/* Solving. */
RB_API rb_status rb_solve_max(const rb_graph* g, uint64_t node_budget, rb_solution** out);
/* found reports whether a matching of size >= k exists; budget exhaustion is
 * RB_ERR_BUDGET_EXCEEDED. */
RB_API rb_status rb_solve_at_least(const rb_graph* g, size_t k, uint64_t node_budget,
                                   rb_solution** out);
RB_API rb_status rb_max_matching(const rb_graph* g, rb_solution** out);
/* depth above 3 enables deep exchanges, at most 5. */
RB_API rb_status rb_engine_run(const rb_graph* g, size_t target, size_t depth,
                               rb_solution** out);
RB_API void rb_solution_free(rb_solution* s);
RB_API size_t rb_solution_size(const rb_solution* s);
RB_API const uint32_t* rb_solution_edges(const rb_solution* s, size_t* count);
RB_API int rb_solution_found(const rb_solution* s);
RB_API int rb_solution_optimal(const rb_solution* s);
RB_API int rb_solution_budget_hit(const rb_solution* s);
RB_API uint64_t rb_solution_nodes(const rb_solution* s);
RB_API size_t rb_solution_trace_length(const rb_solution* s);
/* One JSON object per line: step, rule, removed, added, size. */
RB_API rb_status rb_solution_trace_json(const rb_graph* g, const rb_solution* s, char** out);
/* Engine solutions only: whether replaying the trace reproduces the result. */
RB_API rb_status rb_solution_replays(const rb_solution* s, int* out);

RB_API rb_status rb_count_rainbow_perfect_matchings(const rb_graph* g, uint64_t node_budget,
                                                    uint64_t* out);

/* Auditing. */
typedef struct rb_audit_summary {
  uint32_t delta;
  uint32_t r, s, t;
  size_t checks;
  size_t failed;        /* failed checks that are neither conditional nor diagnostic */
  size_t failed_conditional;
  size_t applicable_rules;
} rb_audit_summary;

/* Runs the engine towards target and audits the stuck state. Fails with
 * RB_ERR_NOT_STUCK if the engine reaches target. format is JSON or TABLE. */
RB_API rb_status rb_audit_stuck(const rb_graph* g, size_t target, size_t engine_depth,
                                rb_format format, char** out, rb_audit_summary* summary);
/* Audits a supplied rainbow matching m with monochromatic matching m0 (NULL
 * or empty m0 picks the largest unused colour class). */
RB_API rb_status rb_audit_state(const rb_graph* g, const uint32_t* m, size_t m_len,
                                const uint32_t* m0, size_t m0_len, rb_format format, char** out,
                                rb_audit_summary* summary);

/* Counting certification. Rationals are num/den in lowest terms. */
typedef struct rb_cert {
  uint32_t delta;
  uint32_t a_cap;
  int holds;
  int tail_ok;
  int printed_matches_rederived;
  int64_t worst_r, worst_s, worst_a;
  int64_t worst_t_num, worst_t_den;
  int64_t worst_n_num, worst_n_den;
  int64_t bound_num, bound_den;
  int64_t margin_num, margin_den;
  uint64_t tuples;
} rb_cert;

/* a_cap 0 selects the default. */
RB_API rb_status rb_certify(uint32_t delta, uint32_t a_cap, rb_cert* out);
/* out must hold hi - lo + 1 entries; threads 0 uses the hardware count. */
RB_API rb_status rb_certify_range(uint32_t lo, uint32_t hi, unsigned threads, rb_cert* out);

/* Latin squares. Text format: order n, then n rows of symbols. */
RB_API rb_status rb_latin_parse(const char* text, rb_latin** out);
RB_API rb_status rb_latin_load(const char* path, rb_latin** out);
RB_API rb_status rb_latin_cyclic(uint32_t n, rb_latin** out);
RB_API rb_status rb_latin_random(uint32_t n, uint64_t seed, rb_latin** out);
RB_API rb_status rb_latin_from_graph(const rb_graph* g, rb_latin** out);
RB_API rb_status rb_latin_to_graph(const rb_latin* sq, rb_graph** out);
RB_API void rb_latin_free(rb_latin* sq);
RB_API uint32_t rb_latin_order(const rb_latin* sq);
/* Symbols are normalised to 1..n. */
RB_API uint32_t rb_latin_at(const rb_latin* sq, uint32_t row, uint32_t col);
RB_API rb_status rb_latin_to_text(const rb_latin* sq, char** out);
/* Exhaustive; RB_ERR_ORDER_TOO_LARGE above order 9. */
RB_API rb_status rb_latin_count_transversals(const rb_latin* sq, uint64_t* out);

/* Generators. All output depends only on the arguments. */
RB_API uint64_t rb_derive_seed(uint64_t master, uint64_t a, uint64_t b, uint64_t c);
RB_API rb_status rb_gen_min_degree(uint32_t n, uint32_t delta, uint64_t seed, double p,
                                   uint64_t colour_seed, rb_graph** out);
RB_API rb_status rb_gen_one_factorization(uint32_t k, rb_graph** out);
RB_API rb_status rb_gen_sparse(uint32_t n, uint32_t m, uint32_t palette, uint64_t seed,
                               rb_graph** out);

/* Campaigns. */
typedef enum rb_n_rule { RB_N_BOUND = 0, RB_N_FIXED = 1, RB_N_OFFSET = 2 } rb_n_rule;

typedef struct rb_verify_config {
  uint32_t delta_min;
  uint32_t delta_max;
  rb_n_rule n_rule;
  uint32_t n_fixed;
  int64_t n_offset;
  uint32_t samples;
  uint32_t recolourings;
  uint64_t seed;
  double edge_probability;
  size_t engine_depth;
  uint64_t node_budget;
  int inject_k4;
  unsigned threads;
  const char* dump_dir; /* NULL: no dumps */
} rb_verify_config;

typedef struct rb_verify_summary {
  uint64_t config_hash;
  size_t instances;
  size_t violations;
  size_t inconclusive;
} rb_verify_summary;

RB_API void rb_verify_config_init(rb_verify_config* cfg);
/* CSV: rows gets the per-instance table and cells the per-cell table.
 * JSON: rows gets the whole document and cells is set to NULL. */
RB_API rb_status rb_verify(const rb_verify_config* cfg, rb_format format, char** rows,
                           char** cells, rb_verify_summary* summary);

typedef struct rb_scan_config {
  uint32_t delta;
  uint32_t n_min;
  uint32_t n_max;
  uint32_t samples;
  uint64_t seed;
  double edge_probability;
  size_t engine_depth;
  uint64_t node_budget;
  unsigned threads;
} rb_scan_config;

RB_API void rb_scan_config_init(rb_scan_config* cfg);
RB_API rb_status rb_scan(const rb_scan_config* cfg, rb_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* RAINBOW_RAINBOW_H */
