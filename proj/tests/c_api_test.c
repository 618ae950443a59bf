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

/* Exercises the public header from plain C against the shared library. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "rainbow/rainbow.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, \
              #cond);                                             \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void graphs(void) {
  static const uint32_t k4[] = {0, 1, 1, 2, 3, 1, 0, 2, 2, 1, 3, 2, 0, 3, 3, 1, 2, 3};
  rb_graph* g = NULL;
  EXPECT(rb_graph_build(4, k4, 6, &g) == RB_OK);
  EXPECT(rb_graph_order(g) == 4);
  EXPECT(rb_graph_edge_count(g) == 6);
  EXPECT(rb_graph_min_degree(g) == 3);
  EXPECT(rb_graph_largest_class(g) == 2);

  rb_solution* s = NULL;
  EXPECT(rb_solve_max(g, RB_UNLIMITED_NODES, &s) == RB_OK);
  EXPECT(rb_solution_size(s) == 1);
  EXPECT(rb_solution_optimal(s));
  size_t count = 0;
  const uint32_t* edges = rb_solution_edges(s, &count);
  int ok = 0;
  EXPECT(count == 1);
  EXPECT(rb_is_rainbow_matching(g, edges, count, &ok) == RB_OK && ok);
  rb_solution_free(s);

  EXPECT(rb_solve_at_least(g, 2, RB_UNLIMITED_NODES, &s) == RB_OK);
  EXPECT(!rb_solution_found(s));
  rb_solution_free(s);

  EXPECT(rb_engine_run(g, 2, 3, &s) == RB_OK);
  EXPECT(rb_solution_size(s) == 1);
  EXPECT(rb_solution_replays(s, &ok) == RB_OK && ok);
  rb_solution_free(s);

  char* text = NULL;
  rb_audit_summary summary;
  EXPECT(rb_audit_stuck(g, 2, 3, RB_FORMAT_JSON, &text, &summary) == RB_OK);
  EXPECT(text != NULL && strstr(text, "\"checks\"") != NULL);
  EXPECT(summary.delta == 2);
  EXPECT(summary.failed == 0);
  rb_string_free(text);

  EXPECT(rb_graph_to_text(g, &text) == RB_OK);
  rb_graph* back = NULL;
  EXPECT(rb_graph_parse(text, &back) == RB_OK);
  EXPECT(rb_graph_edge_count(back) == 6);
  rb_graph_free(back);
  rb_string_free(text);
  rb_graph_free(g);
}

static void errors(void) {
  static const uint32_t clash[] = {0, 1, 5, 1, 2, 5};
  rb_graph* g = NULL;
  EXPECT(rb_graph_build(3, clash, 2, &g) == RB_ERR_IMPROPER_COLORING);
  EXPECT(g == NULL);
  EXPECT(strlen(rb_last_error()) > 0);
  EXPECT(strcmp(rb_status_name(RB_ERR_IMPROPER_COLORING), "ImproperColoring") == 0);

  EXPECT(rb_graph_parse("g 2\ne 0 1 one\n", &g) == RB_ERR_PARSE);
  EXPECT(strstr(rb_last_error(), "line 2") != NULL);
  EXPECT(rb_graph_parse(NULL, &g) == RB_ERR_INVALID_ARGUMENT);
  EXPECT(rb_graph_load("/nonexistent/graph.txt", &g) == RB_ERR_IO);

  rb_cert cert;
  EXPECT(rb_certify(1, 0, &cert) == RB_ERR_INVALID_ARGUMENT);
}

static void latin(void) {
  rb_latin* sq = NULL;
  uint64_t count = 0;
  EXPECT(rb_latin_cyclic(5, &sq) == RB_OK);
  EXPECT(rb_latin_count_transversals(sq, &count) == RB_OK && count == 15);
  rb_graph* g = NULL;
  EXPECT(rb_latin_to_graph(sq, &g) == RB_OK);
  EXPECT(rb_count_rainbow_perfect_matchings(g, RB_UNLIMITED_NODES, &count) == RB_OK);
  EXPECT(count == 15);
  rb_latin* back = NULL;
  EXPECT(rb_latin_from_graph(g, &back) == RB_OK);
  EXPECT(rb_latin_at(back, 1, 1) == rb_latin_at(sq, 1, 1));
  rb_latin_free(back);
  rb_graph_free(g);
  rb_latin_free(sq);

  EXPECT(rb_latin_cyclic(10, &sq) == RB_OK);
  EXPECT(rb_latin_count_transversals(sq, &count) == RB_ERR_ORDER_TOO_LARGE);
  rb_latin_free(sq);
  EXPECT(rb_latin_parse("2\n1 1\n2 2\n", &sq) == RB_ERR_INVALID_LATIN_SQUARE);
}

static void numbers(void) {
  rb_cert cert;
  EXPECT(rb_bound_n(2) == 7);
  EXPECT(rb_bound_n(4) == 16);
  EXPECT(rb_certify(2, 0, &cert) == RB_OK);
  EXPECT(cert.holds && cert.tail_ok);
  EXPECT(cert.worst_n_num == 6 && cert.worst_n_den == 1);
  EXPECT(cert.margin_num > 0);

  rb_cert range[4];
  EXPECT(rb_certify_range(2, 5, 2, range) == RB_OK);
  EXPECT(range[3].delta == 5 && range[3].worst_n_num == 97 && range[3].worst_n_den == 5);
}

static void campaigns(void) {
  rb_verify_config cfg;
  rb_verify_config_init(&cfg);
  cfg.samples = 5;
  cfg.recolourings = 1;
  cfg.inject_k4 = 1;
  char* rows = NULL;
  char* cells = NULL;
  rb_verify_summary summary;
  EXPECT(rb_verify(&cfg, RB_FORMAT_CSV, &rows, &cells, &summary) == RB_OK);
  EXPECT(summary.instances == 2 * 5 * 2 + 1);
  EXPECT(summary.violations == 0);
  EXPECT(rows != NULL && strstr(rows, "exception") != NULL);
  EXPECT(cells != NULL && strncmp(cells, "delta,n,", 8) == 0);
  rb_string_free(rows);
  rb_string_free(cells);

  rb_scan_config scan;
  char* out = NULL;
  rb_scan_config_init(&scan);
  scan.samples = 0;
  EXPECT(rb_scan(&scan, RB_FORMAT_JSON, &out) == RB_OK);
  EXPECT(out != NULL && strstr(out, "\"failure_rate\": null") != NULL);
  rb_string_free(out);

  rb_graph* g = NULL;
  EXPECT(rb_gen_min_degree(7, 2, 1, 0.0, 2, &g) == RB_OK);
  EXPECT(rb_graph_min_degree(g) >= 2);
  rb_graph_free(g);
  EXPECT(rb_gen_min_degree(3, 3, 1, 0.0, 2, &g) == RB_ERR_INFEASIBLE_DEGREE);
}

int main(void) {
  graphs();
  errors();
  latin();
  numbers();
  campaigns();
  if (failures) {
    fprintf(stderr, "%d expectation(s) failed\n", failures);
    return EXIT_FAILURE;
  }
  printf("c api: all expectations met\n");
  return EXIT_SUCCESS;
}
