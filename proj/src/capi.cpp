// Copyright 2026 The Rainbow Matching Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rainbow/rainbow.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "rainbow/auditor.hpp"
#include "rainbow/campaign.hpp"
#include "rainbow/engine.hpp"
#include "rainbow/exact_solver.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/latin.hpp"

struct rb_graph {
  rainbow::EdgeColoredGraph g;
};

struct rb_latin {
  rainbow::LatinSquare sq;
};

struct rb_solution {
  rainbow::SolveResult result;
  bool found = true;
  bool engine = false;
};

namespace {

using rainbow::ErrorCode;

thread_local std::string last_error;

static_assert(static_cast<int>(ErrorCode::kInvalidLatinSquare) == RB_ERR_INVALID_LATIN_SQUARE);
static_assert(static_cast<int>(ErrorCode::kCapUnsafe) == RB_ERR_CAP_UNSAFE);

rb_status fail(rb_status status, const std::string& msg) {
  last_error = msg;
  return status;
}

template <typename F>
rb_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return RB_OK;
  } catch (const rainbow::Error& e) {
    return fail(static_cast<rb_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RB_ERR_INTERNAL, "unknown failure");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw rainbow::Error(ErrorCode::kInvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rainbow::EngineOptions engine_options(std::size_t depth) {
  rainbow::EngineOptions opts;
  opts.allow_deep_exchange = depth > rainbow::kDefaultExchangeDepth;
  return opts;
}

rainbow::Matching to_matching(const rainbow::EdgeColoredGraph& g, const std::uint32_t* edges,
                              std::size_t k) {
  require(k == 0 || edges, "edge array is null");
  std::vector<rainbow::EdgeId> ids(edges, edges + k);
  for (auto e : ids) {
    if (e >= g.edge_count()) {
      throw rainbow::Error(ErrorCode::kUnknownEdge, "edge id " + std::to_string(e) + " unknown");
    }
  }
  return rainbow::make_matching(std::move(ids));
}

void summarise(const rainbow::AuditReport& rep, rb_audit_summary* out) {
  if (!out) return;
  *out = rb_audit_summary{};
  out->delta = rep.delta;
  out->r = rep.r;
  out->s = rep.s;
  out->t = rep.t;
  out->checks = rep.checks.size();
  for (const auto& c : rep.checks) {
    if (c.holds || c.diagnostic) continue;
    if (c.conditional) {
      ++out->failed_conditional;
    } else {
      ++out->failed;
    }
  }
  out->applicable_rules = rep.applicable_rules.size();
}

std::string render_audit(const rainbow::EdgeColoredGraph& g, const rainbow::AuditReport& rep,
                         rb_format format) {
  return format == RB_FORMAT_TABLE ? rainbow::audit_to_table(rep) : rainbow::audit_to_json(g, rep);
}

void fill_cert(const rainbow::CertResult& c, rb_cert* out) {
  out->delta = c.delta;
  out->a_cap = c.a_cap;
  out->holds = c.holds;
  out->tail_ok = c.tail_ok;
  out->printed_matches_rederived = c.printed_matches_rederived;
  out->worst_r = c.worst_r;
  out->worst_s = c.worst_s;
  out->worst_a = c.worst_a;
  out->worst_t_num = c.worst_t.num;
  out->worst_t_den = c.worst_t.den;
  out->worst_n_num = c.worst_n.num;
  out->worst_n_den = c.worst_n.den;
  out->bound_num = c.bound.num;
  out->bound_den = c.bound.den;
  out->margin_num = c.margin.num;
  out->margin_den = c.margin.den;
  out->tuples = c.tuples;
}

}  // namespace

extern "C" {

const char* rb_last_error(void) { return last_error.c_str(); }

const char* rb_status_name(rb_status status) {
  if (status == RB_OK) return "ok";
  if (status == RB_ERR_INTERNAL) return "internal";
  if (status >= RB_ERR_INVALID_ARGUMENT && status <= RB_ERR_INVALID_LATIN_SQUARE) {
    return rainbow::error_code_name(static_cast<ErrorCode>(status));
  }
  return "unknown";
}

void rb_string_free(char* s) { std::free(s); }

rb_status rb_graph_parse(const char* text, rb_graph** out) {
  return guard([&] {
    require(text && out, "null argument");
    *out = new rb_graph{rainbow::parse_graph(text)};
  });
}

rb_status rb_graph_load(const char* path, rb_graph** out) {
  return guard([&] {
    require(path && out, "null argument");
    *out = new rb_graph{rainbow::load_graph(path)};
  });
}

rb_status rb_graph_build(uint32_t n, const uint32_t* triples, size_t m, rb_graph** out) {
  return guard([&] {
    require(out && (m == 0 || triples), "null argument");
    std::vector<rainbow::EdgeSpec> specs(m);
    for (size_t i = 0; i < m; ++i) {
      specs[i] = {triples[3 * i], triples[3 * i + 1], triples[3 * i + 2]};
    }
    *out = new rb_graph{rainbow::build_graph(n, specs)};
  });
}

void rb_graph_free(rb_graph* g) { delete g; }

uint32_t rb_graph_order(const rb_graph* g) { return g ? g->g.order() : 0; }

size_t rb_graph_edge_count(const rb_graph* g) { return g ? g->g.edge_count() : 0; }

rb_status rb_graph_edge(const rb_graph* g, uint32_t e, uint32_t* u, uint32_t* v,
                        uint32_t* colour) {
  return guard([&] {
    require(g != nullptr, "null graph");
    if (e >= g->g.edge_count()) {
      throw rainbow::Error(ErrorCode::kUnknownEdge, "edge id " + std::to_string(e) + " unknown");
    }
    const auto& edge = g->g.edge(e);
    if (u) *u = edge.u;
    if (v) *v = edge.v;
    if (colour) *colour = edge.colour;
  });
}

uint32_t rb_graph_min_degree(const rb_graph* g) { return g ? rainbow::min_degree(g->g) : 0; }

uint32_t rb_graph_max_degree(const rb_graph* g) { return g ? rainbow::max_degree(g->g) : 0; }

uint32_t rb_graph_palette_size(const rb_graph* g) { return g ? g->g.palette_size() : 0; }

uint32_t rb_graph_largest_class(const rb_graph* g) {
  return g ? rainbow::color_profile(g->g).a : 0;
}

rb_status rb_graph_to_text(const rb_graph* g, char** out) {
  return guard([&] {
    require(g && out, "null argument");
    *out = dup_string(rainbow::graph_to_text(g->g));
  });
}

rb_status rb_graph_to_json(const rb_graph* g, char** out) {
  return guard([&] {
    require(g && out, "null argument");
    *out = dup_string(rainbow::graph_to_json(g->g));
  });
}

rb_status rb_is_rainbow_matching(const rb_graph* g, const uint32_t* edges, size_t k, int* out) {
  return guard([&] {
    require(g && out && (k == 0 || edges), "null argument");
    std::vector<rainbow::EdgeId> ids(edges, edges + k);
    *out = rainbow::is_rainbow_matching(g->g, ids) ? 1 : 0;
  });
}

uint64_t rb_bound_n(uint64_t delta) { return rainbow::bound_n(delta); }

uint64_t rb_diemunsch_bound(uint64_t delta) { return rainbow::diemunsch_bound(delta); }

rb_status rb_solve_max(const rb_graph* g, uint64_t node_budget, rb_solution** out) {
  return guard([&] {
    require(g && out, "null argument");
    auto s = std::make_unique<rb_solution>();
    s->result = rainbow::max_rainbow_matching(g->g, {node_budget});
    *out = s.release();
  });
}

rb_status rb_solve_at_least(const rb_graph* g, size_t k, uint64_t node_budget,
                            rb_solution** out) {
  return guard([&] {
    require(g && out, "null argument");
    std::uint64_t nodes = 0;
    auto found = rainbow::rainbow_matching_at_least(g->g, k, {node_budget}, &nodes);
    auto s = std::make_unique<rb_solution>();
    s->found = found.has_value();
    if (found) {
      s->result.best = *found;
      s->result.size = found->size();
    }
    s->result.nodes_explored = nodes;
    *out = s.release();
  });
}

rb_status rb_max_matching(const rb_graph* g, rb_solution** out) {
  return guard([&] {
    require(g && out, "null argument");
    auto s = std::make_unique<rb_solution>();
    s->result.best = rainbow::max_matching(g->g);
    s->result.size = s->result.best.size();
    s->result.optimal = true;
    *out = s.release();
  });
}

rb_status rb_engine_run(const rb_graph* g, size_t target, size_t depth, rb_solution** out) {
  return guard([&] {
    require(g && out, "null argument");
    auto s = std::make_unique<rb_solution>();
    s->engine = true;
    s->result = rainbow::run_engine(g->g, target, depth, engine_options(depth));
    s->found = s->result.size >= target;
    *out = s.release();
  });
}

void rb_solution_free(rb_solution* s) { delete s; }

size_t rb_solution_size(const rb_solution* s) { return s ? s->result.size : 0; }

const uint32_t* rb_solution_edges(const rb_solution* s, size_t* count) {
  if (!s) {
    if (count) *count = 0;
    return nullptr;
  }
  if (count) *count = s->result.best.edges.size();
  return s->result.best.edges.data();
}

int rb_solution_found(const rb_solution* s) { return s && s->found ? 1 : 0; }

int rb_solution_optimal(const rb_solution* s) { return s && s->result.optimal ? 1 : 0; }

int rb_solution_budget_hit(const rb_solution* s) { return s && s->result.budget_hit ? 1 : 0; }

uint64_t rb_solution_nodes(const rb_solution* s) { return s ? s->result.nodes_explored : 0; }

size_t rb_solution_trace_length(const rb_solution* s) { return s ? s->result.trace.size() : 0; }

rb_status rb_solution_trace_json(const rb_graph* g, const rb_solution* s, char** out) {
  return guard([&] {
    require(g && s && out, "null argument");
    *out = dup_string(rainbow::trace_to_json_lines(g->g, s->result.trace));
  });
}

rb_status rb_solution_replays(const rb_solution* s, int* out) {
  return guard([&] {
    require(s && out, "null argument");
    require(s->engine, "only engine solutions carry a replayable trace");
    *out = rainbow::replay_trace(s->result) == s->result.best ? 1 : 0;
  });
}

rb_status rb_count_rainbow_perfect_matchings(const rb_graph* g, uint64_t node_budget,
                                             uint64_t* out) {
  return guard([&] {
    require(g && out, "null argument");
    *out = rainbow::count_rainbow_perfect_matchings(g->g, node_budget);
  });
}

rb_status rb_audit_stuck(const rb_graph* g, size_t target, size_t engine_depth,
                         rb_format format, char** out, rb_audit_summary* summary) {
  return guard([&] {
    require(g && out, "null argument");
    const auto audit = rainbow::audit_stuck(g->g, target, engine_depth);
    *out = dup_string(render_audit(g->g, audit.report, format));
    summarise(audit.report, summary);
  });
}

rb_status rb_audit_state(const rb_graph* g, const uint32_t* m, size_t m_len, const uint32_t* m0,
                         size_t m0_len, rb_format format, char** out,
                         rb_audit_summary* summary) {
  return guard([&] {
    require(g && out, "null argument");
    const rainbow::Matching matching = to_matching(g->g, m, m_len);
    const rainbow::Matching mono = m0_len == 0 ? rainbow::pick_m0(g->g, matching)
                                               : to_matching(g->g, m0, m0_len);
    const auto report = rainbow::audit_state(g->g, matching, mono);
    *out = dup_string(render_audit(g->g, report, format));
    summarise(report, summary);
  });
}

rb_status rb_certify(uint32_t delta, uint32_t a_cap, rb_cert* out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    fill_cert(rainbow::certify_counting_bound(delta, a_cap), out);
  });
}

rb_status rb_certify_range(uint32_t lo, uint32_t hi, unsigned threads, rb_cert* out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    const auto results = rainbow::certify_range(lo, hi, threads);
    for (size_t i = 0; i < results.size(); ++i) fill_cert(results[i], &out[i]);
  });
}

rb_status rb_latin_parse(const char* text, rb_latin** out) {
  return guard([&] {
    require(text && out, "null argument");
    *out = new rb_latin{rainbow::parse_latin_text(text)};
  });
}

rb_status rb_latin_load(const char* path, rb_latin** out) {
  return guard([&] {
    require(path && out, "null argument");
    *out = new rb_latin{rainbow::load_latin(path)};
  });
}

rb_status rb_latin_cyclic(uint32_t n, rb_latin** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    *out = new rb_latin{rainbow::cyclic_square(n)};
  });
}

rb_status rb_latin_random(uint32_t n, uint64_t seed, rb_latin** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    *out = new rb_latin{rainbow::random_latin(n, seed)};
  });
}

rb_status rb_latin_from_graph(const rb_graph* g, rb_latin** out) {
  return guard([&] {
    require(g && out, "null argument");
    *out = new rb_latin{rainbow::graph_to_latin(g->g)};
  });
}

rb_status rb_latin_to_graph(const rb_latin* sq, rb_graph** out) {
  return guard([&] {
    require(sq && out, "null argument");
    *out = new rb_graph{rainbow::latin_to_graph(sq->sq)};
  });
}

void rb_latin_free(rb_latin* sq) { delete sq; }

uint32_t rb_latin_order(const rb_latin* sq) { return sq ? sq->sq.order() : 0; }

uint32_t rb_latin_at(const rb_latin* sq, uint32_t row, uint32_t col) {
  if (!sq || row >= sq->sq.order() || col >= sq->sq.order()) return 0;
  return sq->sq.at(row, col);
}

rb_status rb_latin_to_text(const rb_latin* sq, char** out) {
  return guard([&] {
    require(sq && out, "null argument");
    *out = dup_string(rainbow::latin_to_text(sq->sq));
  });
}

rb_status rb_latin_count_transversals(const rb_latin* sq, uint64_t* out) {
  return guard([&] {
    require(sq && out, "null argument");
    *out = rainbow::count_transversals(sq->sq);
  });
}

uint64_t rb_derive_seed(uint64_t master, uint64_t a, uint64_t b, uint64_t c) {
  return rainbow::derive_seed(master, a, b, c);
}

rb_status rb_gen_min_degree(uint32_t n, uint32_t delta, uint64_t seed, double p,
                            uint64_t colour_seed, rb_graph** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
    const auto base = rainbow::random_graph_min_degree(n, delta, seed, p);
    *out = new rb_graph{rainbow::greedy_proper_coloring(base, colour_seed)};
  });
}

rb_status rb_gen_one_factorization(uint32_t k, rb_graph** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    *out = new rb_graph{rainbow::one_factorization(k)};
  });
}

rb_status rb_gen_sparse(uint32_t n, uint32_t m, uint32_t palette, uint64_t seed,
                        rb_graph** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    *out = new rb_graph{rainbow::random_sparse_colored(n, m, palette, seed)};
  });
}

void rb_verify_config_init(rb_verify_config* cfg) {
  if (!cfg) return;
  const rainbow::CampaignConfig d;
  *cfg = rb_verify_config{};
  cfg->delta_min = d.delta_min;
  cfg->delta_max = d.delta_max;
  cfg->n_rule = RB_N_BOUND;
  cfg->samples = d.samples;
  cfg->recolourings = d.recolourings;
  cfg->seed = d.seed;
  cfg->edge_probability = d.edge_probability;
  cfg->engine_depth = d.engine_depth;
  cfg->node_budget = d.node_budget;
}

rb_status rb_verify(const rb_verify_config* cfg, rb_format format, char** rows, char** cells,
                    rb_verify_summary* summary) {
  return guard([&] {
    require(cfg && rows, "null argument");
    require(cfg->edge_probability >= 0.0 && cfg->edge_probability <= 1.0,
            "edge probability must lie in [0, 1]");
    rainbow::CampaignConfig c;
    c.delta_min = cfg->delta_min;
    c.delta_max = cfg->delta_max;
    c.n_rule = static_cast<rainbow::NRule>(cfg->n_rule);
    c.n_fixed = cfg->n_fixed;
    c.n_offset = cfg->n_offset;
    c.samples = cfg->samples;
    c.recolourings = cfg->recolourings;
    c.seed = cfg->seed;
    c.edge_probability = cfg->edge_probability;
    c.engine_depth = cfg->engine_depth;
    c.node_budget = cfg->node_budget;
    c.inject_k4 = cfg->inject_k4 != 0;
    c.threads = cfg->threads;
    if (cfg->dump_dir) c.dump_dir = cfg->dump_dir;
    const auto result = rainbow::run_verify(c);
    std::string main = format == RB_FORMAT_JSON ? rainbow::campaign_to_json(c, result)
                                                : rainbow::rows_to_csv(result);
    *rows = dup_string(main);
    if (cells) {
      *cells = format == RB_FORMAT_JSON ? nullptr : dup_string(rainbow::cells_to_csv(result));
    }
    if (summary) {
      summary->config_hash = result.config_hash;
      summary->instances = result.rows.size();
      summary->violations = result.violations;
      summary->inconclusive = result.inconclusive;
    }
  });
}

void rb_scan_config_init(rb_scan_config* cfg) {
  if (!cfg) return;
  const rainbow::ScanConfig d;
  *cfg = rb_scan_config{};
  cfg->delta = d.delta;
  cfg->n_min = d.n_min;
  cfg->n_max = d.n_max;
  cfg->samples = d.samples;
  cfg->seed = d.seed;
  cfg->edge_probability = d.edge_probability;
  cfg->engine_depth = d.engine_depth;
  cfg->node_budget = d.node_budget;
}

rb_status rb_scan(const rb_scan_config* cfg, rb_format format, char** out) {
  return guard([&] {
    require(cfg && out, "null argument");
    rainbow::ScanConfig c;
    c.delta = cfg->delta;
    c.n_min = cfg->n_min;
    c.n_max = cfg->n_max;
    c.samples = cfg->samples;
    c.seed = cfg->seed;
    c.edge_probability = cfg->edge_probability;
    c.engine_depth = cfg->engine_depth;
    c.node_budget = cfg->node_budget;
    c.threads = cfg->threads;
    const auto rows = rainbow::run_scan(c);
    *out = dup_string(format == RB_FORMAT_JSON ? rainbow::scan_to_json(rows)
                                               : rainbow::scan_to_csv(rows));
  });
}

}  // extern "C"
