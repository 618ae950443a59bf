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

// rainbow-cli: experiment driver over the C API.
//
// Exit codes: 0 ok, 1 usage, 2 parse or validation failure, 3 property
// violation found.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rainbow/rainbow.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitViolation = 3;

// Thrown from command bodies once a failing status has been reported.
struct Exit {
  int code;
};

struct GraphDeleter {
  void operator()(rb_graph* g) const { rb_graph_free(g); }
};
struct LatinDeleter {
  void operator()(rb_latin* s) const { rb_latin_free(s); }
};
struct SolutionDeleter {
  void operator()(rb_solution* s) const { rb_solution_free(s); }
};
struct StringDeleter {
  void operator()(char* s) const { rb_string_free(s); }
};
using Graph = std::unique_ptr<rb_graph, GraphDeleter>;
using Latin = std::unique_ptr<rb_latin, LatinDeleter>;
using Solution = std::unique_ptr<rb_solution, SolutionDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

void check(rb_status st, const std::string& context) {
  if (st == RB_OK) return;
  std::cerr << "error: " << context << ": " << rb_status_name(st) << ": " << rb_last_error()
            << "\n";
  throw Exit{st == RB_ERR_CAP_UNSAFE ? kExitViolation : kExitInvalid};
}

std::string take(char* s) {
  OwnedString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

Graph load_graph(const std::string& path) {
  rb_graph* g = nullptr;
  check(rb_graph_load(path.c_str(), &g), path);
  return Graph(g);
}

Latin load_latin(const std::string& path) {
  rb_latin* s = nullptr;
  check(rb_latin_load(path.c_str(), &s), path);
  return Latin(s);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    throw Exit{kExitInvalid};
  }
  out << text;
}

rb_format parse_format(const std::string& f) {
  if (f == "json") return RB_FORMAT_JSON;
  if (f == "table") return RB_FORMAT_TABLE;
  return RB_FORMAT_CSV;
}

std::string edge_label(const rb_graph* g, std::uint32_t e) {
  std::uint32_t u = 0, v = 0, c = 0;
  check(rb_graph_edge(g, e, &u, &v, &c), "edge lookup");
  return std::to_string(u) + "-" + std::to_string(v) + ":" + std::to_string(c);
}

std::vector<std::uint32_t> edges_of(const rb_solution* s) {
  std::size_t count = 0;
  const std::uint32_t* e = rb_solution_edges(s, &count);
  return std::vector<std::uint32_t>(e, e + count);
}

nlohmann::json witness_json(const rb_graph* g, const std::vector<std::uint32_t>& edges) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::uint32_t e : edges) {
    std::uint32_t u = 0, v = 0, c = 0;
    check(rb_graph_edge(g, e, &u, &v, &c), "edge lookup");
    arr.push_back({u, v, c});
  }
  return arr;
}

std::vector<std::uint32_t> parse_id_list(const std::string& text) {
  std::vector<std::uint32_t> ids;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t pos = 0;
      const unsigned long v = std::stoul(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      ids.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      std::cerr << "error: bad edge id '" << tok << "'\n";
      throw Exit{kExitInvalid};
    }
  }
  return ids;
}

std::string rational(std::int64_t num, std::int64_t den) {
  char buf[96];
  if (den == 1) {
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(num));
  } else {
    std::snprintf(buf, sizeof buf, "%lld/%lld", static_cast<long long>(num),
                  static_cast<long long>(den));
  }
  return buf;
}

std::string decimal(std::int64_t num, std::int64_t den) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(num) / static_cast<double>(den));
  return buf;
}

// ---- solve ----

struct SolveArgs {
  std::string file;
  std::uint64_t budget = RB_UNLIMITED_NODES;
  bool engine = false;
  bool trace = false;
  std::size_t depth = 3;
  std::int64_t target = -1;
  std::string format = "text";
};

int cmd_solve(const SolveArgs& a) {
  Graph g = load_graph(a.file);
  rb_solution* raw = nullptr;
  check(rb_solve_max(g.get(), a.budget, &raw), "solve");
  Solution best(raw);
  const std::size_t size = rb_solution_size(best.get());
  const bool optimal = rb_solution_optimal(best.get());
  const std::vector<std::uint32_t> witness = edges_of(best.get());

  Solution engine;
  std::string trace;
  const bool run_engine = a.engine || a.trace;
  if (run_engine) {
    const std::size_t target = a.target >= 0 ? static_cast<std::size_t>(a.target)
                                             : std::size_t{rb_graph_min_degree(g.get())};
    check(rb_engine_run(g.get(), target, a.depth, &raw), "engine");
    engine.reset(raw);
    if (a.trace) {
      char* s = nullptr;
      check(rb_solution_trace_json(g.get(), engine.get(), &s), "trace");
      trace = take(s);
    }
  }

  if (a.format == "json") {
    nlohmann::json j{{"n", rb_graph_order(g.get())},
                     {"edges", rb_graph_edge_count(g.get())},
                     {"min_degree", rb_graph_min_degree(g.get())},
                     {"size", size},
                     {"optimal", optimal},
                     {"nodes", rb_solution_nodes(best.get())},
                     {"witness", witness_json(g.get(), witness)}};
    if (engine) {
      j["engine"] = {{"size", rb_solution_size(engine.get())},
                     {"trace_length", rb_solution_trace_length(engine.get())},
                     {"budget_hit", rb_solution_budget_hit(engine.get()) != 0},
                     {"witness", witness_json(g.get(), edges_of(engine.get()))}};
      if (optimal) j["engine"]["gap"] = size - rb_solution_size(engine.get());
    }
    std::cout << j.dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << "n,edges,min_degree,size,optimal,nodes,engine_size,engine_trace_length\n"
              << rb_graph_order(g.get()) << "," << rb_graph_edge_count(g.get()) << ","
              << rb_graph_min_degree(g.get()) << "," << size << "," << (optimal ? 1 : 0) << ","
              << rb_solution_nodes(best.get()) << ","
              << (engine ? std::to_string(rb_solution_size(engine.get())) : "") << ","
              << (engine ? std::to_string(rb_solution_trace_length(engine.get())) : "") << "\n";
  } else {
    std::cout << (optimal ? "optimum " : "best ") << size
              << (optimal ? "" : " (node budget exhausted)") << "\n";
    std::cout << "witness";
    for (std::uint32_t e : witness) std::cout << " " << edge_label(g.get(), e);
    std::cout << "\nnodes " << rb_solution_nodes(best.get()) << "\n";
    if (engine) {
      const std::size_t es = rb_solution_size(engine.get());
      std::cout << "engine " << es << " after " << rb_solution_trace_length(engine.get())
                << " rule applications";
      if (optimal) std::cout << ", gap " << size - es;
      if (rb_solution_budget_hit(engine.get())) std::cout << ", budget hit";
      std::cout << "\n";
    }
  }
  if (a.trace) std::cerr << trace;
  return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
  std::uint32_t delta_min = 2;
  std::uint32_t delta_max = 3;
  std::string n_rule = "bound";
  std::uint32_t n_fixed = 0;
  std::int64_t n_offset = 0;
  std::uint32_t samples = 100;
  std::uint32_t recolourings = 3;
  std::uint64_t seed = 1;
  double p = 0.0;
  std::size_t depth = 3;
  std::uint64_t budget = RB_DEFAULT_CAMPAIGN_BUDGET;
  bool k4 = false;
  unsigned threads = 0;
  std::string dump_dir = "violations";
  std::string out;
  std::string cells_out;
  std::string format = "csv";
};

int cmd_verify(const VerifyArgs& a) {
  rb_verify_config cfg;
  rb_verify_config_init(&cfg);
  cfg.delta_min = a.delta_min;
  cfg.delta_max = a.delta_max;
  cfg.n_rule = a.n_rule == "fixed" ? RB_N_FIXED : a.n_rule == "offset" ? RB_N_OFFSET : RB_N_BOUND;
  cfg.n_fixed = a.n_fixed;
  cfg.n_offset = a.n_offset;
  cfg.samples = a.samples;
  cfg.recolourings = a.recolourings;
  cfg.seed = a.seed;
  cfg.edge_probability = a.p;
  cfg.engine_depth = a.depth;
  cfg.node_budget = a.budget;
  cfg.inject_k4 = a.k4;
  cfg.threads = a.threads;
  cfg.dump_dir = a.dump_dir.c_str();
  char* rows = nullptr;
  char* cells = nullptr;
  rb_verify_summary summary{};
  check(rb_verify(&cfg, parse_format(a.format), &rows, &cells, &summary), "verify");
  const std::string rows_text = take(rows);
  const std::string cells_text = take(cells);
  write_output(a.out, rows_text);
  if (!a.cells_out.empty()) write_output(a.cells_out, cells_text);
  std::cerr << "instances " << summary.instances << ", violations " << summary.violations
            << ", inconclusive " << summary.inconclusive << "\n";
  return summary.violations > 0 ? kExitViolation : kExitOk;
}

// ---- scan ----

struct ScanArgs {
  std::uint32_t delta = 2;
  std::uint32_t n_min = 3;
  std::uint32_t n_max = 7;
  std::uint32_t samples = 100;
  std::uint64_t seed = 1;
  double p = 0.0;
  std::size_t depth = 3;
  std::uint64_t budget = RB_DEFAULT_CAMPAIGN_BUDGET;
  unsigned threads = 0;
  std::string out;
  std::string format = "csv";
};

int cmd_scan(const ScanArgs& a) {
  rb_scan_config cfg;
  rb_scan_config_init(&cfg);
  cfg.delta = a.delta;
  cfg.n_min = a.n_min;
  cfg.n_max = a.n_max;
  cfg.samples = a.samples;
  cfg.seed = a.seed;
  cfg.edge_probability = a.p;
  cfg.engine_depth = a.depth;
  cfg.node_budget = a.budget;
  cfg.threads = a.threads;
  char* out = nullptr;
  check(rb_scan(&cfg, parse_format(a.format), &out), "scan");
  write_output(a.out, take(out));
  return kExitOk;
}

// ---- certify ----

struct CertifyArgs {
  std::uint32_t delta_min = 2;
  std::uint32_t delta_max = 2;
  std::uint32_t a_cap = 0;
  unsigned threads = 0;
  std::string format = "csv";
};

int cmd_certify(const CertifyArgs& a) {
  if (a.delta_min < 2 || a.delta_max < a.delta_min) {
    std::cerr << "error: certify needs 2 <= delta-min <= delta-max\n";
    return kExitInvalid;
  }
  std::vector<rb_cert> certs(a.delta_max - a.delta_min + 1);
  if (a.a_cap == 0) {
    check(rb_certify_range(a.delta_min, a.delta_max, a.threads, certs.data()), "certify");
  } else {
    for (std::uint32_t d = a.delta_min; d <= a.delta_max; ++d) {
      check(rb_certify(d, a.a_cap, &certs[d - a.delta_min]), "certify");
    }
  }
  bool all = true;
  if (a.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const rb_cert& c : certs) {
      arr.push_back({{"delta", c.delta},
                     {"a_cap", c.a_cap},
                     {"holds", c.holds != 0},
                     {"tail_ok", c.tail_ok != 0},
                     {"printed_matches_rederived", c.printed_matches_rederived != 0},
                     {"worst_r", c.worst_r},
                     {"worst_s", c.worst_s},
                     {"worst_a", c.worst_a},
                     {"worst_t", rational(c.worst_t_num, c.worst_t_den)},
                     {"worst_n", rational(c.worst_n_num, c.worst_n_den)},
                     {"worst_n_decimal", decimal(c.worst_n_num, c.worst_n_den)},
                     {"bound", rational(c.bound_num, c.bound_den)},
                     {"margin", rational(c.margin_num, c.margin_den)},
                     {"tuples", c.tuples}});
      all = all && c.holds && c.tail_ok;
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << "delta,a_cap,holds,tail_ok,worst_r,worst_s,worst_a,worst_t,worst_n,bound,margin,"
                 "worst_n_decimal,tuples\n";
    for (const rb_cert& c : certs) {
      std::cout << c.delta << "," << c.a_cap << "," << c.holds << "," << c.tail_ok << ","
                << c.worst_r << "," << c.worst_s << "," << c.worst_a << ","
                << rational(c.worst_t_num, c.worst_t_den) << ","
                << rational(c.worst_n_num, c.worst_n_den) << ","
                << rational(c.bound_num, c.bound_den) << ","
                << rational(c.margin_num, c.margin_den) << ","
                << decimal(c.worst_n_num, c.worst_n_den) << "," << c.tuples << "\n";
      all = all && c.holds && c.tail_ok;
    }
  }
  return all ? kExitOk : kExitViolation;
}

// ---- latin ----

struct LatinArgs {
  std::string action = "count";
  std::string file;
  std::uint32_t cyclic = 0;
  std::uint32_t random = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = RB_DEFAULT_CAMPAIGN_BUDGET;
  bool cross_check = false;
  std::string format = "csv";
};

Latin latin_source(const LatinArgs& a) {
  rb_latin* s = nullptr;
  if (a.cyclic > 0) {
    check(rb_latin_cyclic(a.cyclic, &s), "cyclic square");
  } else if (a.random > 0) {
    check(rb_latin_random(a.random, a.seed, &s), "random square");
  } else if (!a.file.empty()) {
    return load_latin(a.file);
  } else {
    std::cerr << "error: give a square file, --cyclic or --random\n";
    throw Exit{kExitUsage};
  }
  return Latin(s);
}

int cmd_latin(const LatinArgs& a) {
  if (a.action == "from-graph") {
    if (a.file.empty()) {
      std::cerr << "error: from-graph needs a graph file\n";
      return kExitUsage;
    }
    Graph g = load_graph(a.file);
    rb_latin* s = nullptr;
    check(rb_latin_from_graph(g.get(), &s), "graph to square");
    Latin sq(s);
    char* text = nullptr;
    check(rb_latin_to_text(sq.get(), &text), "square text");
    std::cout << take(text);
    return kExitOk;
  }
  Latin sq = latin_source(a);
  rb_graph* raw = nullptr;
  check(rb_latin_to_graph(sq.get(), &raw), "square to graph");
  Graph g(raw);
  if (a.action == "graph") {
    char* text = nullptr;
    check(rb_graph_to_text(g.get(), &text), "graph text");
    std::cout << take(text);
    return kExitOk;
  }
  const std::uint32_t n = rb_latin_order(sq.get());
  std::uint64_t count = 0;
  std::string method = "enumeration";
  const rb_status st = rb_latin_count_transversals(sq.get(), &count);
  if (st == RB_ERR_ORDER_TOO_LARGE) {
    method = "matching-count";
    check(rb_count_rainbow_perfect_matchings(g.get(), a.budget, &count), "transversal count");
  } else {
    check(st, "transversal count");
  }
  std::string agrees;
  if (a.cross_check && method == "enumeration") {
    std::uint64_t other = 0;
    check(rb_count_rainbow_perfect_matchings(g.get(), a.budget, &other), "cross-check");
    agrees = other == count ? "1" : "0";
  }
  if (a.format == "json") {
    nlohmann::json j{{"order", n}, {"transversals", count}, {"method", method}};
    if (!agrees.empty()) j["cross_check_agrees"] = agrees == "1";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "order,transversals,method,cross_check_agrees\n"
              << n << "," << count << "," << method << "," << agrees << "\n";
  }
  if (agrees == "0") return kExitViolation;
  // Every odd-order square is expected to have a transversal.
  if (a.action == "check" && n % 2 == 1 && count == 0) return kExitViolation;
  return kExitOk;
}

// ---- audit ----

struct AuditArgs {
  std::string file;
  std::int64_t target = -1;
  std::size_t depth = 3;
  std::string matching;
  std::string m0;
  std::string format = "json";
};

int cmd_audit(const AuditArgs& a) {
  Graph g = load_graph(a.file);
  const rb_format fmt = a.format == "table" ? RB_FORMAT_TABLE : RB_FORMAT_JSON;
  char* out = nullptr;
  rb_audit_summary summary{};
  if (!a.matching.empty()) {
    const auto m = parse_id_list(a.matching);
    const auto m0 = parse_id_list(a.m0);
    check(rb_audit_state(g.get(), m.data(), m.size(), m0.data(), m0.size(), fmt, &out, &summary),
          "audit");
    std::cout << take(out);
    return kExitOk;
  }
  const std::size_t target = a.target >= 0 ? static_cast<std::size_t>(a.target)
                                           : std::size_t{rb_graph_min_degree(g.get())};
  const rb_status st = rb_audit_stuck(g.get(), target, a.depth, fmt, &out, &summary);
  if (st == RB_ERR_NOT_STUCK) {
    std::cout << "not stuck: " << rb_last_error() << "\n";
    return kExitOk;
  }
  check(st, "audit");
  std::cout << take(out);
  // A claim failing where no rule applies contradicts local maximality.
  if (summary.failed > 0 && summary.applicable_rules == 0) return kExitViolation;
  return kExitOk;
}

// ---- gen ----

struct GenArgs {
  std::string kind = "mindeg";
  std::uint32_t n = 7;
  std::uint32_t delta = 2;
  std::uint32_t m = 10;
  std::uint32_t palette = 4;
  std::uint32_t k = 2;
  std::uint64_t seed = 1;
  std::uint64_t colour_seed = 0;
  bool colour_seed_set = false;
  double p = 0.0;
  std::string format = "text";
};

int cmd_gen(const GenArgs& a) {
  rb_graph* raw = nullptr;
  if (a.kind == "mindeg") {
    // Same derivation as recolouring 0 of a campaign instance.
    const std::uint64_t cs =
        a.colour_seed_set ? a.colour_seed : rb_derive_seed(a.seed, 0, 0xC0105, 0);
    check(rb_gen_min_degree(a.n, a.delta, a.seed, a.p, cs, &raw), "generate");
  } else if (a.kind == "factorization") {
    check(rb_gen_one_factorization(a.k, &raw), "generate");
  } else if (a.kind == "sparse") {
    check(rb_gen_sparse(a.n, a.m, a.palette, a.seed, &raw), "generate");
  } else {
    rb_latin* s = nullptr;
    if (a.kind == "cyclic-latin") {
      check(rb_latin_cyclic(a.n, &s), "generate");
    } else {
      check(rb_latin_random(a.n, a.seed, &s), "generate");
    }
    Latin sq(s);
    if (a.format == "square") {
      char* text = nullptr;
      check(rb_latin_to_text(sq.get(), &text), "square text");
      std::cout << take(text);
      return kExitOk;
    }
    check(rb_latin_to_graph(sq.get(), &raw), "square to graph");
  }
  Graph g(raw);
  char* text = nullptr;
  if (a.format == "json") {
    check(rb_graph_to_json(g.get(), &text), "graph json");
  } else {
    check(rb_graph_to_text(g.get(), &text), "graph text");
  }
  std::cout << take(text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow matching experiments"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  const std::vector<std::string> tabular{"csv", "json"};

  SolveArgs solve;
  auto* sc = app.add_subcommand("solve", "Maximum rainbow matching of one graph");
  sc->add_option("file", solve.file, "Graph file (text or JSON)")->required();
  sc->add_option("--budget", solve.budget, "Branch node budget");
  sc->add_flag("--engine", solve.engine, "Also run the augmentation engine and report its gap");
  sc->add_flag("--trace", solve.trace, "Print the engine trace as JSON lines on stderr");
  sc->add_option("--depth", solve.depth, "Engine exchange depth")->check(CLI::Range(1, 5));
  sc->add_option("--target", solve.target, "Engine target (default: min degree)");
  sc->add_option("--format", solve.format)->check(CLI::IsMember({"text", "csv", "json"}));

  VerifyArgs verify;
  auto* vc = app.add_subcommand("verify", "Seeded campaign against the min-degree bound");
  vc->add_option("--delta-min", verify.delta_min);
  vc->add_option("--delta-max", verify.delta_max);
  vc->add_option("--n-rule", verify.n_rule)->check(CLI::IsMember({"bound", "fixed", "offset"}));
  vc->add_option("--n", verify.n_fixed, "Order for --n-rule fixed");
  vc->add_option("--n-offset", verify.n_offset, "Offset for --n-rule offset");
  vc->add_option("--samples", verify.samples);
  vc->add_option("--recolourings", verify.recolourings);
  vc->add_option("--seed", verify.seed);
  vc->add_option("--p", verify.p, "Extra edge probability")->check(CLI::Range(0.0, 1.0));
  vc->add_option("--depth", verify.depth)->check(CLI::Range(1, 5));
  vc->add_option("--budget", verify.budget);
  vc->add_flag("--k4", verify.k4, "Add the K4 exception instance");
  vc->add_option("--threads", verify.threads);
  vc->add_option("--dump-dir", verify.dump_dir);
  vc->add_option("--out", verify.out, "Row output (default stdout)");
  vc->add_option("--cells", verify.cells_out, "Per-cell CSV output");
  vc->add_option("--format", verify.format)->check(CLI::IsMember(tabular));

  ScanArgs scan;
  auto* nc = app.add_subcommand("scan", "Failure rate of the min-degree bound across n");
  nc->add_option("--delta", scan.delta);
  nc->add_option("--n-min", scan.n_min);
  nc->add_option("--n-max", scan.n_max);
  nc->add_option("--samples", scan.samples);
  nc->add_option("--seed", scan.seed);
  nc->add_option("--p", scan.p)->check(CLI::Range(0.0, 1.0));
  nc->add_option("--depth", scan.depth)->check(CLI::Range(1, 5));
  nc->add_option("--budget", scan.budget);
  nc->add_option("--threads", scan.threads);
  nc->add_option("--out", scan.out);
  nc->add_option("--format", scan.format)->check(CLI::IsMember(tabular));

  CertifyArgs certify;
  std::uint32_t single_delta = 0;
  auto* cc = app.add_subcommand("certify", "Certify the counting bound per delta");
  cc->add_option("--delta", single_delta, "Single delta");
  cc->add_option("--delta-min", certify.delta_min);
  cc->add_option("--delta-max", certify.delta_max);
  cc->add_option("--a-cap", certify.a_cap, "Largest class size enumerated (default 6 delta)");
  cc->add_option("--threads", certify.threads);
  cc->add_option("--format", certify.format)->check(CLI::IsMember(tabular));

  LatinArgs latin;
  auto* lc = app.add_subcommand("latin", "Latin square transversals");
  lc->add_option("action", latin.action, "count | check | graph | from-graph")
      ->check(CLI::IsMember({"count", "check", "graph", "from-graph"}));
  lc->add_option("file", latin.file, "Square file (graph file for from-graph)");
  lc->add_option("--cyclic", latin.cyclic, "Use the cyclic square of this order");
  lc->add_option("--random", latin.random, "Use a seeded random square of this order");
  lc->add_option("--seed", latin.seed);
  lc->add_option("--budget", latin.budget, "Node budget for the matching counter");
  lc->add_flag("--cross-check", latin.cross_check, "Recount with the matching counter");
  lc->add_option("--format", latin.format)->check(CLI::IsMember(tabular));

  AuditArgs audit;
  auto* ac = app.add_subcommand("audit", "Audit a stuck engine state");
  ac->add_option("file", audit.file)->required();
  ac->add_option("--target", audit.target, "Engine target (default: min degree)");
  ac->add_option("--depth", audit.depth)->check(CLI::Range(1, 5));
  ac->add_option("--matching", audit.matching, "Audit this matching instead (edge ids a,b,c)");
  ac->add_option("--m0", audit.m0, "Monochromatic matching for --matching (edge ids)");
  ac->add_option("--format", audit.format)->check(CLI::IsMember({"json", "table"}));

  GenArgs gen;
  auto* gc = app.add_subcommand("gen", "Generate an instance");
  gc->add_option("kind", gen.kind, "mindeg | factorization | sparse | cyclic-latin | random-latin")
      ->check(CLI::IsMember({"mindeg", "factorization", "sparse", "cyclic-latin", "random-latin"}));
  gc->add_option("--n", gen.n);
  gc->add_option("--delta", gen.delta);
  gc->add_option("--m", gen.m, "Edge count for sparse");
  gc->add_option("--palette", gen.palette);
  gc->add_option("--k", gen.k, "K_{2k} for factorization");
  gc->add_option("--seed", gen.seed);
  auto* cs = gc->add_option("--colour-seed", gen.colour_seed);
  gc->add_option("--p", gen.p)->check(CLI::Range(0.0, 1.0));
  gc->add_option("--format", gen.format)->check(CLI::IsMember({"text", "json", "square"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sc) return cmd_solve(solve);
    if (*vc) return cmd_verify(verify);
    if (*nc) return cmd_scan(scan);
    if (*cc) {
      if (single_delta != 0) certify.delta_min = certify.delta_max = single_delta;
      if (cc->count("--delta") && single_delta < 2) {
        std::cerr << "error: certify needs delta >= 2\n";
        return kExitInvalid;
      }
      return cmd_certify(certify);
    }
    if (*lc) return cmd_latin(latin);
    if (*ac) return cmd_audit(audit);
    if (*gc) {
      gen.colour_seed_set = cs->count() > 0;
      return cmd_gen(gen);
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitUsage;
}
