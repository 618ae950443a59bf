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

#include "rainbow/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "rainbow/exact_solver.hpp"
#include "rainbow/generators.hpp"

namespace rainbow {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kOk: return "ok";
    case Verdict::kException: return "exception";
    case Verdict::kViolation: return "violation";
    case Verdict::kNotApplicable: return "na";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "na";
}

namespace {

EngineOptions engine_options(std::size_t depth) {
  EngineOptions opts;
  opts.allow_deep_exchange = depth > kDefaultExchangeDepth;
  return opts;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Runs job(i) for i in [0, count) on a small pool; the first exception wins.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& job) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        job(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// Verdict for "some rainbow matching has size >= need".
Verdict weaker_bound(std::size_t need, const InstanceRow& row, bool exception) {
  if (row.best_size >= need) return Verdict::kOk;
  if (exception) return Verdict::kException;
  if (row.optimum || row.reached_delta.has_value()) return Verdict::kViolation;
  return Verdict::kInconclusive;
}

}  // namespace

std::string CampaignConfig::canonical() const {
  std::ostringstream os;
  char p[64];
  std::snprintf(p, sizeof p, "%.17g", edge_probability);
  os << "delta_min=" << delta_min << ";delta_max=" << delta_max << ";n_rule="
     << (n_rule == NRule::kBound ? "bound" : n_rule == NRule::kFixed ? "fixed" : "offset")
     << ";n_fixed=" << n_fixed << ";n_offset=" << n_offset << ";samples=" << samples
     << ";recolourings=" << recolourings << ";seed=" << seed << ";p=" << p
     << ";depth=" << engine_depth << ";budget=" << node_budget << ";k4=" << inject_k4;
  return os.str();
}

std::uint64_t CampaignConfig::hash() const { return fnv1a(canonical()); }

std::uint32_t CampaignConfig::n_for(std::uint32_t delta) const {
  switch (n_rule) {
    case NRule::kFixed: return n_fixed;
    case NRule::kBound: return static_cast<std::uint32_t>(bound_n(delta));
    case NRule::kOffset: {
      const std::int64_t n = static_cast<std::int64_t>(bound_n(delta)) + n_offset;
      if (n <= 0) throw Error(ErrorCode::kInvalidArgument, "n offset leaves no vertices");
      return static_cast<std::uint32_t>(n);
    }
  }
  return 0;
}

InstanceRow check_instance(const EdgeColoredGraph& g, const CampaignConfig& config) {
  InstanceRow row;
  row.n = g.order();
  row.edges = g.edge_count();
  row.min_degree = min_degree(g);
  row.max_degree = max_degree(g);
  row.palette = g.palette_size();
  row.a = color_profile(g).a;
  const std::uint32_t d = row.min_degree;
  row.theorem_applies = d >= 1 && row.n >= bound_n(d);

  const SolverOptions opts{config.node_budget};
  try {
    std::uint64_t nodes = 0;
    auto witness = rainbow_matching_at_least(g, d, opts, &nodes);
    row.solver_nodes = nodes;
    row.reached_delta = witness.has_value();
    if (witness) row.best_size = witness->size();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    row.solver_nodes = config.node_budget;
  }
  if (row.reached_delta != true) {
    SolveResult best = max_rainbow_matching(g, opts);
    row.solver_nodes += best.nodes_explored;
    row.best_size = std::max(row.best_size, best.size);
    if (best.optimal) row.optimum = best.size;
  }

  if (row.theorem_applies) {
    if (!row.reached_delta.has_value()) {
      row.theorem = Verdict::kInconclusive;
    } else {
      row.theorem = *row.reached_delta ? Verdict::kOk : Verdict::kViolation;
    }
  }
  const bool is_k4 = row.n == 4 && row.edges == 6;
  row.lesaulnier = weaker_bound((d + 1) / 2, row, is_k4 || row.n == d + 2);
  if (5ull * row.n >= 8ull * d) row.wang = weaker_bound(3 * d / 5, row, false);

  const SolveResult engine =
      run_engine(g, d, config.engine_depth, engine_options(config.engine_depth));
  row.engine_size = engine.size;
  row.engine_trace_len = engine.trace.size();

  const Verdict all[] = {row.theorem, row.lesaulnier, row.wang};
  row.status = "ok";
  for (Verdict v : all) {
    if (v == Verdict::kInconclusive) row.status = "inconclusive";
  }
  for (Verdict v : all) {
    if (v == Verdict::kViolation) row.status = "violation";
  }
  return row;
}

CampaignResult run_verify(const CampaignConfig& config) {
  struct Task {
    std::uint32_t delta, n, sample, recolour;
    bool k4;
  };
  std::vector<Task> tasks;
  for (std::uint32_t d = config.delta_min; d <= config.delta_max; ++d) {
    const std::uint32_t n = config.n_for(d);
    if (n <= d) {
      throw Error(ErrorCode::kInfeasibleDegree, "cell delta=" + std::to_string(d) +
                                                    " has n=" + std::to_string(n) + " <= delta");
    }
    for (std::uint32_t i = 0; i < config.samples; ++i) {
      for (std::uint32_t j = 0; j <= config.recolourings; ++j) tasks.push_back({d, n, i, j, false});
    }
    if (d == config.delta_max) break;  // guards overflow at UINT32_MAX
  }
  if (config.inject_k4) tasks.push_back({3, 4, 0, 0, true});

  CampaignResult result;
  result.config_hash = config.hash();
  result.rows.resize(tasks.size());
  parallel_for(tasks.size(), config.threads, [&](std::size_t idx) {
    const Task& task = tasks[idx];
    InstanceRow row;
    EdgeColoredGraph g;
    std::uint64_t instance_seed = 0, colour_seed = 0;
    if (task.k4) {
      g = one_factorization(2);
    } else {
      instance_seed = derive_seed(config.seed, task.delta, task.sample);
      colour_seed = derive_seed(instance_seed, task.recolour, 0xC0105);
      const SimpleGraph base =
          random_graph_min_degree(task.n, task.delta, instance_seed, config.edge_probability);
      g = greedy_proper_coloring(base, colour_seed);
    }
    row = check_instance(g, config);
    row.source = task.k4 ? "k4" : "random";
    row.delta_param = task.delta;
    row.sample = task.sample;
    row.recolour = task.recolour;
    row.instance_seed = instance_seed;
    row.colour_seed = colour_seed;
    if (row.status == "violation" && !config.dump_dir.empty()) {
      std::filesystem::create_directories(config.dump_dir);
      const std::string path = config.dump_dir + "/violation_" + row.source + "_d" +
                               std::to_string(task.delta) + "_n" + std::to_string(task.n) +
                               "_s" + std::to_string(task.sample) + "_r" +
                               std::to_string(task.recolour) + ".txt";
      std::ofstream out(path, std::ios::binary);
      out << "# config " << config.canonical() << "\n" << graph_to_text(g);
      row.dump_path = path;
    }
    result.rows[idx] = std::move(row);
  });

  for (const InstanceRow& row : result.rows) {
    if (row.status == "violation") ++result.violations;
    if (row.status == "inconclusive") ++result.inconclusive;
    if (row.source != "random") continue;
    if (result.cells.empty() || result.cells.back().delta != row.delta_param) {
      CellSummary cell;
      cell.delta = row.delta_param;
      cell.n = row.n;
      result.cells.push_back(cell);
    }
    CellSummary& cell = result.cells.back();
    ++cell.instances;
    if (row.reached_delta == true) ++cell.reached;
    if (!row.reached_delta.has_value()) ++cell.inconclusive;
    if (row.engine_size >= row.min_degree) ++cell.engine_reached;
    if (row.status == "violation") ++cell.violations;
    cell.theorem_regime = cell.n >= bound_n(cell.delta);
  }
  for (CellSummary& cell : result.cells) {
    const std::size_t decided = cell.instances - cell.inconclusive;
    if (decided > 0) cell.success_fraction = static_cast<double>(cell.reached) / decided;
  }
  return result;
}

std::string rows_to_csv(const CampaignResult& result) {
  std::ostringstream os;
  os << "config_hash,source,delta,n,sample,recolour,instance_seed,colour_seed,edges,"
        "min_degree,max_degree,palette,a,theorem_applies,reached_delta,best_size,optimum,"
        "solver_nodes,engine_size,engine_trace_len,theorem,lesaulnier,wang,status\n";
  const std::string hash = hex64(result.config_hash);
  for (const InstanceRow& r : result.rows) {
    os << hash << "," << r.source << "," << r.delta_param << "," << r.n << "," << r.sample << ","
       << r.recolour << "," << r.instance_seed << "," << r.colour_seed << "," << r.edges << ","
       << r.min_degree << "," << r.max_degree << "," << r.palette << "," << r.a << ","
       << (r.theorem_applies ? 1 : 0) << ","
       << (r.reached_delta.has_value() ? (*r.reached_delta ? "1" : "0") : "") << ","
       << r.best_size << "," << (r.optimum ? std::to_string(*r.optimum) : "") << ","
       << r.solver_nodes << "," << r.engine_size << "," << r.engine_trace_len << ","
       << verdict_name(r.theorem) << "," << verdict_name(r.lesaulnier) << ","
       << verdict_name(r.wang) << "," << r.status << "\n";
  }
  return os.str();
}

std::string cells_to_csv(const CampaignResult& result) {
  std::ostringstream os;
  os << "delta,n,instances,reached,success_fraction,engine_reached,engine_fraction,"
        "inconclusive,violations,theorem_regime\n";
  for (const CellSummary& c : result.cells) {
    os << c.delta << "," << c.n << "," << c.instances << "," << c.reached << ","
       << (c.success_fraction ? fmt_double(*c.success_fraction) : "") << ","
       << c.engine_reached << ","
       << (c.instances ? fmt_double(static_cast<double>(c.engine_reached) / c.instances) : "")
       << "," << c.inconclusive << "," << c.violations << "," << (c.theorem_regime ? 1 : 0)
       << "\n";
  }
  return os.str();
}

std::string campaign_to_json(const CampaignConfig& config, const CampaignResult& result) {
  using nlohmann::json;
  json j;
  j["config"] = config.canonical();
  j["config_hash"] = hex64(result.config_hash);
  json rows = json::array();
  for (const InstanceRow& r : result.rows) {
    json row{{"source", r.source},
             {"delta", r.delta_param},
             {"n", r.n},
             {"sample", r.sample},
             {"recolour", r.recolour},
             {"instance_seed", r.instance_seed},
             {"colour_seed", r.colour_seed},
             {"edges", r.edges},
             {"min_degree", r.min_degree},
             {"max_degree", r.max_degree},
             {"palette", r.palette},
             {"a", r.a},
             {"theorem_applies", r.theorem_applies},
             {"best_size", r.best_size},
             {"solver_nodes", r.solver_nodes},
             {"engine_size", r.engine_size},
             {"engine_trace_len", r.engine_trace_len},
             {"theorem", verdict_name(r.theorem)},
             {"lesaulnier", verdict_name(r.lesaulnier)},
             {"wang", verdict_name(r.wang)},
             {"status", r.status}};
    row["reached_delta"] = r.reached_delta.has_value() ? json(*r.reached_delta) : json(nullptr);
    row["optimum"] = r.optimum ? json(*r.optimum) : json(nullptr);
    if (!r.dump_path.empty()) row["dump"] = r.dump_path;
    rows.push_back(row);
  }
  j["rows"] = rows;
  json cells = json::array();
  for (const CellSummary& c : result.cells) {
    cells.push_back({{"delta", c.delta},
                     {"n", c.n},
                     {"instances", c.instances},
                     {"reached", c.reached},
                     {"success_fraction",
                      c.success_fraction ? json(fmt_double(*c.success_fraction)) : json(nullptr)},
                     {"engine_reached", c.engine_reached},
                     {"inconclusive", c.inconclusive},
                     {"violations", c.violations},
                     {"theorem_regime", c.theorem_regime}});
  }
  j["cells"] = cells;
  j["violations"] = result.violations;
  j["inconclusive"] = result.inconclusive;
  return j.dump(2) + "\n";
}

std::vector<ScanRow> run_scan(const ScanConfig& config) {
  if (config.n_min <= config.delta) {
    throw Error(ErrorCode::kInfeasibleDegree, "scan needs n > delta");
  }
  std::vector<ScanRow> rows;
  if (config.n_min > config.n_max) return rows;
  const std::size_t width = config.n_max - config.n_min + 1;
  struct Outcome {
    bool failed = false;
    bool engine_failed = false;
    bool inconclusive = false;
  };
  std::vector<Outcome> outcomes(width * config.samples);
  parallel_for(outcomes.size(), config.threads, [&](std::size_t idx) {
    const auto n = static_cast<std::uint32_t>(config.n_min + idx / config.samples);
    const auto sample = static_cast<std::uint32_t>(idx % config.samples);
    const std::uint64_t seed = derive_seed(config.seed, config.delta, n, sample);
    const SimpleGraph base =
        random_graph_min_degree(n, config.delta, seed, config.edge_probability);
    const EdgeColoredGraph g = greedy_proper_coloring(base, derive_seed(seed, 0, 0xC0105));
    const std::uint32_t d = min_degree(g);
    Outcome& out = outcomes[idx];
    try {
      out.failed = !rainbow_matching_at_least(g, d, {config.node_budget}).has_value();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExceeded) throw;
      out.inconclusive = true;
    }
    const EngineOptions opts = engine_options(config.engine_depth);
    out.engine_failed = run_engine(g, d, config.engine_depth, opts).size < d;
  });
  for (std::size_t k = 0; k < width; ++k) {
    ScanRow row;
    row.delta = config.delta;
    row.n = static_cast<std::uint32_t>(config.n_min + k);
    row.samples = config.samples;
    for (std::uint32_t s = 0; s < config.samples; ++s) {
      const Outcome& o = outcomes[k * config.samples + s];
      row.failures += o.failed;
      row.engine_failures += o.engine_failed;
      row.inconclusive += o.inconclusive;
    }
    const std::uint32_t decided = row.samples - row.inconclusive;
    if (decided > 0) row.failure_rate = static_cast<double>(row.failures) / decided;
    rows.push_back(row);
  }
  return rows;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "delta,n,samples,failures,engine_failures,inconclusive,failure_rate\n";
  for (const ScanRow& r : rows) {
    os << r.delta << "," << r.n << "," << r.samples << "," << r.failures << ","
       << r.engine_failures << "," << r.inconclusive << ","
       << (r.failure_rate ? fmt_double(*r.failure_rate) : "") << "\n";
  }
  return os.str();
}

std::string scan_to_json(const std::vector<ScanRow>& rows) {
  using nlohmann::json;
  json arr = json::array();
  for (const ScanRow& r : rows) {
    arr.push_back({{"delta", r.delta},
                   {"n", r.n},
                   {"samples", r.samples},
                   {"failures", r.failures},
                   {"engine_failures", r.engine_failures},
                   {"inconclusive", r.inconclusive},
                   {"failure_rate", r.failure_rate ? json(fmt_double(*r.failure_rate))
                                                   : json(nullptr)}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace rainbow
