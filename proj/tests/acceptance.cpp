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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/auditor.hpp"
#include "rainbow/campaign.hpp"
#include "rainbow/engine.hpp"
#include "rainbow/exact_solver.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/latin.hpp"
#include "support.hpp"

namespace {

using namespace rainbow;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Shared between the campaign criteria.
CampaignResult g_campaign;
bool g_campaign_ran = false;

std::vector<EdgeColoredGraph> small_graphs() {
  std::vector<EdgeColoredGraph> out;
  out.reserve(1000);
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const std::uint64_t seed = derive_seed(2026, i);
    Rng rng(seed);
    const auto n = static_cast<std::uint32_t>(2 + rng.below(8));
    const auto m = static_cast<std::uint32_t>(1 + rng.below(12));
    const auto palette = static_cast<std::uint32_t>(1 + rng.below(6));
    out.push_back(random_sparse_colored(n, m, palette, seed));
  }
  return out;
}

Outcome theorem_campaign() {
  CampaignConfig c;
  c.delta_min = 2;
  c.delta_max = 4;
  c.n_rule = NRule::kBound;
  c.samples = 500;
  c.recolourings = 3;
  c.seed = 1;
  c.inject_k4 = true;
  g_campaign = run_verify(c);
  g_campaign_ran = true;

  Outcome o;
  std::size_t random_rows = 0, reached = 0;
  for (const auto& row : g_campaign.rows) {
    if (row.source != "random") continue;
    ++random_rows;
    if (row.reached_delta == true) ++reached;
    if (row.n != bound_n(row.delta_param)) o.pass = false;
  }
  if (random_rows != 3 * 500 * 4 || reached != random_rows) o.pass = false;
  std::ostringstream os;
  os << reached << "/" << random_rows << " instances reach delta;";
  for (const auto& cell : g_campaign.cells) {
    os << " d=" << cell.delta << ",n=" << cell.n << ":" << cell.reached << "/" << cell.instances;
  }
  o.detail = os.str();
  return o;
}

Outcome oracle_equivalence(const std::vector<EdgeColoredGraph>& graphs) {
  Outcome o;
  std::size_t agree = 0;
  for (const auto& g : graphs) {
    const auto r = max_rainbow_matching(g);
    if (r.optimal && is_rainbow_matching(g, r.best) &&
        r.size == testing::brute_force_max(g)) {
      ++agree;
    }
  }
  o.pass = agree == graphs.size();
  o.detail = std::to_string(agree) + "/" + std::to_string(graphs.size()) +
             " agree with subset enumeration";
  return o;
}

Outcome engine_soundness(const std::vector<EdgeColoredGraph>& graphs) {
  Outcome o;
  std::size_t sound = 0, optimal = 0, rules = 0;
  for (const auto& g : graphs) {
    const std::size_t opt = max_rainbow_matching(g).size;
    // Aim past the optimum so every rule is tried until the engine stalls.
    const auto r = run_engine(g, opt + 1);
    bool ok = is_rainbow_matching(g, r.best) && r.size <= opt && r.size == r.best.size();
    std::size_t size = r.initial.size();
    for (const auto& ev : r.trace) {
      ok = ok && ev.size_after == size + 1 && ev.added.size() == ev.removed.size() + 1;
      size = ev.size_after;
    }
    ok = ok && size == r.size && replay_trace(r) == r.best;
    sound += ok;
    optimal += r.size == opt;
    rules += r.trace.size();
  }
  o.pass = sound == graphs.size();
  o.detail = std::to_string(sound) + "/" + std::to_string(graphs.size()) + " sound, " +
             std::to_string(rules) + " rule applications, engine optimal on " +
             std::to_string(optimal);
  return o;
}

Outcome known_values() {
  Outcome o;
  const auto k4 = max_rainbow_matching(one_factorization(2)).size;
  std::ostringstream os;
  os << "K4 optimum " << k4;
  o.pass = k4 == 1;
  const std::uint64_t expected[] = {3, 0, 15};
  for (std::uint32_t n = 3; n <= 5; ++n) {
    const auto sq = cyclic_square(n);
    const auto t = count_transversals(sq);
    const auto pm = count_rainbow_perfect_matchings(latin_to_graph(sq));
    os << "; Z" << n << " " << t << " (matchings " << pm << ")";
    o.pass = o.pass && t == expected[n - 3] && pm == t;
  }
  o.detail = os.str();
  return o;
}

Outcome weaker_bounds() {
  Outcome o;
  if (!g_campaign_ran) return {false, "campaign did not run"};
  std::size_t checked = 0, exceptions = 0, wang = 0, unflagged = 0;
  for (const auto& row : g_campaign.rows) {
    ++checked;
    const std::size_t half = (row.min_degree + 1) / 2;
    if (row.best_size < half) {
      if (row.lesaulnier == Verdict::kException) {
        ++exceptions;
      } else {
        ++unflagged;
      }
    }
    if (row.lesaulnier == Verdict::kViolation) ++unflagged;
    if (5 * row.n >= 8 * row.min_degree) {
      ++wang;
      if (row.best_size < 3 * row.min_degree / 5 || row.wang != Verdict::kOk) ++unflagged;
    }
  }
  o.pass = unflagged == 0 && exceptions == 1;
  o.detail = std::to_string(checked) + " instances, " + std::to_string(wang) +
             " in the 3/5 regime, " + std::to_string(exceptions) + " flagged K4 exception, " +
             std::to_string(unflagged) + " unflagged violations";
  return o;
}

Outcome certification() {
  Outcome o;
  const auto results = certify_range(2, 200);
  std::size_t ok = 0;
  double tightest = 1e300;
  std::uint32_t tightest_delta = 0;
  for (const auto& c : results) {
    if (c.holds && c.tail_ok && c.margin.num > 0 && c.printed_matches_rederived) ++ok;
    if (c.margin.value() < tightest) {
      tightest = c.margin.value();
      tightest_delta = c.delta;
    }
  }
  o.pass = ok == results.size() && results.size() == 199;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu/%zu deltas hold with tail check; smallest margin %.4f at delta=%u",
                ok, results.size(), tightest, tightest_delta);
  o.detail = buf;
  return o;
}

bool proper(const EdgeColoredGraph& g) {
  for (VertexId v = 0; v < g.order(); ++v) {
    std::vector<Colour> seen;
    for (EdgeId e : g.incident(v)) {
      for (Colour c : seen) {
        if (c == g.edge(e).colour) return false;
      }
      seen.push_back(g.edge(e).colour);
    }
  }
  return true;
}

Outcome generator_contracts() {
  Outcome o;
  std::size_t good = 0, total = 0, identical = 0, resampled = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const std::uint64_t seed = derive_seed(77, i);
    Rng rng(seed);
    const auto n = static_cast<std::uint32_t>(3 + rng.below(18));
    const auto delta = static_cast<std::uint32_t>(1 + rng.below(n - 1));
    const double p = (i % 3 == 0) ? 0.1 : 0.0;
    const auto base = random_graph_min_degree(n, delta, seed, p);
    const auto g = greedy_proper_coloring(base, seed ^ 0x5bd1e995);
    ++total;
    const auto rebuilt = build_graph(g.order(), g.edge_specs());  // re-validates
    if (proper(rebuilt) && min_degree(g) >= delta && g.order() == n) ++good;
    if (i % 50 == 0) {
      ++resampled;
      const auto again =
          greedy_proper_coloring(random_graph_min_degree(n, delta, seed, p), seed ^ 0x5bd1e995);
      if (graph_to_text(again) == graph_to_text(g)) ++identical;
    }
  }
  CampaignConfig c;
  c.delta_min = 2;
  c.delta_max = 4;
  c.samples = 40;
  c.seed = 99;
  c.threads = 4;
  const auto a = run_verify(c);
  c.threads = 1;
  const auto b = run_verify(c);
  const bool files_equal = rows_to_csv(a) == rows_to_csv(b) &&
                           cells_to_csv(a) == cells_to_csv(b) &&
                           campaign_to_json(c, a) == campaign_to_json(c, b);
  o.pass = good == total && identical == resampled && files_equal;
  o.detail = std::to_string(good) + "/" + std::to_string(total) + " proper and min-degree; " +
             std::to_string(identical) + "/" + std::to_string(resampled) +
             " regenerated byte-identical; campaign files " +
             (files_equal ? "identical" : "DIFFER") + " across thread counts";
  return o;
}

Outcome odd_order_transversals() {
  Outcome o;
  std::size_t odd_ok = 0, odd_total = 0;
  for (std::uint32_t n = 1; n <= 7; n += 2) {
    for (std::uint64_t i = 0; i < 50; ++i) {
      ++odd_total;
      if (count_transversals(random_latin(n, derive_seed(5, n, i))) >= 1) ++odd_ok;
    }
  }
  std::size_t even_zero = 0;
  for (std::uint32_t n = 2; n <= 8; n += 2) {
    if (count_transversals(cyclic_square(n)) == 0) ++even_zero;
  }
  o.pass = odd_ok == odd_total && even_zero == 4;
  o.detail = std::to_string(odd_ok) + "/" + std::to_string(odd_total) +
             " odd squares have a transversal; " + std::to_string(even_zero) +
             "/4 even cyclic squares have none";
  return o;
}

}  // namespace

int main() {
  const auto graphs = small_graphs();
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 theorem campaign", theorem_campaign},
      {"2 oracle equivalence", [&] { return oracle_equivalence(graphs); }},
      {"3 engine soundness", [&] { return engine_soundness(graphs); }},
      {"4 known values", known_values},
      {"5 weaker bounds", weaker_bounds},
      {"6 counting certification", certification},
      {"7 generator contracts", generator_contracts},
      {"8 odd-order transversals", odd_order_transversals},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
