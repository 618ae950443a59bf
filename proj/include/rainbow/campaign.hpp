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

#ifndef RAINBOW_CAMPAIGN_HPP
#define RAINBOW_CAMPAIGN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/engine.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

inline constexpr std::uint64_t kDefaultCampaignBudget = 100'000'000;

enum class NRule { kBound, kFixed, kOffset };

struct CampaignConfig {
  std::uint32_t delta_min = 2;
  std::uint32_t delta_max = 3;  // empty range when delta_min > delta_max
  NRule n_rule = NRule::kBound;
  std::uint32_t n_fixed = 0;
  std::int64_t n_offset = 0;  // n = bound_n(delta) + offset
  std::uint32_t samples = 100;
  std::uint32_t recolourings = 3;  // extra colourings per graph
  std::uint64_t seed = 1;
  double edge_probability = 0.0;
  std::size_t engine_depth = kDefaultExchangeDepth;
  std::uint64_t node_budget = kDefaultCampaignBudget;
  bool inject_k4 = false;
  // Execution only; excluded from the config hash.
  unsigned threads = 0;
  std::string dump_dir;

  std::string canonical() const;
  std::uint64_t hash() const;
  std::uint32_t n_for(std::uint32_t delta) const;
};

enum class Verdict { kOk, kException, kViolation, kNotApplicable, kInconclusive };
const char* verdict_name(Verdict v);

// One instance of a verification campaign.
struct InstanceRow {
  std::string source;  // "random" or "k4"
  std::uint32_t delta_param = 0;
  std::uint32_t n = 0;
  std::uint32_t sample = 0;
  std::uint32_t recolour = 0;
  std::uint64_t instance_seed = 0;
  std::uint64_t colour_seed = 0;
  std::size_t edges = 0;
  std::uint32_t min_degree = 0;
  std::uint32_t max_degree = 0;
  std::uint32_t palette = 0;
  std::uint32_t a = 0;
  bool theorem_applies = false;  // n >= bound_n(min degree)
  std::optional<bool> reached_delta;
  std::size_t best_size = 0;        // largest rainbow matching found
  std::optional<std::size_t> optimum;  // when the exact maximum was computed
  std::uint64_t solver_nodes = 0;
  std::size_t engine_size = 0;
  std::size_t engine_trace_len = 0;
  Verdict theorem = Verdict::kNotApplicable;
  Verdict lesaulnier = Verdict::kNotApplicable;
  Verdict wang = Verdict::kNotApplicable;
  std::string status;  // ok | inconclusive | violation
  std::string dump_path;
};

// Runs every check on one coloured graph. `delta_param` and the seeds are
// only copied into the row.
InstanceRow check_instance(const EdgeColoredGraph& g, const CampaignConfig& config);

struct CellSummary {
  std::uint32_t delta = 0;
  std::uint32_t n = 0;
  std::size_t instances = 0;
  std::size_t reached = 0;
  std::size_t engine_reached = 0;
  std::size_t inconclusive = 0;
  std::size_t violations = 0;
  bool theorem_regime = false;
  std::optional<double> success_fraction;
};

struct CampaignResult {
  std::uint64_t config_hash = 0;
  std::vector<InstanceRow> rows;
  std::vector<CellSummary> cells;
  std::size_t violations = 0;
  std::size_t inconclusive = 0;
};

CampaignResult run_verify(const CampaignConfig& config);

std::string rows_to_csv(const CampaignResult& result);
std::string cells_to_csv(const CampaignResult& result);
std::string campaign_to_json(const CampaignConfig& config, const CampaignResult& result);

struct ScanConfig {
  std::uint32_t delta = 2;
  std::uint32_t n_min = 3;
  std::uint32_t n_max = 7;
  std::uint32_t samples = 100;
  std::uint64_t seed = 1;
  double edge_probability = 0.0;
  std::size_t engine_depth = kDefaultExchangeDepth;
  std::uint64_t node_budget = kDefaultCampaignBudget;
  unsigned threads = 0;
};

struct ScanRow {
  std::uint32_t delta = 0;
  std::uint32_t n = 0;
  std::uint32_t samples = 0;
  std::uint32_t failures = 0;
  std::uint32_t engine_failures = 0;
  std::uint32_t inconclusive = 0;
  std::optional<double> failure_rate;
};

// Failure rate of "rainbow matching of size min degree" per n.
std::vector<ScanRow> run_scan(const ScanConfig& config);
std::string scan_to_csv(const std::vector<ScanRow>& rows);
std::string scan_to_json(const std::vector<ScanRow>& rows);

}  // namespace rainbow

#endif  // RAINBOW_CAMPAIGN_HPP
