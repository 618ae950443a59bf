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

#ifndef RAINBOW_ENGINE_HPP
#define RAINBOW_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/exact_solver.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// Local augmentation rules taken from the exchange arguments behind the
// (9d-5)/2 rainbow matching bound. Each rule either returns a rainbow
// matching exactly one edge larger than its input or nothing.

inline constexpr std::size_t kDefaultExchangeDepth = 3;
inline constexpr std::size_t kMaxExchangeDepth = 5;

struct RuleApplication {
  std::string rule;
  std::vector<EdgeId> removed;
  std::vector<EdgeId> added;
  Matching result;
};

struct EngineOptions {
  std::size_t max_exchange_depth = kDefaultExchangeDepth;
  // Depth above kDefaultExchangeDepth is refused unless this is set.
  bool allow_deep_exchange = false;
  // Cap on partial selections explored per rule_exchange call.
  std::uint64_t exchange_candidate_cap = 2'000'000;
  // Nested rule_vertex_reduce calls allowed below the top level.
  std::size_t recursion_limit = 16;
  // Node budget for the exact fallback inside rule_vertex_reduce.
  std::uint64_t fallback_node_budget = 10'000'000;
};

// Maximal rainbow matching from a single pass over edges in id order.
Matching greedy_rainbow(const EdgeColoredGraph& g);

// Adds an edge disjoint from V(M) whose colour M does not use.
std::optional<RuleApplication> apply_direct(const EdgeColoredGraph& g, const Matching& m);

// Removes up to `depth` matched edges and inserts one more edge than it
// removed. Throws kBudgetExceeded when the candidate cap is hit.
std::optional<RuleApplication> apply_exchange(const EdgeColoredGraph& g, const Matching& m,
                                              std::size_t depth,
                                              const EngineOptions& opts = {});

// Swap xy (colour i) for a free edge uv of colour i plus an edge from x or y
// to a free vertex w not in {u, v} with a colour unused by M.
std::optional<RuleApplication> apply_mono(const EdgeColoredGraph& g, const Matching& m);

// If some vertex v has degree > 3(target - 1), solve G - v for a rainbow
// matching of size target - 1 and extend it by an edge at v.
// Throws kRecursionBudget when nesting exceeds opts.recursion_limit.
std::optional<RuleApplication> apply_vertex_reduce(const EdgeColoredGraph& g, std::size_t target,
                                                   const EngineOptions& opts = {});

std::optional<Matching> rule_direct(const EdgeColoredGraph& g, const Matching& m);
std::optional<Matching> rule_exchange(const EdgeColoredGraph& g, const Matching& m,
                                      std::size_t depth, const EngineOptions& opts = {});
std::optional<Matching> rule_mono(const EdgeColoredGraph& g, const Matching& m);
std::optional<Matching> rule_vertex_reduce(const EdgeColoredGraph& g, std::size_t target,
                                           const EngineOptions& opts = {});

// Greedy seed, then direct, mono, exchange 1..depth, vertex-reduce in that
// priority until `target` is reached or nothing fires. Never claims
// optimality.
SolveResult run_engine(const EdgeColoredGraph& g, std::size_t target,
                       std::size_t max_exchange_depth = kDefaultExchangeDepth,
                       const EngineOptions& opts = {});

// Applies the trace to result.initial.
Matching replay_trace(const SolveResult& result);

// One JSON object per line, one line per rule application.
std::string trace_to_json_lines(const EdgeColoredGraph& g, const std::vector<TraceEvent>& trace);

}  // namespace rainbow

#endif  // RAINBOW_ENGINE_HPP
