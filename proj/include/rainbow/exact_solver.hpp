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

#ifndef RAINBOW_EXACT_SOLVER_HPP
#define RAINBOW_EXACT_SOLVER_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

inline constexpr std::uint64_t kUnlimitedNodes = std::numeric_limits<std::uint64_t>::max();

// One recorded step. The exact solver emits "incumbent" events; the
// augmentation engine emits its rule ids (R-direct, R-mono, R-exchange-<k>,
// R-vertex-reduce).
struct TraceEvent {
  std::string rule;
  std::vector<EdgeId> removed;
  std::vector<EdgeId> added;
  std::size_t size_after = 0;
  std::uint64_t nodes = 0;
};

struct SolveResult {
  Matching best;
  std::size_t size = 0;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  std::vector<TraceEvent> trace;
  // Engine only: the greedy seed the trace replays from.
  Matching initial;
  bool budget_hit = false;
};

struct SolverOptions {
  std::uint64_t node_budget = kUnlimitedNodes;
};

// Branch and bound over edges ordered by degree sum (descending, ties by id).
// On budget exhaustion returns the incumbent with optimal = false.
SolveResult max_rainbow_matching(const EdgeColoredGraph& g, const SolverOptions& opts = {});

// Early-exit decision form. Throws kBudgetExceeded if the budget runs out
// before the question is settled.
std::optional<Matching> rainbow_matching_at_least(const EdgeColoredGraph& g, std::size_t k,
                                                  const SolverOptions& opts = {},
                                                  std::uint64_t* nodes = nullptr);

// Maximum cardinality matching: every edge gets a fresh colour, then the
// rainbow solver runs on the recoloured copy. Edge ids refer to `g`.
Matching max_matching(const EdgeColoredGraph& g);

// Number of rainbow matchings covering every vertex. Throws kBudgetExceeded.
std::uint64_t count_rainbow_perfect_matchings(const EdgeColoredGraph& g,
                                              std::uint64_t node_budget = kUnlimitedNodes);

}  // namespace rainbow

#endif  // RAINBOW_EXACT_SOLVER_HPP
