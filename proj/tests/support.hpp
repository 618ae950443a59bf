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

#ifndef RAINBOW_TESTS_SUPPORT_HPP
#define RAINBOW_TESTS_SUPPORT_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow::testing {

inline EdgeColoredGraph make(std::uint32_t n, std::initializer_list<EdgeSpec> edges) {
  std::vector<EdgeSpec> v(edges);
  return build_graph(n, v);
}

// Square a-b-c-d with edge colours ab, bc, cd, da.
inline EdgeColoredGraph c4(Colour ab, Colour bc, Colour cd, Colour da) {
  return make(4, {{0, 1, ab}, {1, 2, bc}, {2, 3, cd}, {0, 3, da}});
}

inline EdgeId edge_id(const EdgeColoredGraph& g, VertexId u, VertexId v) {
  return *g.find_edge(u, v);
}

// Largest rainbow matching by trying every edge subset; m <= 20.
inline std::size_t brute_force_max(const EdgeColoredGraph& g) {
  const std::size_t m = g.edge_count();
  std::size_t best = 0;
  std::vector<EdgeId> chosen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const auto bits = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (bits <= best) continue;
    chosen.clear();
    for (std::size_t e = 0; e < m; ++e) {
      if (mask >> e & 1) chosen.push_back(static_cast<EdgeId>(e));
    }
    if (is_rainbow_matching(g, chosen)) best = bits;
  }
  return best;
}

}  // namespace rainbow::testing

#endif  // RAINBOW_TESTS_SUPPORT_HPP
