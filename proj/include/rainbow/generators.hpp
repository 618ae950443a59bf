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

#ifndef RAINBOW_GENERATORS_HPP
#define RAINBOW_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/latin.hpp"

namespace rainbow {

// mt19937_64 output is fixed by the standard; the bounded draws below avoid
// the library-specific std::uniform_int_distribution so streams are identical
// across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
// Per-instance stream seed from a master seed and a coordinate tuple.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

struct SimpleGraph {
  std::uint32_t n = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;  // u < v, sorted

  std::uint32_t min_degree() const;
};

// Min degree >= delta: vertices in random order top up their degree by
// joining random non-neighbours (preferring still-deficient ones), then every
// other pair is added with probability p. Throws kInfeasibleDegree if
// delta >= n.
SimpleGraph random_graph_min_degree(std::uint32_t n, std::uint32_t delta, std::uint64_t seed,
                                    double p = 0.0);

// Edges in seeded random order, each taking the least colour free at both
// ends; at most 2*maxdeg - 1 colours.
EdgeColoredGraph greedy_proper_coloring(const SimpleGraph& g, std::uint64_t seed);

// K_{2k} with the round-robin 1-factorization (2k - 1 colours).
EdgeColoredGraph one_factorization(std::uint32_t k);

// Random simple graph with `m` edges on `n` vertices (m clamped to n(n-1)/2),
// each edge given a random colour from 1..palette that is free at both ends,
// or the next unused colour when none is.
EdgeColoredGraph random_sparse_colored(std::uint32_t n, std::uint32_t m, std::uint32_t palette,
                                       std::uint64_t seed);

// Backtracking fill with seeded symbol order; not uniform over squares.
// Throws kOrderTooLarge above kMaxEnumerationOrder.
LatinSquare random_latin(std::uint32_t n, std::uint64_t seed);

}  // namespace rainbow

#endif  // RAINBOW_GENERATORS_HPP
