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

#include "rainbow/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace rainbow {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling on the top of the range keeps draws unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  h = splitmix64(h ^ c);
  return h;
}

std::uint32_t SimpleGraph::min_degree() const {
  if (n == 0) return 0;
  std::vector<std::uint32_t> deg(n, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return *std::min_element(deg.begin(), deg.end());
}

SimpleGraph random_graph_min_degree(std::uint32_t n, std::uint32_t delta, std::uint64_t seed,
                                    double p) {
  if (delta >= n) {
    throw Error(ErrorCode::kInfeasibleDegree, "min degree " + std::to_string(delta) +
                                                  " impossible on " + std::to_string(n) +
                                                  " vertices");
  }
  Rng rng(seed);
  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::uint32_t> deg(n, 0);
  auto connect = [&](VertexId a, VertexId b) {
    adj[static_cast<std::size_t>(a) * n + b] = adj[static_cast<std::size_t>(b) * n + a] = 1;
    ++deg[a];
    ++deg[b];
  };

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  rng.shuffle(order);
  for (VertexId v : order) {
    if (deg[v] >= delta) continue;
    std::vector<VertexId> deficient, others;
    for (VertexId w = 0; w < n; ++w) {
      if (w == v || adj[static_cast<std::size_t>(v) * n + w]) continue;
      (deg[w] < delta ? deficient : others).push_back(w);
    }
    rng.shuffle(deficient);
    rng.shuffle(others);
    // Repair: fall back to the lowest-degree non-neighbours.
    std::stable_sort(others.begin(), others.end(),
                     [&](VertexId a, VertexId b) { return deg[a] < deg[b]; });
    std::size_t i = 0, j = 0;
    while (deg[v] < delta) {
      if (i < deficient.size()) {
        connect(v, deficient[i++]);
      } else {
        connect(v, others[j++]);
      }
    }
  }
  if (p > 0.0) {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (!adj[static_cast<std::size_t>(u) * n + v] && rng.unit() < p) connect(u, v);
      }
    }
  }
  SimpleGraph g;
  g.n = n;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (adj[static_cast<std::size_t>(u) * n + v]) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

namespace {

// Colours present at each vertex, indexed by colour label.
class ColourTable {
 public:
  explicit ColourTable(std::uint32_t n) : used_(n) {}

  bool free_at(VertexId v, Colour c) const { return c >= used_[v].size() || !used_[v][c]; }
  void take(VertexId v, Colour c) {
    if (c >= used_[v].size()) used_[v].resize(c + 1, 0);
    used_[v][c] = 1;
  }

 private:
  std::vector<std::vector<char>> used_;
};

}  // namespace

EdgeColoredGraph greedy_proper_coloring(const SimpleGraph& g, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<VertexId, VertexId>> order = g.edges;
  rng.shuffle(order);
  ColourTable table(g.n);
  std::vector<EdgeSpec> specs;
  specs.reserve(order.size());
  for (const auto& [u, v] : order) {
    Colour c = 1;
    while (!table.free_at(u, c) || !table.free_at(v, c)) ++c;
    table.take(u, c);
    table.take(v, c);
    specs.push_back({u, v, c});
  }
  return build_graph(g.n, specs);
}

EdgeColoredGraph one_factorization(std::uint32_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "one_factorization needs k >= 1");
  const std::uint32_t m = 2 * k - 1;  // vertices 0..m-1 on a circle, m is the hub
  std::vector<EdgeSpec> specs;
  for (std::uint32_t c = 0; c < m; ++c) {
    specs.push_back({c, m, c + 1});
    for (std::uint32_t i = 1; i < k; ++i) {
      specs.push_back({(c + i) % m, (c + m - i) % m, c + 1});
    }
  }
  return build_graph(2 * k, specs);
}

EdgeColoredGraph random_sparse_colored(std::uint32_t n, std::uint32_t m, std::uint32_t palette,
                                       std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  rng.shuffle(pairs);
  if (pairs.size() > m) pairs.resize(m);
  ColourTable table(n);
  Colour overflow = std::max<std::uint32_t>(palette, 1);
  std::vector<EdgeSpec> specs;
  for (const auto& [u, v] : pairs) {
    std::vector<Colour> options;
    for (Colour c = 1; c <= palette; ++c) {
      if (table.free_at(u, c) && table.free_at(v, c)) options.push_back(c);
    }
    Colour c;
    if (!options.empty()) {
      c = options[rng.below(options.size())];
    } else {
      c = ++overflow;
    }
    table.take(u, c);
    table.take(v, c);
    specs.push_back({u, v, c});
  }
  return build_graph(n, specs);
}

namespace {

bool fill_latin(std::uint32_t n, std::uint32_t cell, std::vector<std::int64_t>& grid,
                std::vector<char>& row_has, std::vector<char>& col_has, Rng& rng) {
  if (cell == n * n) return true;
  const std::uint32_t r = cell / n, c = cell % n;
  std::vector<std::uint32_t> symbols(n);
  std::iota(symbols.begin(), symbols.end(), 1u);
  rng.shuffle(symbols);
  for (std::uint32_t s : symbols) {
    if (row_has[r * (n + 1) + s] || col_has[c * (n + 1) + s]) continue;
    row_has[r * (n + 1) + s] = col_has[c * (n + 1) + s] = 1;
    grid[cell] = s;
    if (fill_latin(n, cell + 1, grid, row_has, col_has, rng)) return true;
    row_has[r * (n + 1) + s] = col_has[c * (n + 1) + s] = 0;
  }
  return false;
}

}  // namespace

LatinSquare random_latin(std::uint32_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "random_latin needs n >= 1");
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kOrderTooLarge,
                "random_latin is limited to order " + std::to_string(kMaxEnumerationOrder));
  }
  Rng rng(seed);
  std::vector<std::int64_t> grid(n * n, 0);
  std::vector<char> row_has(n * (n + 1), 0), col_has(n * (n + 1), 0);
  fill_latin(n, 0, grid, row_has, col_has, rng);
  std::vector<std::vector<std::int64_t>> rows(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    rows[i].assign(grid.begin() + i * n, grid.begin() + (i + 1) * n);
  }
  return LatinSquare::from_rows(rows);
}

}  // namespace rainbow
