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

#include <set>

#include "doctest.h"
#include "rainbow/exact_solver.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/latin.hpp"

namespace rainbow {
namespace {

TEST_CASE("rng streams are fixed") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.below(17) == b.below(17));
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 2));
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
}

TEST_CASE("min-degree generator contract") {
  const auto g = random_graph_min_degree(7, 2, 1);
  CHECK(g.n == 7);
  CHECK(g.min_degree() >= 2);
  CHECK(random_graph_min_degree(7, 2, 1).edges == g.edges);
  CHECK(random_graph_min_degree(7, 2, 2).edges != g.edges);

  const auto complete = random_graph_min_degree(5, 4, 3);
  CHECK(complete.edges.size() == 10);
  CHECK_THROWS_AS(random_graph_min_degree(4, 4, 1), Error);

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto n = static_cast<std::uint32_t>(3 + seed % 15);
    const auto delta = static_cast<std::uint32_t>(1 + seed % (n - 1));
    CAPTURE(seed);
    CHECK(random_graph_min_degree(n, delta, seed, 0.05).min_degree() >= delta);
  }
}

TEST_CASE("greedy colouring") {
  SimpleGraph path{3, {{0, 1}, {1, 2}}};
  const auto p = greedy_proper_coloring(path, 5);
  std::set<Colour> colours{p.edge(0).colour, p.edge(1).colour};
  CHECK(colours == std::set<Colour>{1, 2});

  SimpleGraph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(greedy_proper_coloring(k4, seed).palette_size() <= 5);
  }
}

TEST_CASE("round-robin factorizations") {
  const auto single = one_factorization(1);
  CHECK(single.edge_count() == 1);
  const auto k4 = one_factorization(2);
  CHECK(max_rainbow_matching(k4).size == 1);
  const auto k6 = one_factorization(3);
  CHECK(k6.edge_count() == 15);
  CHECK(k6.palette_size() == 5);
  CHECK(color_profile(k6).a == 3);
  for (const auto& [c, size] : color_profile(k6).class_sizes) CHECK(size == 3);
  CHECK_THROWS_AS(one_factorization(0), Error);
}

TEST_CASE("sparse coloured graphs") {
  const auto g = random_sparse_colored(6, 9, 3, 4);
  CHECK(g.edge_count() == 9);
  CHECK(random_sparse_colored(6, 9, 3, 4).edge_specs() == g.edge_specs());
  CHECK(random_sparse_colored(4, 100, 3, 4).edge_count() == 6);
}

TEST_CASE("random latin squares") {
  CHECK(random_latin(1, 9) == cyclic_square(1));
  CHECK(random_latin(6, 9) == random_latin(6, 9));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(is_latin([&] {
      std::vector<std::vector<std::int64_t>> rows;
      for (const auto& r : random_latin(7, seed).rows()) rows.emplace_back(r.begin(), r.end());
      return rows;
    }()));
  }
  CHECK_THROWS_AS(random_latin(0, 1), Error);
}

}  // namespace
}  // namespace rainbow
