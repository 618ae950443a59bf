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

#include "doctest.h"
#include "rainbow/exact_solver.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/latin.hpp"
#include "support.hpp"

namespace rainbow {
namespace {

using testing::c4;
using testing::make;

TEST_CASE("cyclic squares") {
  CHECK(cyclic_square(1).rows() == std::vector<std::vector<std::uint32_t>>{{1}});
  CHECK(cyclic_square(2).rows() == std::vector<std::vector<std::uint32_t>>{{1, 2}, {2, 1}});
  CHECK(cyclic_square(3).at(2, 2) == 2);
  CHECK_THROWS_AS(cyclic_square(0), Error);
}

TEST_CASE("validation and symbol normalisation") {
  CHECK(is_latin({{7, 9}, {9, 7}}));
  CHECK_FALSE(is_latin({{1, 2}, {1, 2}}));
  CHECK_FALSE(is_latin({{1, 2}, {2}}));
  const auto sq = LatinSquare::from_rows({{7, 9}, {9, 7}});
  CHECK(sq == cyclic_square(2));
  CHECK_THROWS_AS(LatinSquare::from_rows({{1, 1}, {2, 2}}), Error);
}

TEST_CASE("square to graph") {
  const auto g = latin_to_graph(cyclic_square(3));
  CHECK(g.order() == 6);
  CHECK(g.edge_count() == 9);
  CHECK(g.palette_size() == 3);
  for (const auto& [colour, size] : color_profile(g).class_sizes) CHECK(size == 3);
  const auto one = latin_to_graph(cyclic_square(1));
  CHECK(one.edge_count() == 1);
}

TEST_CASE("graph to square") {
  const auto z4 = cyclic_square(4);
  CHECK(graph_to_latin(latin_to_graph(z4)) == z4);
  CHECK(graph_to_latin(c4(1, 2, 1, 2)).order() == 2);
  try {
    graph_to_latin(c4(1, 2, 1, 3));
    FAIL("expected WrongColourCount");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kWrongColourCount);
  }
  CHECK_THROWS_AS(graph_to_latin(one_factorization(2)), Error);
  CHECK_THROWS_AS(graph_to_latin(make(3, {})), Error);
}

TEST_CASE("transversal counts") {
  CHECK(count_transversals(cyclic_square(1)) == 1);
  CHECK(count_transversals(cyclic_square(3)) == 3);
  CHECK(count_transversals(cyclic_square(4)) == 0);
  CHECK(count_transversals(cyclic_square(5)) == 15);
  CHECK(count_transversals(cyclic_square(7)) == 133);
  CHECK_THROWS_AS(count_transversals(cyclic_square(10)), Error);
}

TEST_CASE("even cyclic squares have no transversal") {
  for (std::uint32_t n = 2; n <= 8; n += 2) {
    CAPTURE(n);
    CHECK(count_transversals(cyclic_square(n)) == 0);
  }
}

TEST_CASE("transversals match rainbow perfect matchings") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto sq = random_latin(2 + static_cast<std::uint32_t>(seed % 5), seed);
    CAPTURE(seed);
    CHECK(count_transversals(sq) == count_rainbow_perfect_matchings(latin_to_graph(sq)));
  }
}

TEST_CASE("text round trip and parse errors") {
  const auto sq = cyclic_square(4);
  CHECK(parse_latin_text(latin_to_text(sq)) == sq);
  CHECK(parse_latin_text("# z2\n2\n1 2\n2 1\n") == cyclic_square(2));
  CHECK_THROWS_AS(parse_latin_text(""), Error);
  CHECK_THROWS_AS(parse_latin_text("2\n1 2\n"), Error);
  CHECK_THROWS_AS(parse_latin_text("2\n1 x\n2 1\n"), Error);
}

}  // namespace
}  // namespace rainbow
