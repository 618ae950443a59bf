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

#include <string>
#include <vector>

#include "doctest.h"
#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/latin.hpp"
#include "support.hpp"

namespace rainbow {
namespace {

using testing::c4;
using testing::edge_id;
using testing::make;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

TEST_CASE("build normalises and validates") {
  const auto path = make(3, {{1, 0, 1}, {2, 1, 2}});
  CHECK(path.order() == 3);
  CHECK(path.edge_count() == 2);
  CHECK(path.edge(0).u == 0);
  CHECK(path.edge(0).v == 1);
  CHECK(min_degree(path) == 1);
  CHECK(max_degree(path) == 2);

  const auto k4 = one_factorization(2);
  CHECK(k4.edge_count() == 6);
  CHECK(min_degree(k4) == 3);
  CHECK(max_degree(k4) == 3);
  CHECK(k4.palette_size() == 3);

  CHECK(code_of([] { make(2, {{0, 0, 1}}); }) == ErrorCode::kLoopEdge);
  CHECK(code_of([] { make(2, {{0, 1, 1}, {1, 0, 2}}); }) == ErrorCode::kDuplicateEdge);
  CHECK(code_of([] { make(3, {{0, 1, 1}, {1, 2, 1}}); }) == ErrorCode::kImproperColoring);
  CHECK(code_of([] { make(2, {{0, 2, 1}}); }) == ErrorCode::kVertexOutOfRange);
  CHECK(code_of([] { make(2, {{0, 1, 0}}); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("improper colouring message names both edges") {
  try {
    make(3, {{0, 1, 4}, {1, 2, 4}});
    FAIL("expected ImproperColoring");
  } catch (const Error& e) {
    const std::string what = e.what();
    CHECK(what.find("(0,1,") != std::string::npos);
    CHECK(what.find("(1,2,") != std::string::npos);
  }
}

TEST_CASE("degrees of small graphs") {
  const auto cycle = c4(1, 2, 1, 2);
  CHECK(min_degree(cycle) == 2);
  CHECK(max_degree(cycle) == 2);
  const EdgeColoredGraph empty = make(3, {});
  CHECK(min_degree(empty) == 0);
}

TEST_CASE("colour profile") {
  CHECK(color_profile(one_factorization(2)).a == 2);
  CHECK(color_profile(c4(1, 2, 3, 4)).a == 1);
  CHECK(color_profile(latin_to_graph(cyclic_square(3))).a == 3);
  const auto p = color_profile(c4(5, 2, 5, 2));
  CHECK(p.largest_colour == 2);
  CHECK(p.class_sizes.at(5) == 2);
}

TEST_CASE("rainbow matching predicate") {
  const auto alt = c4(1, 2, 1, 2);
  const std::vector<EdgeId> opposite{edge_id(alt, 0, 1), edge_id(alt, 2, 3)};
  CHECK_FALSE(is_rainbow_matching(alt, opposite));

  const auto mixed = c4(1, 2, 3, 2);
  const std::vector<EdgeId> opposite2{edge_id(mixed, 0, 1), edge_id(mixed, 2, 3)};
  CHECK(is_rainbow_matching(mixed, opposite2));

  CHECK(is_rainbow_matching(mixed, std::vector<EdgeId>{}));
  const std::vector<EdgeId> adjacent{edge_id(mixed, 0, 1), edge_id(mixed, 1, 2)};
  CHECK_FALSE(is_rainbow_matching(mixed, adjacent));
  CHECK(code_of([&] { is_rainbow_matching(mixed, std::vector<EdgeId>{9}); }) ==
        ErrorCode::kUnknownEdge);
}

TEST_CASE("order thresholds") {
  CHECK(bound_n(2) == 7);
  CHECK(bound_n(3) == 11);
  CHECK(bound_n(4) == 16);
  CHECK(bound_n(5) == 20);
  CHECK(diemunsch_bound(5) == 23);
  // (52*100 - 920 + 41)/80 = 54.01..., floored then plus one.
  CHECK(diemunsch_bound(10) == 55);
}

TEST_CASE("text format round trip") {
  const auto g = one_factorization(3);
  const auto text = graph_to_text(g);
  const auto back = parse_graph_text(text);
  CHECK(back.edge_specs() == g.edge_specs());
  CHECK(graph_to_text(back) == text);

  const auto json_back = parse_graph(graph_to_json(g));
  CHECK(json_back.edge_specs() == g.edge_specs());
}

TEST_CASE("text parser reports line numbers") {
  const std::string bad = "# comment\ng 3\ne 0 1 1\ne 1 two 2\n";
  try {
    parse_graph_text(bad);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  CHECK(code_of([] { parse_graph_text("e 0 1 1\n"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_graph("{\"n\": 2, \"edges\": [[0, 1]]}"); }) == ErrorCode::kParse);
}

TEST_CASE("vertex deletion keeps ids") {
  const auto k4 = one_factorization(2);
  std::vector<EdgeId> kept;
  const auto sub = without_vertex(k4, 0, &kept);
  CHECK(sub.order() == 4);
  CHECK(sub.edge_count() == 3);
  CHECK(sub.degree(0) == 0);
  for (EdgeId e = 0; e < sub.edge_count(); ++e) {
    CHECK(sub.edge(e).u == k4.edge(kept[e]).u);
    CHECK(sub.edge(e).v == k4.edge(kept[e]).v);
  }
}

}  // namespace
}  // namespace rainbow
