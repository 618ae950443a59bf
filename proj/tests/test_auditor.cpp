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

#include <algorithm>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "rainbow/auditor.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/latin.hpp"
#include "support.hpp"

namespace rainbow {
namespace {

using testing::edge_id;
using testing::make;

bool holds(const AuditReport& rep, const std::string& id) {
  const ClaimCheck* c = rep.find_check(id);
  REQUIRE(c != nullptr);
  return c->holds;
}

bool has_rule(const AuditReport& rep, const std::string& prefix) {
  return std::any_of(rep.applicable_rules.begin(), rep.applicable_rules.end(),
                     [&](const std::string& r) { return r.rfind(prefix, 0) == 0; });
}

// Pair 0-1 in colour 1; vertex 0 joined to the seven free vertices 2..8 in
// fresh colours 2..8.
EdgeColoredGraph one_good_vertex() {
  std::vector<EdgeSpec> edges{{0, 1, 1}};
  for (VertexId w = 2; w <= 8; ++w) edges.push_back({0, w, w});
  return build_graph(9, edges);
}

TEST_CASE("no good edges when every colour is used by M") {
  const auto g = make(5, {{0, 1, 1}, {2, 3, 2}, {1, 2, 3}, {0, 4, 2}, {3, 4, 1}});
  const Matching m = make_matching({edge_id(g, 0, 1), edge_id(g, 2, 3)});
  const auto rep = compute_good_structure(g, m, make_matching({edge_id(g, 1, 2)}));
  CHECK(rep.good_edges.empty());
  CHECK(rep.r == 0);
  CHECK(rep.w == std::vector<VertexId>{4});
}

TEST_CASE("seven fresh pendant edges make a good vertex") {
  const auto g = one_good_vertex();
  const Matching m = make_matching({edge_id(g, 0, 1)});
  const auto rep = compute_good_structure(g, m, make_matching({edge_id(g, 0, 2)}));
  CHECK(rep.r == 1);
  CHECK(rep.good_vertices == std::vector<VertexId>{0});
  CHECK(rep.pairs.front().x == 0);
  CHECK(rep.pairs.front().role == PairRole::kGood);
  CHECK(std::count(rep.w_prime.begin(), rep.w_prime.end(), VertexId{1}) == 1);
  CHECK(holds(rep, "good-vertex-dichotomy"));
}

TEST_CASE("six pendant edges fall short of the threshold") {
  std::vector<EdgeSpec> edges{{0, 1, 1}};
  for (VertexId w = 2; w <= 7; ++w) edges.push_back({0, w, w});
  const auto g = build_graph(8, edges);
  const auto rep = compute_good_structure(g, make_matching({0}), make_matching({1}));
  CHECK(rep.r == 0);
}

TEST_CASE("good edge inside W is recorded, not thrown") {
  const auto g = make(4, {{0, 1, 1}, {2, 3, 2}});
  const Matching m = make_matching({edge_id(g, 0, 1)});
  AuditReport rep;
  CHECK_NOTHROW(rep = audit_state(g, m, pick_m0(g, m)));
  CHECK_FALSE(holds(rep, "good-edges-meet-M"));
  CHECK(rep.find_check("good-edges-meet-M")->witness.find("2-3") != std::string::npos);
  CHECK(has_rule(rep, "R-direct"));
}

TEST_CASE("invalid states are rejected") {
  const auto g = make(4, {{0, 1, 1}, {2, 3, 1}, {1, 2, 2}});
  CHECK_THROWS_AS(compute_good_structure(g, Matching{}, Matching{}), Error);
  // M0 in M's colour.
  CHECK_THROWS_AS(compute_good_structure(g, make_matching({edge_id(g, 0, 1)}),
                                         make_matching({edge_id(g, 2, 3)})),
                  Error);
  AuditReport fresh;
  CHECK_THROWS_AS(compute_t(g, fresh), Error);
}

TEST_CASE("without good vertices nice coincides with good") {
  const auto g = make(6, {{0, 1, 1}, {0, 2, 2}, {1, 3, 3}, {2, 3, 4}, {4, 5, 1}});
  const Matching m = make_matching({edge_id(g, 0, 1)});
  AuditReport rep = compute_good_structure(g, m, pick_m0(g, m));
  compute_nice_structure(g, rep);
  CHECK(rep.r == 0);
  CHECK(rep.s == 0);
  CHECK(rep.nice_edges == rep.good_edges);
}

TEST_CASE("a second pair with seven edges into W' is nice") {
  // Pair A = 0-1 is good through 2..8. Pair B = 9-10 in colour 20; vertex 9
  // reaches 1 (in W' as A's partner) in colour 1 and 11..16 in fresh colours.
  std::vector<EdgeSpec> edges{{0, 1, 1}, {9, 10, 20}, {9, 1, 21}};
  for (VertexId w = 2; w <= 8; ++w) edges.push_back({0, w, w});
  for (VertexId w = 11; w <= 16; ++w) edges.push_back({9, w, 30 + w});
  const auto g = build_graph(17, edges);
  const Matching m = make_matching({edge_id(g, 0, 1), edge_id(g, 9, 10)});
  AuditReport rep = compute_good_structure(g, m, make_matching({edge_id(g, 9, 11)}));
  CHECK(rep.r == 1);
  compute_nice_structure(g, rep);
  CHECK(rep.s == 1);
  CHECK(std::count(rep.nice_vertices.begin(), rep.nice_vertices.end(), VertexId{9}) == 1);
}

TEST_CASE("a doubled colour inside W fails uniqueness and enables the swap") {
  // M = {0-1} in colour 1, M0 = {0-2} in colour 2, colour 1 twice in G[W].
  const auto g = make(7, {{0, 1, 1}, {0, 2, 2}, {3, 4, 1}, {5, 6, 1}});
  const Matching m = make_matching({edge_id(g, 0, 1)});
  const auto rep = audit_state(g, m, make_matching({edge_id(g, 0, 2)}));
  CHECK(rep.t == 1);
  CHECK_FALSE(holds(rep, "t-colour-unique-in-w"));
  const std::string witness = rep.find_check("t-colour-unique-in-w")->witness;
  CHECK(witness.find("3-4") != std::string::npos);
  CHECK(witness.find("5-6") != std::string::npos);
  CHECK(has_rule(rep, "R-mono"));
}

TEST_CASE("all-zero state reduces the order bound") {
  // Two disjoint edges; M = {1-2}, M0 = {0-3} inside W, a = 1.
  const auto g = make(4, {{1, 2, 2}, {0, 3, 1}});
  const Matching m = make_matching({edge_id(g, 1, 2)});
  const auto rep = audit_state(g, m, make_matching({edge_id(g, 0, 3)}));
  CHECK(rep.delta == 2);
  CHECK(rep.a == 1);
  CHECK(rep.r == 0);
  CHECK(rep.s == 0);
  CHECK(rep.t == 0);
  CHECK(holds(rep, "t-lower-bound"));
  CHECK(rep.rhs_rederived == 2 * (2 + 3) * (2 - 1));
  CHECK_FALSE(holds(rep, "mono-class-size"));
  CHECK(rep.find_check("mono-class-size")->conditional);
}

TEST_CASE("stuck audit of K4") {
  const auto g = one_factorization(2);
  const auto audit = audit_stuck(g, 2);
  CHECK(audit.engine.size == 1);
  const auto& rep = audit.report;
  CHECK(rep.delta == 2);
  CHECK(rep.a == 2);
  CHECK(rep.applicable_rules.empty());
  for (const ClaimCheck& c : rep.checks) {
    CAPTURE(c.id);
    if (!c.conditional && !c.diagnostic) CHECK(c.holds);
  }
  const auto j = nlohmann::json::parse(audit_to_json(g, rep));
  CHECK(j["delta"] == 2);
  CHECK(j["checks"].size() == rep.checks.size());
  CHECK(audit_to_table(rep).find("t-colour-unique-in-w") != std::string::npos);
}

TEST_CASE("audit refuses a state that reaches the target") {
  const auto z3 = latin_to_graph(cyclic_square(3));
  try {
    audit_stuck(z3, 3);
    FAIL("expected NotStuck");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotStuck);
  }
  CHECK_THROWS_AS(audit_stuck(z3, 1), Error);
}

TEST_CASE("local checks fail only where a rule applies") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto n = static_cast<std::uint32_t>(4 + seed % 5);
    const auto delta = static_cast<std::uint32_t>(2 + seed % 2);
    if (delta >= n) continue;
    const auto g = greedy_proper_coloring(random_graph_min_degree(n, delta, seed), seed + 7);
    const auto target = min_degree(g);
    SolveResult r = run_engine(g, target);
    if (r.size >= target || r.best.empty()) continue;
    const auto rep = audit_state(g, r.best, pick_m0(g, r.best));
    CAPTURE(seed);
    const bool local_ok = holds(rep, "good-edges-meet-M") && holds(rep, "good-vertex-dichotomy") &&
                          holds(rep, "nice-vertex-dichotomy");
    CHECK((local_ok || !rep.applicable_rules.empty()));
  }
}

TEST_CASE("rational helper") {
  const Rational r = Rational::make(6, -4);
  CHECK(r.num == -3);
  CHECK(r.den == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational::make(4, 2).str() == "2");
}

TEST_CASE("printed and re-derived right-hand sides agree") {
  for (std::int64_t d = 2; d <= 12; ++d) {
    for (std::int64_t r = 0; r < d; ++r) {
      for (std::int64_t s = 0; r + s < d; ++s) {
        for (std::int64_t a = 2; a <= 3 * d; ++a) {
          for (std::int64_t t2 = 0; t2 <= 2 * (d - 1 - r - s); ++t2) {
            CHECK(counting_rhs_printed_x2(d, r, s, a, t2) ==
                  counting_rhs_rederived_x2(d, r, s, a, t2));
          }
        }
      }
    }
  }
}

TEST_CASE("counting certificate for small delta") {
  const auto two = certify_counting_bound(2);
  CHECK(two.holds);
  CHECK(two.tail_ok);
  CHECK(two.worst_n.value() == doctest::Approx(6.0));
  CHECK(two.worst_n.value() < 6.5);
  CHECK(two.margin.num > 0);

  const auto five = certify_counting_bound(5);
  CHECK(five.holds);
  CHECK(five.worst_n.str() == "97/5");
  CHECK(five.worst_n.value() < 20.0);
  CHECK(five.printed_matches_rederived);

  CHECK_THROWS_AS(certify_counting_bound(1), Error);
}

TEST_CASE("certificate range matches single runs") {
  const auto range = certify_range(2, 30, 4);
  REQUIRE(range.size() == 29);
  for (const auto& c : range) {
    const auto single = certify_counting_bound(c.delta);
    CHECK(c.worst_n.str() == single.worst_n.str());
    CHECK(c.holds);
    CHECK(c.tail_ok);
  }
}

}  // namespace
}  // namespace rainbow
