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

#ifndef RAINBOW_AUDITOR_HPP
#define RAINBOW_AUDITOR_HPP

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "rainbow/engine.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// Structural audit of a stuck state: a rainbow matching M of size delta - 1
// together with a monochromatic matching M0 in a colour M does not use.
//
// Vocabulary:
//   W        vertices outside V(M)
//   good     edge with a colour outside colours(M) and an endpoint in W;
//            a matched vertex with >= 7 such edges
//   W'       W plus the partners y_i of good vertices x_i
//   nice     edge with an endpoint in W' whose colour is not held by a
//            non-good pair; a remaining matched vertex with >= 7 such edges
//   t        non-good, non-nice pairs with an M0-coloured edge into W

inline constexpr std::uint32_t kGoodVertexThreshold = 7;
inline constexpr std::uint32_t kDichotomyThreshold = 3;

enum class PairRole { kGood, kNice, kDeltaIncident, kOther };

const char* pair_role_name(PairRole role);

struct MatchedPair {
  EdgeId edge = 0;
  VertexId x = 0;  // the >= 7 endpoint when one exists
  VertexId y = 0;
  Colour colour = 0;
  std::uint32_t good_x = 0, good_y = 0;
  std::uint32_t nice_x = 0, nice_y = 0;
  PairRole role = PairRole::kOther;
  bool oriented = false;
  bool delta_incident = false;
};

struct ClaimCheck {
  std::string id;
  std::string statement;
  bool holds = true;
  // Depends on the minimal-counterexample hypothesis rather than on the
  // local maximality of the supplied state.
  bool conditional = false;
  // Purely informational inequality from the counting argument.
  bool diagnostic = false;
  std::string witness;
};

struct AuditReport {
  std::uint32_t delta = 0;
  std::uint32_t n = 0;
  std::uint32_t min_degree = 0;
  std::uint32_t max_degree = 0;
  Matching m;
  Matching m0;
  Colour m0_colour = 0;
  std::uint32_t a = 0;          // |M0|
  std::uint32_t profile_a = 0;  // largest colour class of G

  // Pairs of M relabelled: good pairs, nice pairs, t pairs, the rest.
  std::vector<MatchedPair> pairs;
  std::vector<VertexId> w;
  std::vector<VertexId> w_prime;
  std::vector<EdgeId> good_edges;
  std::vector<EdgeId> nice_edges;
  std::vector<VertexId> good_vertices;
  std::vector<VertexId> nice_vertices;
  std::uint32_t r = 0;
  std::uint32_t s = 0;
  std::uint32_t t = 0;

  std::int64_t nice_edge_cap = 0;          // (3d - 9 + s) r + 6 (d - 1)
  std::int64_t nice_edge_lower_bound = 0;  // d|W'| - (a-1)s - (a+r)t - 2(a-1)(d-1-r-s-t)
  std::int64_t rhs_printed = 0;
  std::int64_t rhs_rederived = 0;

  std::deque<ClaimCheck> checks;  // stable references while appending
  std::vector<std::string> applicable_rules;
  bool exchange_budget_hit = false;

  bool good_done = false;
  bool nice_done = false;
  bool t_done = false;

  const ClaimCheck* find_check(const std::string& id) const;
};

// Throws kInvalidState when M is empty or not rainbow, or M0 is not a
// monochromatic matching edge-disjoint from M in a colour outside colours(M).
AuditReport compute_good_structure(const EdgeColoredGraph& g, const Matching& m,
                                   const Matching& m0);
AuditReport& compute_nice_structure(const EdgeColoredGraph& g, AuditReport& report);
AuditReport& compute_t(const EdgeColoredGraph& g, AuditReport& report);
AuditReport& check_claims(const EdgeColoredGraph& g, AuditReport& report,
                          std::size_t exchange_depth = kMaxExchangeDepth);

AuditReport audit_state(const EdgeColoredGraph& g, const Matching& m, const Matching& m0,
                        std::size_t exchange_depth = kMaxExchangeDepth);

// Largest colour class not used by M (edge-disjoint from M by properness);
// ties go to the smallest colour label. Empty when every colour is in M.
Matching pick_m0(const EdgeColoredGraph& g, const Matching& m);

struct StuckAudit {
  SolveResult engine;
  AuditReport report;
};

// Runs the engine toward `target`; throws kNotStuck if it gets there.
StuckAudit audit_stuck(const EdgeColoredGraph& g, std::size_t target,
                       std::size_t engine_depth = kDefaultExchangeDepth);

std::string audit_to_json(const EdgeColoredGraph& g, const AuditReport& report);
std::string audit_to_table(const AuditReport& report);

// Right-hand side of the final counting inequality, printed form:
// (3d-10-r) r - (a-2) t + 2(d+3)(d-1) + (a-1)(2d-2-2r-s).
// `t2` is twice t so half-integral lower bounds stay exact; the result is
// twice the right-hand side.
std::int64_t counting_rhs_printed_x2(std::int64_t d, std::int64_t r, std::int64_t s,
                                     std::int64_t a, std::int64_t t2);
// The same bound rebuilt from the nice-edge cap and the nice-edge lower
// bound after substituting d - t >= r + s + 1. Also returns twice the value.
std::int64_t counting_rhs_rederived_x2(std::int64_t d, std::int64_t r, std::int64_t s,
                                       std::int64_t a, std::int64_t t2);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};

struct CertResult {
  std::uint32_t delta = 0;
  std::uint32_t a_cap = 0;
  bool holds = false;
  std::int64_t worst_r = 0, worst_s = 0, worst_a = 0;
  Rational worst_t;
  Rational worst_n;  // max RHS / delta
  Rational bound;    // (9 delta - 5) / 2
  Rational margin;   // bound - worst_n
  bool tail_ok = false;
  bool printed_matches_rederived = true;
  std::uint64_t tuples = 0;
};

// Exhaustive maximisation of the counting inequality over integer r, s, a
// (s >= 1 implies r >= 1, a >= 2, r + s + t <= delta - 1) with t at its
// exact rational lower bound max(0, a - delta + 1 - (r + s)/2).
// Throws kInvalidArgument for delta < 2 or a_cap < 2, kCapUnsafe if the
// right-hand side is not decreasing in a past the cap.
CertResult certify_counting_bound(std::uint32_t delta, std::uint32_t a_cap = 0);

// Certifies every delta in [lo, hi]; deltas run concurrently, results are
// ordered by delta.
std::vector<CertResult> certify_range(std::uint32_t lo, std::uint32_t hi,
                                      unsigned threads = 0);

}  // namespace rainbow

#endif  // RAINBOW_AUDITOR_HPP
