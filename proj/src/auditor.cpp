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

#include "rainbow/auditor.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace rainbow {

const char* pair_role_name(PairRole role) {
  switch (role) {
    case PairRole::kGood: return "good";
    case PairRole::kNice: return "nice";
    case PairRole::kDeltaIncident: return "t";
    case PairRole::kOther: return "other";
  }
  return "other";
}

const ClaimCheck* AuditReport::find_check(const std::string& id) const {
  for (const ClaimCheck& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

namespace {

std::string edge_str(const EdgeColoredGraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  std::ostringstream os;
  os << ed.u << "-" << ed.v << ":" << ed.colour;
  return os.str();
}

int role_rank(PairRole role) { return static_cast<int>(role); }

void sort_pairs(std::vector<MatchedPair>& pairs) {
  std::stable_sort(pairs.begin(), pairs.end(), [](const MatchedPair& a, const MatchedPair& b) {
    return role_rank(a.role) < role_rank(b.role);
  });
}

// Orients x toward the endpoint with more incidences; ties to the lower id.
void orient(MatchedPair& p, std::uint32_t count_u, std::uint32_t count_v, VertexId u,
            VertexId v) {
  if (count_v > count_u) {
    p.x = v;
    p.y = u;
  } else {
    p.x = u;
    p.y = v;
  }
}

ClaimCheck& add_check(AuditReport& rep, std::string id, std::string statement,
                      bool conditional = false, bool diagnostic = false) {
  rep.checks.push_back({std::move(id), std::move(statement), true, conditional, diagnostic, {}});
  return rep.checks.back();
}

void fail(ClaimCheck& c, const std::string& witness) {
  if (c.holds) {
    c.holds = false;
    c.witness = witness;
  }
}

std::vector<char> membership(std::uint32_t n, const std::vector<VertexId>& vs) {
  std::vector<char> in(n, 0);
  for (VertexId v : vs) in[v] = 1;
  return in;
}

}  // namespace

AuditReport compute_good_structure(const EdgeColoredGraph& g, const Matching& m_in,
                                   const Matching& m0_in) {
  Matching m = m_in;
  Matching m0 = m0_in;
  m.normalise();
  m0.normalise();
  if (m.empty()) throw Error(ErrorCode::kInvalidState, "audit needs a nonempty matching M");
  if (!is_rainbow_matching(g, m)) {
    throw Error(ErrorCode::kInvalidState, "M is not a rainbow matching");
  }
  if (!is_matching(g, m0.edges)) {
    throw Error(ErrorCode::kInvalidState, "M0 is not a matching");
  }
  std::vector<char> colour_in_m(g.palette_size(), 0);
  for (EdgeId e : m.edges) colour_in_m[g.edge(e).colour_index] = 1;
  for (EdgeId e : m0.edges) {
    if (g.edge(e).colour_index != g.edge(m0.edges.front()).colour_index) {
      throw Error(ErrorCode::kInvalidState, "M0 is not monochromatic");
    }
    if (colour_in_m[g.edge(e).colour_index]) {
      throw Error(ErrorCode::kInvalidState,
                  "M0 colour " + std::to_string(g.edge(e).colour) + " is used by M");
    }
  }

  AuditReport rep;
  rep.delta = static_cast<std::uint32_t>(m.size() + 1);
  rep.n = g.order();
  rep.min_degree = min_degree(g);
  rep.max_degree = max_degree(g);
  rep.m = m;
  rep.m0 = m0;
  rep.m0_colour = m0.empty() ? 0 : g.edge(m0.edges.front()).colour;
  rep.a = static_cast<std::uint32_t>(m0.size());
  rep.profile_a = color_profile(g).a;

  std::vector<char> matched(g.order(), 0);
  for (EdgeId e : m.edges) matched[g.edge(e).u] = matched[g.edge(e).v] = 1;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!matched[v]) rep.w.push_back(v);
  }

  std::vector<std::uint32_t> good_count(g.order(), 0);
  ClaimCheck& inside_w =
      add_check(rep, "good-edges-meet-M", "every good edge is incident with V(M)");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (colour_in_m[ed.colour_index]) continue;
    if (matched[ed.u] && matched[ed.v]) continue;
    rep.good_edges.push_back(e);
    ++good_count[ed.u];
    ++good_count[ed.v];
    if (!matched[ed.u] && !matched[ed.v]) {
      fail(inside_w, "good edge " + edge_str(g, e) + " in G[W]");
    }
  }

  ClaimCheck& m0_meets = add_check(rep, "m0-meets-M", "every edge of M0 meets V(M)");
  for (EdgeId e : m0.edges) {
    if (!matched[g.edge(e).u] && !matched[g.edge(e).v]) {
      fail(m0_meets, "M0 edge " + edge_str(g, e) + " lies in G[W]");
    }
  }

  ClaimCheck& good_dichotomy = add_check(
      rep, "good-vertex-dichotomy",
      "a matched vertex with >= 3 good edges has a partner with no good edge");
  for (EdgeId e : m.edges) {
    const Edge& ed = g.edge(e);
    MatchedPair p;
    p.edge = e;
    p.colour = ed.colour;
    const std::uint32_t gu = good_count[ed.u];
    const std::uint32_t gv = good_count[ed.v];
    orient(p, gu, gv, ed.u, ed.v);
    p.good_x = good_count[p.x];
    p.good_y = good_count[p.y];
    if (p.good_x >= kGoodVertexThreshold) {
      p.role = PairRole::kGood;
      p.oriented = true;
    }
    if ((gu >= kDichotomyThreshold && gv >= 1) || (gv >= kDichotomyThreshold && gu >= 1)) {
      std::ostringstream os;
      os << "pair " << edge_str(g, e) << " has good degrees " << gu << " and " << gv;
      fail(good_dichotomy, os.str());
    }
    for (VertexId z : {ed.u, ed.v}) {
      if (good_count[z] >= kGoodVertexThreshold) rep.good_vertices.push_back(z);
    }
    rep.pairs.push_back(p);
  }
  std::sort(rep.good_vertices.begin(), rep.good_vertices.end());
  sort_pairs(rep.pairs);

  rep.w_prime = rep.w;
  for (const MatchedPair& p : rep.pairs) {
    if (p.role == PairRole::kGood) {
      ++rep.r;
      rep.w_prime.push_back(p.y);
    }
  }
  std::sort(rep.w_prime.begin(), rep.w_prime.end());
  rep.good_done = true;
  return rep;
}

AuditReport& compute_nice_structure(const EdgeColoredGraph& g, AuditReport& rep) {
  if (!rep.good_done) throw Error(ErrorCode::kInvalidState, "good structure not computed");
  const std::vector<char> in_wp = membership(g.order(), rep.w_prime);
  std::vector<char> blocked(g.palette_size(), 0);
  for (const MatchedPair& p : rep.pairs) {
    if (p.role != PairRole::kGood) blocked[g.edge(p.edge).colour_index] = 1;
  }

  rep.nice_edges.clear();
  std::vector<std::uint32_t> nice_count(g.order(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (blocked[ed.colour_index]) continue;
    if (!in_wp[ed.u] && !in_wp[ed.v]) continue;
    rep.nice_edges.push_back(e);
    ++nice_count[ed.u];
    ++nice_count[ed.v];
  }

  ClaimCheck& subset = add_check(rep, "good-subset-nice", "every good edge is nice");
  for (EdgeId e : rep.good_edges) {
    if (!std::binary_search(rep.nice_edges.begin(), rep.nice_edges.end(), e)) {
      fail(subset, "good edge " + edge_str(g, e) + " is not nice");
    }
  }

  ClaimCheck& nice_dichotomy = add_check(
      rep, "nice-vertex-dichotomy",
      "in a non-good pair, an endpoint with >= 3 nice edges has a partner with no nice edge");
  rep.nice_vertices.clear();
  rep.s = 0;
  for (MatchedPair& p : rep.pairs) {
    p.nice_x = nice_count[p.x];
    p.nice_y = nice_count[p.y];
    if (p.role == PairRole::kGood) continue;
    const Edge& ed = g.edge(p.edge);
    const std::uint32_t nu = nice_count[ed.u];
    const std::uint32_t nv = nice_count[ed.v];
    if ((nu >= kDichotomyThreshold && nv >= 1) || (nv >= kDichotomyThreshold && nu >= 1)) {
      std::ostringstream os;
      os << "pair " << edge_str(g, p.edge) << " has nice degrees " << nu << " and " << nv;
      fail(nice_dichotomy, os.str());
    }
    for (VertexId z : {ed.u, ed.v}) {
      if (nice_count[z] >= kGoodVertexThreshold) rep.nice_vertices.push_back(z);
    }
    if (std::max(nu, nv) >= kGoodVertexThreshold) {
      orient(p, nu, nv, ed.u, ed.v);
      p.nice_x = nice_count[p.x];
      p.nice_y = nice_count[p.y];
      p.role = PairRole::kNice;
      p.oriented = true;
      ++rep.s;
    }
  }
  {
    std::vector<std::uint32_t> good_count(g.order(), 0);
    for (EdgeId e : rep.good_edges) {
      ++good_count[g.edge(e).u];
      ++good_count[g.edge(e).v];
    }
    for (MatchedPair& p : rep.pairs) {
      p.good_x = good_count[p.x];
      p.good_y = good_count[p.y];
    }
  }
  std::sort(rep.nice_vertices.begin(), rep.nice_vertices.end());
  sort_pairs(rep.pairs);
  rep.nice_done = true;
  return rep;
}

AuditReport& compute_t(const EdgeColoredGraph& g, AuditReport& rep) {
  if (!rep.nice_done) throw Error(ErrorCode::kInvalidState, "nice structure not computed");
  const std::vector<char> in_w = membership(g.order(), rep.w);
  rep.t = 0;
  for (MatchedPair& p : rep.pairs) {
    p.delta_incident = false;
    if (p.role == PairRole::kGood || p.role == PairRole::kNice) continue;
    p.role = PairRole::kOther;
    if (rep.m0.empty()) continue;
    const ColourIndex dc = g.edge(rep.m0.edges.front()).colour_index;
    for (VertexId z : {p.x, p.y}) {
      for (EdgeId e : g.incident(z)) {
        if (g.edge(e).colour_index == dc && in_w[g.edge(e).other(z)]) p.delta_incident = true;
      }
    }
    if (p.delta_incident) {
      p.role = PairRole::kDeltaIncident;
      ++rep.t;
    }
  }
  sort_pairs(rep.pairs);

  const std::int64_t d = rep.delta, a = rep.a, r = rep.r, s = rep.s, t = rep.t;
  ClaimCheck& lower = add_check(rep, "t-lower-bound", "t >= a - delta + 1 - (r + s)/2");
  if (2 * t < 2 * a - 2 * d + 2 - r - s) {
    std::ostringstream os;
    os << "t=" << t << " a=" << a << " delta=" << d << " r=" << r << " s=" << s;
    fail(lower, os.str());
  }
  ClaimCheck& upper = add_check(rep, "t-upper-bound", "r + s + t <= delta - 1");
  if (r + s + t > d - 1) {
    std::ostringstream os;
    os << "r+s+t=" << (r + s + t) << " > " << (d - 1);
    fail(upper, os.str());
  }
  rep.t_done = true;
  return rep;
}

std::int64_t counting_rhs_printed_x2(std::int64_t d, std::int64_t r, std::int64_t s,
                                     std::int64_t a, std::int64_t t2) {
  return 2 * ((3 * d - 10 - r) * r + 2 * (d + 3) * (d - 1) + (a - 1) * (2 * d - 2 - 2 * r - s)) -
         (a - 2) * t2;
}

std::int64_t counting_rhs_rederived_x2(std::int64_t d, std::int64_t r, std::int64_t s,
                                       std::int64_t a, std::int64_t t2) {
  // Nice edges: at most 3(d-1) per good x_i, r + 6 per nice x_i, 6 per
  // remaining pair.
  const std::int64_t cap = 3 * (d - 1) * r + (r + 6) * s + 6 * (d - 1 - r - s);
  // At least d n - 2d(d-1) - (a-1)(2d-2-2r-s) + (a-2)t + (d-t) r nice edges,
  // and d - t >= r + s + 1.
  return 2 * (cap + 2 * d * (d - 1) + (a - 1) * (2 * d - 2 - 2 * r - s) - (r + s + 1) * r) -
         (a - 2) * t2;
}

AuditReport& check_claims(const EdgeColoredGraph& g, AuditReport& rep,
                          std::size_t exchange_depth) {
  if (!rep.t_done) throw Error(ErrorCode::kInvalidState, "t not computed");
  const std::int64_t d = rep.delta, n = rep.n, a = rep.a, r = rep.r, s = rep.s, t = rep.t;
  const std::vector<char> in_w = membership(g.order(), rep.w);
  const std::vector<char> in_wp = membership(g.order(), rep.w_prime);

  {
    ClaimCheck& c = add_check(rep, "max-degree-bound", "max degree <= 3(delta - 1)", true);
    if (rep.max_degree > 3 * (d - 1)) {
      fail(c, "max degree " + std::to_string(rep.max_degree) + " > " + std::to_string(3 * (d - 1)));
    }
  }
  {
    ClaimCheck& c = add_check(rep, "mono-class-size", "a >= 2", true);
    if (a < 2) fail(c, "a=" + std::to_string(a));
  }

  // Colours of good pairs (and of good or nice pairs) never appear inside
  // G[W'].
  std::vector<char> good_colour(g.palette_size(), 0);
  std::vector<char> good_or_nice_colour(g.palette_size(), 0);
  for (const MatchedPair& p : rep.pairs) {
    const ColourIndex ci = g.edge(p.edge).colour_index;
    if (p.role == PairRole::kGood) good_colour[ci] = good_or_nice_colour[ci] = 1;
    if (p.role == PairRole::kNice) good_or_nice_colour[ci] = 1;
  }
  ClaimCheck& good_colours = add_check(rep, "good-colours-outside-w-prime",
                                       "no edge of G[W'] has a colour in {1..r}");
  ClaimCheck& nice_colours = add_check(rep, "nice-colours-outside-w-prime",
                                       "no edge of G[W'] has a colour in {1..r+s}");
  ClaimCheck& crossing =
      add_check(rep, "nice-edges-cross", "every nice edge joins W' to V \\ W'");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!in_wp[ed.u] || !in_wp[ed.v]) continue;
    if (good_colour[ed.colour_index]) fail(good_colours, "edge " + edge_str(g, e));
    if (good_or_nice_colour[ed.colour_index]) fail(nice_colours, "edge " + edge_str(g, e));
  }
  for (EdgeId e : rep.nice_edges) {
    if (in_wp[g.edge(e).u] && in_wp[g.edge(e).v]) fail(crossing, "nice edge " + edge_str(g, e));
  }

  rep.nice_edge_cap = (3 * d - 9 + s) * r + 6 * (d - 1);
  {
    ClaimCheck& c = add_check(rep, "nice-edge-cap",
                              "at most (3 delta - 9 + s) r + 6(delta - 1) nice edges", true);
    const auto count = static_cast<std::int64_t>(rep.nice_edges.size());
    if (count > rep.nice_edge_cap) {
      std::ostringstream os;
      os << count << " nice edges > " << rep.nice_edge_cap << "; per pair (x nice, y nice):";
      for (const MatchedPair& p : rep.pairs) {
        os << " " << pair_role_name(p.role) << "(" << p.nice_x << "," << p.nice_y << ")";
      }
      fail(c, os.str());
    }
  }

  {
    ClaimCheck& c = add_check(rep, "t-colour-unique-in-w",
                              "for each t-pair colour i, at most one edge of colour i in G[W]");
    for (const MatchedPair& p : rep.pairs) {
      if (p.role != PairRole::kDeltaIncident) continue;
      const ColourIndex ci = g.edge(p.edge).colour_index;
      std::vector<EdgeId> inside;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.colour_index == ci && in_w[ed.u] && in_w[ed.v]) inside.push_back(e);
      }
      if (inside.size() > 1) {
        fail(c, "colour " + std::to_string(p.colour) + ": " + edge_str(g, inside[0]) + " and " +
                    edge_str(g, inside[1]));
      }
    }
  }

  const std::int64_t wp = static_cast<std::int64_t>(rep.w_prime.size());
  rep.nice_edge_lower_bound =
      d * wp - (a - 1) * s - (a + r) * t - 2 * (a - 1) * (d - 1 - r - s - t);
  {
    ClaimCheck& c = add_check(rep, "nice-lower-bound",
                              "nice edges >= d|W'| - (a-1)s - (a+r)t - 2(a-1)(d-1-r-s-t)", true);
    const auto count = static_cast<std::int64_t>(rep.nice_edges.size());
    if (count < rep.nice_edge_lower_bound) {
      fail(c, std::to_string(count) + " < " + std::to_string(rep.nice_edge_lower_bound));
    }
  }

  rep.rhs_printed = counting_rhs_printed_x2(d, r, s, a, 2 * t) / 2;
  rep.rhs_rederived = counting_rhs_rederived_x2(d, r, s, a, 2 * t) / 2;
  {
    ClaimCheck& c = add_check(rep, "rhs-rederivation",
                              "printed right-hand side equals the re-derived one", false, true);
    if (rep.rhs_printed != rep.rhs_rederived) {
      fail(c, std::to_string(rep.rhs_printed) + " vs " + std::to_string(rep.rhs_rederived));
    }
  }
  {
    ClaimCheck& c = add_check(
        rep, "order-bound",
        "delta n <= (3d-10-r) r - (a-2) t + 2(d+3)(d-1) + (a-1)(2d-2-2r-s)", true);
    if (d * n > rep.rhs_rederived) {
      fail(c, std::to_string(d * n) + " > " + std::to_string(rep.rhs_rederived));
    }
  }
  {
    ClaimCheck& c = add_check(rep, "r-s-bound", "5r + 3s < 2(delta + 1)", false, true);
    if (5 * r + 3 * s >= 2 * (d + 1)) {
      fail(c, "5r+3s=" + std::to_string(5 * r + 3 * s));
    }
  }

  rep.applicable_rules.clear();
  if (apply_direct(g, rep.m)) rep.applicable_rules.push_back("R-direct");
  if (apply_mono(g, rep.m)) rep.applicable_rules.push_back("R-mono");
  EngineOptions opts;
  opts.allow_deep_exchange = true;
  const std::size_t depth = std::min(exchange_depth, kMaxExchangeDepth);
  for (std::size_t k = 1; k <= depth; ++k) {
    try {
      if (auto step = apply_exchange(g, rep.m, k, opts)) {
        rep.applicable_rules.push_back(step->rule);
        break;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExceeded) throw;
      rep.exchange_budget_hit = true;
      break;
    }
  }
  return rep;
}

AuditReport audit_state(const EdgeColoredGraph& g, const Matching& m, const Matching& m0,
                        std::size_t exchange_depth) {
  AuditReport rep = compute_good_structure(g, m, m0);
  compute_nice_structure(g, rep);
  compute_t(g, rep);
  check_claims(g, rep, exchange_depth);
  return rep;
}

Matching pick_m0(const EdgeColoredGraph& g, const Matching& m) {
  if (g.palette_size() == 0) return {};
  std::vector<char> used(g.palette_size(), 0);
  for (EdgeId e : m.edges) used[g.edge(e).colour_index] = 1;
  std::vector<std::vector<EdgeId>> classes(g.palette_size());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!used[g.edge(e).colour_index]) classes[g.edge(e).colour_index].push_back(e);
  }
  std::size_t best = 0;
  for (std::size_t c = 1; c < classes.size(); ++c) {
    if (classes[c].size() > classes[best].size()) best = c;
  }
  return make_matching(classes[best]);
}

StuckAudit audit_stuck(const EdgeColoredGraph& g, std::size_t target, std::size_t engine_depth) {
  if (target < 2) throw Error(ErrorCode::kInvalidArgument, "audit target must be >= 2");
  StuckAudit out;
  out.engine = run_engine(g, target, engine_depth);
  if (out.engine.size >= target) {
    throw Error(ErrorCode::kNotStuck, "engine reached size " + std::to_string(out.engine.size) +
                                          " >= target " + std::to_string(target));
  }
  if (out.engine.best.empty()) {
    throw Error(ErrorCode::kInvalidState, "engine found no edge at all; nothing to audit");
  }
  out.report = audit_state(g, out.engine.best, pick_m0(g, out.engine.best));
  return out;
}

std::string audit_to_json(const EdgeColoredGraph& g, const AuditReport& rep) {
  using nlohmann::json;
  auto edges = [&](const std::vector<EdgeId>& ids) {
    json arr = json::array();
    for (EdgeId e : ids) arr.push_back({g.edge(e).u, g.edge(e).v, g.edge(e).colour});
    return arr;
  };
  json j;
  j["delta"] = rep.delta;
  j["n"] = rep.n;
  j["min_degree"] = rep.min_degree;
  j["max_degree"] = rep.max_degree;
  j["M"] = edges(rep.m.edges);
  j["M0"] = edges(rep.m0.edges);
  j["m0_colour"] = rep.m0_colour;
  j["a"] = rep.a;
  j["profile_a"] = rep.profile_a;
  j["W"] = rep.w;
  j["W_prime"] = rep.w_prime;
  j["good_edges"] = edges(rep.good_edges);
  j["nice_edges"] = edges(rep.nice_edges);
  j["good_vertices"] = rep.good_vertices;
  j["nice_vertices"] = rep.nice_vertices;
  j["r"] = rep.r;
  j["s"] = rep.s;
  j["t"] = rep.t;
  json pairs = json::array();
  for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
    const MatchedPair& p = rep.pairs[i];
    pairs.push_back({{"index", i + 1},
                     {"x", p.x},
                     {"y", p.y},
                     {"colour", p.colour},
                     {"role", pair_role_name(p.role)},
                     {"oriented", p.oriented},
                     {"good_x", p.good_x},
                     {"good_y", p.good_y},
                     {"nice_x", p.nice_x},
                     {"nice_y", p.nice_y},
                     {"delta_incident", p.delta_incident}});
  }
  j["pairs"] = pairs;
  j["nice_edge_cap"] = rep.nice_edge_cap;
  j["nice_edge_lower_bound"] = rep.nice_edge_lower_bound;
  j["rhs_printed"] = rep.rhs_printed;
  j["rhs_rederived"] = rep.rhs_rederived;
  json checks = json::array();
  for (const ClaimCheck& c : rep.checks) {
    json cj{{"id", c.id},
            {"statement", c.statement},
            {"holds", c.holds},
            {"conditional", c.conditional},
            {"diagnostic", c.diagnostic}};
    if (!c.holds) cj["witness"] = c.witness;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["applicable_rules"] = rep.applicable_rules;
  j["exchange_budget_hit"] = rep.exchange_budget_hit;
  return j.dump(2);
}

std::string audit_to_table(const AuditReport& rep) {
  std::ostringstream os;
  os << "delta=" << rep.delta << " n=" << rep.n << " |W|=" << rep.w.size()
     << " |W'|=" << rep.w_prime.size() << " a=" << rep.a << " r=" << rep.r << " s=" << rep.s
     << " t=" << rep.t << "\n";
  os << std::left << std::setw(20) << "check" << std::setw(8) << "result"
     << "statement\n";
  for (const ClaimCheck& c : rep.checks) {
    std::string tag = c.holds ? "ok" : "FAILED";
    if (c.conditional) tag += "*";
    if (c.diagnostic) tag += "~";
    os << std::left << std::setw(20) << c.id << std::setw(8) << tag << c.statement << "\n";
    if (!c.holds) os << std::string(28, ' ') << "witness: " << c.witness << "\n";
  }
  os << "(* conditional on the minimal-counterexample hypothesis, ~ diagnostic)\n";
  os << "applicable rules:";
  if (rep.applicable_rules.empty()) os << " none";
  for (const std::string& r : rep.applicable_rules) os << " " << r;
  os << "\n";
  return os.str();
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

CertResult certify_counting_bound(std::uint32_t delta, std::uint32_t a_cap) {
  if (delta < 2) throw Error(ErrorCode::kInvalidArgument, "certification needs delta >= 2");
  if (a_cap == 0) a_cap = 6 * delta;
  if (a_cap < 2) throw Error(ErrorCode::kInvalidArgument, "a_cap must be >= 2");

  const std::int64_t d = delta;
  CertResult res;
  res.delta = delta;
  res.a_cap = a_cap;
  res.bound = Rational::make(9 * d - 5, 2);
  res.tail_ok = true;

  std::int64_t worst_x2 = 0;
  bool any = false;
  for (std::int64_t r = 0; r <= d - 1; ++r) {
    for (std::int64_t s = 0; r + s <= d - 1; ++s) {
      if (s >= 1 && r == 0) continue;
      // Past the cap t = a - d + 1 - (r+s)/2 > 0 and the right-hand side is
      // a concave quadratic in a, so one decreasing step certifies the tail.
      const std::int64_t cap = a_cap;
      const std::int64_t t2_cap = 2 * cap - 2 * d + 2 - r - s;
      const std::int64_t t2_next = t2_cap + 2;
      if (t2_cap <= 0 || counting_rhs_rederived_x2(d, r, s, cap + 1, t2_next) >=
                             counting_rhs_rederived_x2(d, r, s, cap, t2_cap)) {
        res.tail_ok = false;
      }
      for (std::int64_t a = 2; a <= cap; ++a) {
        const std::int64_t t2 = std::max<std::int64_t>(0, 2 * a - 2 * d + 2 - r - s);
        if (2 * (r + s) + t2 > 2 * (d - 1)) break;  // t only grows with a
        ++res.tuples;
        const std::int64_t rhs = counting_rhs_rederived_x2(d, r, s, a, t2);
        if (rhs != counting_rhs_printed_x2(d, r, s, a, t2)) res.printed_matches_rederived = false;
        if (!any || rhs > worst_x2) {
          any = true;
          worst_x2 = rhs;
          res.worst_r = r;
          res.worst_s = s;
          res.worst_a = a;
          res.worst_t = Rational::make(t2, 2);
        }
      }
    }
  }
  if (!res.tail_ok) {
    throw Error(ErrorCode::kCapUnsafe, "right-hand side not decreasing past a_cap=" +
                                           std::to_string(a_cap) + " for delta=" +
                                           std::to_string(delta));
  }
  res.worst_n = any ? Rational::make(worst_x2, 2 * d) : Rational::make(0, 1);
  res.margin = Rational::make(res.bound.num * res.worst_n.den - res.worst_n.num * res.bound.den,
                              res.bound.den * res.worst_n.den);
  res.holds = any && res.margin.num > 0;
  return res;
}

std::vector<CertResult> certify_range(std::uint32_t lo, std::uint32_t hi, unsigned threads) {
  std::vector<CertResult> out;
  if (lo > hi) return out;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t count = hi - lo + 1;
  out.resize(count);
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> workers;
  std::exception_ptr first_error;
  std::mutex error_mu;
  for (unsigned w = 0; w < std::min<std::size_t>(threads, count); ++w) {
    workers.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          out[i] = certify_counting_bound(static_cast<std::uint32_t>(lo + i));
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!first_error) first_error = std::current_exception();
        }
      }
    }));
  }
  for (auto& f : workers) f.get();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace rainbow
