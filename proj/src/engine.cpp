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

#include "rainbow/engine.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace rainbow {
namespace {

struct MatchState {
  std::vector<char> vertex_matched;
  std::vector<char> colour_used;
};

MatchState state_of(const EdgeColoredGraph& g, const Matching& m) {
  MatchState s{std::vector<char>(g.order(), 0), std::vector<char>(g.palette_size(), 0)};
  for (EdgeId e : m.edges) {
    const Edge& ed = g.edge(e);
    s.vertex_matched[ed.u] = s.vertex_matched[ed.v] = 1;
    s.colour_used[ed.colour_index] = 1;
  }
  return s;
}

RuleApplication make_application(std::string rule, const Matching& before,
                                 std::vector<EdgeId> removed, std::vector<EdgeId> added) {
  std::sort(removed.begin(), removed.end());
  std::sort(added.begin(), added.end());
  Matching next;
  for (EdgeId e : before.edges) {
    if (!std::binary_search(removed.begin(), removed.end(), e)) next.edges.push_back(e);
  }
  next.edges.insert(next.edges.end(), added.begin(), added.end());
  next.normalise();
  return {std::move(rule), std::move(removed), std::move(added), std::move(next)};
}

// Finds `needed` pairwise compatible edges among `candidates` (id order).
class ExchangeSearch {
 public:
  ExchangeSearch(const EdgeColoredGraph& g, std::uint64_t cap, std::uint64_t& spent)
      : g_(g), cap_(cap), spent_(spent), vertex_used_(g.order(), 0),
        colour_used_(g.palette_size(), 0) {}

  bool find(const std::vector<EdgeId>& candidates, std::size_t needed,
            std::vector<EdgeId>& chosen) {
    candidates_ = &candidates;
    needed_ = needed;
    chosen.clear();
    chosen_ = &chosen;
    return recurse(0);
  }

 private:
  bool recurse(std::size_t pos) {
    if (chosen_->size() == needed_) return true;
    const auto& cand = *candidates_;
    for (std::size_t i = pos; i < cand.size(); ++i) {
      if (cand.size() - i < needed_ - chosen_->size()) return false;
      if (++spent_ > cap_) {
        throw Error(ErrorCode::kBudgetExceeded, "exchange candidate cap reached");
      }
      const Edge& ed = g_.edge(cand[i]);
      if (vertex_used_[ed.u] || vertex_used_[ed.v] || colour_used_[ed.colour_index]) continue;
      vertex_used_[ed.u] = vertex_used_[ed.v] = 1;
      colour_used_[ed.colour_index] = 1;
      chosen_->push_back(cand[i]);
      if (recurse(i + 1)) return true;
      chosen_->pop_back();
      vertex_used_[ed.u] = vertex_used_[ed.v] = 0;
      colour_used_[ed.colour_index] = 0;
    }
    return false;
  }

  const EdgeColoredGraph& g_;
  std::uint64_t cap_;
  std::uint64_t& spent_;
  std::vector<char> vertex_used_;
  std::vector<char> colour_used_;
  const std::vector<EdgeId>* candidates_ = nullptr;
  std::vector<EdgeId>* chosen_ = nullptr;
  std::size_t needed_ = 0;
};

// Exchanges removing exactly `d` matched edges.
std::optional<RuleApplication> exchange_exact(const EdgeColoredGraph& g, const Matching& m,
                                              std::size_t d, const EngineOptions& opts,
                                              std::uint64_t& spent) {
  if (d == 0 || d > m.size()) return std::nullopt;
  const MatchState base = state_of(g, m);
  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;

  std::vector<EdgeId> candidates;
  std::vector<EdgeId> chosen;
  ExchangeSearch search(g, opts.exchange_candidate_cap, spent);
  while (true) {
    // Usable vertices: unmatched, or freed by removing the picked edges.
    // Usable colours: those not held by the edges that stay.
    std::vector<char> usable_vertex(g.order(), 0);
    std::vector<char> blocked_colour = base.colour_used;
    for (VertexId v = 0; v < g.order(); ++v) usable_vertex[v] = !base.vertex_matched[v];
    for (std::size_t idx : pick) {
      const Edge& ed = g.edge(m.edges[idx]);
      usable_vertex[ed.u] = usable_vertex[ed.v] = 1;
      blocked_colour[ed.colour_index] = 0;
    }
    candidates.clear();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      if (usable_vertex[ed.u] && usable_vertex[ed.v] && !blocked_colour[ed.colour_index]) {
        candidates.push_back(e);
      }
    }
    if (candidates.size() >= d + 1 && search.find(candidates, d + 1, chosen)) {
      std::vector<EdgeId> removed;
      for (std::size_t idx : pick) removed.push_back(m.edges[idx]);
      return make_application("R-exchange-" + std::to_string(d), m, removed, chosen);
    }

    // next combination in lexicographic order
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == m.size() - d + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::nullopt;
}

SolveResult run_engine_impl(const EdgeColoredGraph& g, std::size_t target, std::size_t depth,
                            const EngineOptions& opts, std::size_t level);

std::optional<RuleApplication> vertex_reduce_impl(const EdgeColoredGraph& g, std::size_t target,
                                                  const EngineOptions& opts,
                                                  std::size_t level) {
  if (target == 0) return std::nullopt;
  if (level > opts.recursion_limit) {
    throw Error(ErrorCode::kRecursionBudget,
                "vertex reduction nested deeper than " + std::to_string(opts.recursion_limit));
  }
  const std::size_t threshold = 3 * (target - 1);
  std::optional<VertexId> pivot;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) > threshold && (!pivot || g.degree(v) > g.degree(*pivot))) pivot = v;
  }
  if (!pivot) return std::nullopt;

  std::vector<EdgeId> kept;
  const EdgeColoredGraph sub = without_vertex(g, *pivot, &kept);
  Matching inner;
  if (target > 1) {
    SolveResult r = run_engine_impl(sub, target - 1, std::min(opts.max_exchange_depth,
                                                             kDefaultExchangeDepth),
                                    opts, level + 1);
    if (r.size >= target - 1) {
      inner = r.best;
    } else {
      std::optional<Matching> exact;
      try {
        exact = rainbow_matching_at_least(sub, target - 1, {opts.fallback_node_budget});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kBudgetExceeded) throw;
      }
      if (!exact) return std::nullopt;
      inner = *exact;
    }
    if (inner.size() > target - 1) inner.edges.resize(target - 1);
  }

  Matching lifted;
  for (EdgeId e : inner.edges) lifted.edges.push_back(kept[e]);
  lifted.normalise();
  const MatchState st = state_of(g, lifted);
  for (EdgeId e : g.incident(*pivot)) {
    const Edge& ed = g.edge(e);
    if (st.vertex_matched[ed.other(*pivot)] || st.colour_used[ed.colour_index]) continue;
    std::vector<EdgeId> added = lifted.edges;
    added.push_back(e);
    return make_application("R-vertex-reduce", Matching{}, {}, added);
  }
  return std::nullopt;
}

SolveResult run_engine_impl(const EdgeColoredGraph& g, std::size_t target, std::size_t depth,
                            const EngineOptions& opts, std::size_t level) {
  if (depth > kMaxExchangeDepth || (depth > kDefaultExchangeDepth && !opts.allow_deep_exchange)) {
    throw Error(ErrorCode::kInvalidArgument,
                "exchange depth " + std::to_string(depth) + " exceeds the permitted maximum");
  }
  SolveResult res;
  Matching m = target == 0 ? Matching{} : greedy_rainbow(g);
  res.initial = m;

  while (m.size() < target) {
    std::optional<RuleApplication> step = apply_direct(g, m);
    if (!step) step = apply_mono(g, m);
    for (std::size_t d = 1; !step && d <= depth; ++d) {
      std::uint64_t spent = 0;
      try {
        step = exchange_exact(g, m, d, opts, spent);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kBudgetExceeded) throw;
        res.budget_hit = true;
      }
    }
    if (!step) {
      try {
        step = vertex_reduce_impl(g, m.size() + 1, opts, level);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kRecursionBudget) throw;
        res.budget_hit = true;
      }
      if (step) {
        // Express the rebuilt matching as a diff against the current one.
        std::vector<EdgeId> removed;
        std::vector<EdgeId> added;
        for (EdgeId e : m.edges) {
          if (!step->result.contains(e)) removed.push_back(e);
        }
        for (EdgeId e : step->result.edges) {
          if (!m.contains(e)) added.push_back(e);
        }
        step = make_application(step->rule, m, removed, added);
      }
    }
    if (!step) break;
    m = step->result;
    res.trace.push_back({step->rule, step->removed, step->added, m.size(), 0});
  }
  res.best = m;
  res.size = m.size();
  res.optimal = false;
  return res;
}

}  // namespace

Matching greedy_rainbow(const EdgeColoredGraph& g) {
  std::vector<char> vertex_used(g.order(), 0);
  std::vector<char> colour_used(g.palette_size(), 0);
  Matching m;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (vertex_used[ed.u] || vertex_used[ed.v] || colour_used[ed.colour_index]) continue;
    vertex_used[ed.u] = vertex_used[ed.v] = 1;
    colour_used[ed.colour_index] = 1;
    m.edges.push_back(e);
  }
  return m;
}

std::optional<RuleApplication> apply_direct(const EdgeColoredGraph& g, const Matching& m) {
  const MatchState st = state_of(g, m);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (st.vertex_matched[ed.u] || st.vertex_matched[ed.v] || st.colour_used[ed.colour_index]) {
      continue;
    }
    return make_application("R-direct", m, {}, {e});
  }
  return std::nullopt;
}

std::optional<RuleApplication> apply_exchange(const EdgeColoredGraph& g, const Matching& m,
                                              std::size_t depth, const EngineOptions& opts) {
  if (depth == 0) throw Error(ErrorCode::kInvalidArgument, "exchange depth must be >= 1");
  if (depth > kMaxExchangeDepth || (depth > kDefaultExchangeDepth && !opts.allow_deep_exchange)) {
    throw Error(ErrorCode::kInvalidArgument,
                "exchange depth " + std::to_string(depth) + " exceeds the permitted maximum");
  }
  std::uint64_t spent = 0;
  for (std::size_t d = 1; d <= depth; ++d) {
    if (auto step = exchange_exact(g, m, d, opts, spent)) return step;
  }
  return std::nullopt;
}

std::optional<RuleApplication> apply_mono(const EdgeColoredGraph& g, const Matching& m) {
  const MatchState st = state_of(g, m);
  for (EdgeId matched : m.edges) {
    const Edge& xy = g.edge(matched);
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
      const Edge& uv = g.edge(f);
      if (uv.colour_index != xy.colour_index || f == matched) continue;
      if (st.vertex_matched[uv.u] || st.vertex_matched[uv.v]) continue;
      for (VertexId z : {xy.u, xy.v}) {
        for (EdgeId h : g.incident(z)) {
          const Edge& zw = g.edge(h);
          const VertexId w = zw.other(z);
          if (st.vertex_matched[w] || uv.touches(w) || st.colour_used[zw.colour_index]) continue;
          return make_application("R-mono", m, {matched}, {f, h});
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<RuleApplication> apply_vertex_reduce(const EdgeColoredGraph& g, std::size_t target,
                                                   const EngineOptions& opts) {
  if (target == 0) throw Error(ErrorCode::kInvalidArgument, "vertex reduction needs target >= 1");
  return vertex_reduce_impl(g, target, opts, 0);
}

std::optional<Matching> rule_direct(const EdgeColoredGraph& g, const Matching& m) {
  if (auto a = apply_direct(g, m)) return a->result;
  return std::nullopt;
}

std::optional<Matching> rule_exchange(const EdgeColoredGraph& g, const Matching& m,
                                      std::size_t depth, const EngineOptions& opts) {
  if (auto a = apply_exchange(g, m, depth, opts)) return a->result;
  return std::nullopt;
}

std::optional<Matching> rule_mono(const EdgeColoredGraph& g, const Matching& m) {
  if (auto a = apply_mono(g, m)) return a->result;
  return std::nullopt;
}

std::optional<Matching> rule_vertex_reduce(const EdgeColoredGraph& g, std::size_t target,
                                           const EngineOptions& opts) {
  if (auto a = apply_vertex_reduce(g, target, opts)) return a->result;
  return std::nullopt;
}

SolveResult run_engine(const EdgeColoredGraph& g, std::size_t target,
                       std::size_t max_exchange_depth, const EngineOptions& opts) {
  EngineOptions local = opts;
  local.max_exchange_depth = max_exchange_depth;
  return run_engine_impl(g, target, max_exchange_depth, local, 0);
}

Matching replay_trace(const SolveResult& result) {
  Matching m = result.initial;
  for (const TraceEvent& ev : result.trace) {
    std::vector<EdgeId> next;
    for (EdgeId e : m.edges) {
      if (std::find(ev.removed.begin(), ev.removed.end(), e) == ev.removed.end()) {
        next.push_back(e);
      }
    }
    next.insert(next.end(), ev.added.begin(), ev.added.end());
    m = make_matching(std::move(next));
  }
  return m;
}

std::string trace_to_json_lines(const EdgeColoredGraph& g, const std::vector<TraceEvent>& trace) {
  auto edges_json = [&](const std::vector<EdgeId>& ids) {
    nlohmann::json arr = nlohmann::json::array();
    for (EdgeId e : ids) arr.push_back({g.edge(e).u, g.edge(e).v, g.edge(e).colour});
    return arr;
  };
  std::ostringstream os;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    nlohmann::json line;
    line["step"] = i;
    line["rule"] = trace[i].rule;
    line["removed"] = edges_json(trace[i].removed);
    line["added"] = edges_json(trace[i].added);
    line["size"] = trace[i].size_after;
    os << line.dump() << "\n";
  }
  return os.str();
}

}  // namespace rainbow
