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

#include "rainbow/exact_solver.hpp"

#include <algorithm>
#include <numeric>

namespace rainbow {
namespace {

class BranchAndBound {
 public:
  BranchAndBound(const EdgeColoredGraph& g, std::uint64_t budget)
      : g_(g),
        budget_(budget),
        vertex_used_(g.order(), 0),
        colour_used_(g.palette_size(), 0),
        vertex_stamp_(g.order(), 0),
        colour_stamp_(g.palette_size(), 0) {
    order_.resize(g.edge_count());
    std::iota(order_.begin(), order_.end(), EdgeId{0});
    std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
      const auto da = g.degree(g.edge(a).u) + g.degree(g.edge(a).v);
      const auto db = g.degree(g.edge(b).u) + g.degree(g.edge(b).v);
      return da > db;
    });
    const std::size_t by_vertices = g.order() / 2;
    global_cap_ = std::min<std::size_t>(by_vertices, g.palette_size());
    global_cap_ = std::min(global_cap_, g.edge_count());
  }

  // goal == 0 maximises; otherwise stops once a matching of size goal exists.
  void run(std::size_t goal) {
    goal_ = goal;
    recurse(0);
  }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<EdgeId>& best() const { return best_; }
  std::vector<TraceEvent>& trace() { return trace_; }

 private:
  bool feasible(EdgeId e) const {
    const Edge& ed = g_.edge(e);
    return !vertex_used_[ed.u] && !vertex_used_[ed.v] && !colour_used_[ed.colour_index];
  }

  // min(distinct colours, covered vertices / 2) over still-feasible edges
  // from position `from` onward.
  std::size_t upper_bound(std::size_t from) {
    ++stamp_;
    std::size_t colours = 0;
    std::size_t vertices = 0;
    for (std::size_t i = from; i < order_.size(); ++i) {
      const EdgeId e = order_[i];
      if (!feasible(e)) continue;
      const Edge& ed = g_.edge(e);
      if (colour_stamp_[ed.colour_index] != stamp_) {
        colour_stamp_[ed.colour_index] = stamp_;
        ++colours;
      }
      for (VertexId w : {ed.u, ed.v}) {
        if (vertex_stamp_[w] != stamp_) {
          vertex_stamp_[w] = stamp_;
          ++vertices;
        }
      }
    }
    return std::min(colours, vertices / 2);
  }

  bool done() const {
    if (aborted_) return true;
    if (goal_ > 0) return best_.size() >= goal_;
    return best_.size() >= global_cap_;
  }

  void record_incumbent() {
    best_ = current_;
    trace_.push_back({"incumbent", {}, best_, best_.size(), nodes_});
  }

  void recurse(std::size_t pos) {
    if (done()) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    while (pos < order_.size() && !feasible(order_[pos])) ++pos;
    if (current_.size() > best_.size()) {
      record_incumbent();
      if (done()) return;
    }
    if (pos == order_.size()) return;

    const std::size_t bound = current_.size() + upper_bound(pos);
    if (goal_ > 0 ? bound < goal_ : bound <= best_.size()) return;

    const EdgeId e = order_[pos];
    const Edge& ed = g_.edge(e);
    vertex_used_[ed.u] = vertex_used_[ed.v] = 1;
    colour_used_[ed.colour_index] = 1;
    current_.push_back(e);
    recurse(pos + 1);
    current_.pop_back();
    vertex_used_[ed.u] = vertex_used_[ed.v] = 0;
    colour_used_[ed.colour_index] = 0;

    recurse(pos + 1);
  }

  const EdgeColoredGraph& g_;
  std::uint64_t budget_;
  std::vector<EdgeId> order_;
  std::vector<char> vertex_used_;
  std::vector<char> colour_used_;
  std::vector<std::uint64_t> vertex_stamp_;
  std::vector<std::uint64_t> colour_stamp_;
  std::uint64_t stamp_ = 0;
  std::vector<EdgeId> current_;
  std::vector<EdgeId> best_;
  std::vector<TraceEvent> trace_;
  std::size_t goal_ = 0;
  std::size_t global_cap_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

SolveResult max_rainbow_matching(const EdgeColoredGraph& g, const SolverOptions& opts) {
  BranchAndBound bb(g, opts.node_budget);
  bb.run(0);
  SolveResult r;
  r.best = make_matching(bb.best());
  r.size = r.best.size();
  r.optimal = !bb.aborted();
  r.budget_hit = bb.aborted();
  r.nodes_explored = bb.nodes();
  r.trace = std::move(bb.trace());
  return r;
}

std::optional<Matching> rainbow_matching_at_least(const EdgeColoredGraph& g, std::size_t k,
                                                  const SolverOptions& opts,
                                                  std::uint64_t* nodes) {
  if (k == 0) {
    if (nodes) *nodes = 0;
    return Matching{};
  }
  BranchAndBound bb(g, opts.node_budget);
  bb.run(k);
  if (nodes) *nodes = bb.nodes();
  if (bb.best().size() >= k) return make_matching(bb.best());
  if (bb.aborted()) {
    throw Error(ErrorCode::kBudgetExceeded,
                "node budget of " + std::to_string(opts.node_budget) +
                    " exhausted deciding rainbow matching >= " + std::to_string(k));
  }
  return std::nullopt;
}

Matching max_matching(const EdgeColoredGraph& g) {
  std::vector<EdgeSpec> specs = g.edge_specs();
  for (std::size_t i = 0; i < specs.size(); ++i) specs[i].colour = static_cast<Colour>(i + 1);
  const EdgeColoredGraph recoloured = build_graph(g.order(), specs);
  // Same vertex pairs, so edge ids coincide with those of g.
  return max_rainbow_matching(recoloured).best;
}

namespace {

class PerfectCounter {
 public:
  PerfectCounter(const EdgeColoredGraph& g, std::uint64_t budget)
      : g_(g), budget_(budget), vertex_used_(g.order(), 0), colour_used_(g.palette_size(), 0) {}

  std::uint64_t count() {
    if (g_.order() % 2 != 0) return 0;
    recurse(0);
    return total_;
  }

 private:
  // Branch on the edges of the lowest uncovered vertex.
  void recurse(VertexId from) {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::kBudgetExceeded, "perfect matching count exceeded node budget");
    }
    while (from < g_.order() && vertex_used_[from]) ++from;
    if (from == g_.order()) {
      ++total_;
      return;
    }
    for (EdgeId e : g_.incident(from)) {
      const Edge& ed = g_.edge(e);
      const VertexId w = ed.other(from);
      if (vertex_used_[w] || colour_used_[ed.colour_index]) continue;
      vertex_used_[from] = vertex_used_[w] = 1;
      colour_used_[ed.colour_index] = 1;
      recurse(from + 1);
      vertex_used_[from] = vertex_used_[w] = 0;
      colour_used_[ed.colour_index] = 0;
    }
  }

  const EdgeColoredGraph& g_;
  std::uint64_t budget_;
  std::vector<char> vertex_used_;
  std::vector<char> colour_used_;
  std::uint64_t nodes_ = 0;
  std::uint64_t total_ = 0;
};

}  // namespace

std::uint64_t count_rainbow_perfect_matchings(const EdgeColoredGraph& g,
                                              std::uint64_t node_budget) {
  return PerfectCounter(g, node_budget).count();
}

}  // namespace rainbow
