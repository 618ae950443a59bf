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

#ifndef RAINBOW_GRAPH_HPP
#define RAINBOW_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rainbow/error.hpp"

namespace rainbow {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
// User-facing colour label; any positive integer.
using Colour = std::uint32_t;
// Dense palette slot 0..palette_size()-1, assigned in increasing label order.
using ColourIndex = std::uint32_t;

struct EdgeSpec {
  VertexId u;
  VertexId v;
  Colour colour;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

struct Edge {
  VertexId u;  // u < v
  VertexId v;
  Colour colour;
  ColourIndex colour_index;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool touches(VertexId w) const { return w == u || w == v; }
};

// Simple graph with a proper edge colouring. Edges are stored sorted by
// (u, v) with u < v, so edge ids do not depend on input order. Immutable.
class EdgeColoredGraph {
 public:
  EdgeColoredGraph() = default;

  // Validates and normalises. Throws Error with kVertexOutOfRange,
  // kLoopEdge, kDuplicateEdge, kImproperColoring or kInvalidArgument
  // (colour 0).
  static EdgeColoredGraph build(std::uint32_t n, std::span<const EdgeSpec> edges);

  std::uint32_t order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const { return incidence_[v]; }
  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(incidence_[v].size());
  }

  std::uint32_t palette_size() const {
    return static_cast<std::uint32_t>(palette_.size());
  }
  Colour colour_label(ColourIndex c) const { return palette_[c]; }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  std::vector<EdgeSpec> edge_specs() const;

 private:
  std::uint32_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<Colour> palette_;
};

EdgeColoredGraph build_graph(std::uint32_t n, std::span<const EdgeSpec> edges);

// Graph on the same vertex set without the edges of `v`. `kept` receives,
// for each edge of the result, its id in `g`.
EdgeColoredGraph without_vertex(const EdgeColoredGraph& g, VertexId v,
                                std::vector<EdgeId>* kept = nullptr);

std::uint32_t min_degree(const EdgeColoredGraph& g);
std::uint32_t max_degree(const EdgeColoredGraph& g);

struct ColorProfile {
  std::map<Colour, std::uint32_t> class_sizes;
  // Largest colour class; equals the largest monochromatic matching.
  std::uint32_t a = 0;
  Colour largest_colour = 0;  // smallest label attaining a; 0 if edgeless
};

ColorProfile color_profile(const EdgeColoredGraph& g);

// Edge ids kept sorted ascending; that order is the "matched edge index"
// order used by the augmentation rules.
struct Matching {
  std::vector<EdgeId> edges;

  std::size_t size() const { return edges.size(); }
  bool empty() const { return edges.empty(); }
  bool contains(EdgeId e) const;
  void normalise();

  friend bool operator==(const Matching&, const Matching&) = default;
};

Matching make_matching(std::vector<EdgeId> edges);

// True iff the edges are pairwise vertex-disjoint and carry distinct
// colours. Throws kUnknownEdge for an id outside the graph.
bool is_rainbow_matching(const EdgeColoredGraph& g, std::span<const EdgeId> edges);
bool is_rainbow_matching(const EdgeColoredGraph& g, const Matching& m);
bool is_matching(const EdgeColoredGraph& g, std::span<const EdgeId> edges);

// Resolves vertex pairs to edge ids; throws kUnknownEdge.
Matching matching_from_pairs(const EdgeColoredGraph& g,
                             std::span<const std::pair<VertexId, VertexId>> pairs);

// Smallest integer n with n >= (9*delta - 5) / 2.
std::uint64_t bound_n(std::uint64_t delta);
// floor(13d/2 - 23/2 + 41/(8d)) + 1.
std::uint64_t diemunsch_bound(std::uint64_t delta);

// Text format: "g <n>" header, then "e <u> <v> <colour>" lines; '#' starts a
// comment. Errors carry kParse with a line number, or build_graph's codes.
EdgeColoredGraph parse_graph_text(std::string_view text);
std::string graph_to_text(const EdgeColoredGraph& g);

// JSON: {"n": <n>, "edges": [[u, v, c], ...]}.
EdgeColoredGraph parse_graph_json(std::string_view text);
std::string graph_to_json(const EdgeColoredGraph& g);

// Picks JSON when the first non-blank character is '{'.
EdgeColoredGraph parse_graph(std::string_view text);
EdgeColoredGraph load_graph(const std::string& path);

}  // namespace rainbow

#endif  // RAINBOW_GRAPH_HPP
