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

#include "rainbow/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace rainbow {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kImproperColoring: return "ImproperColoring";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNotStuck: return "NotStuck";
    case ErrorCode::kInvalidState: return "InvalidState";
    case ErrorCode::kOrderTooLarge: return "OrderTooLarge";
    case ErrorCode::kNotCompleteBipartite: return "NotCompleteBipartite";
    case ErrorCode::kWrongColourCount: return "WrongColourCount";
    case ErrorCode::kInfeasibleDegree: return "InfeasibleDegree";
    case ErrorCode::kCapUnsafe: return "CapUnsafe";
    case ErrorCode::kRecursionBudget: return "RecursionBudget";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInvalidLatinSquare: return "InvalidLatinSquare";
  }
  return "Unknown";
}

namespace {

std::string describe(const EdgeSpec& e) {
  std::ostringstream os;
  os << "(" << e.u << "," << e.v << ",colour " << e.colour << ")";
  return os.str();
}

}  // namespace

EdgeColoredGraph EdgeColoredGraph::build(std::uint32_t n,
                                         std::span<const EdgeSpec> input) {
  std::vector<EdgeSpec> specs;
  specs.reserve(input.size());
  for (const EdgeSpec& raw : input) {
    if (raw.u >= n || raw.v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge " + describe(raw) + " names a vertex >= n=" + std::to_string(n));
    }
    if (raw.u == raw.v) {
      throw Error(ErrorCode::kLoopEdge, "loop edge " + describe(raw));
    }
    if (raw.colour == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge " + describe(raw) + " has colour 0; colours are positive");
    }
    specs.push_back({std::min(raw.u, raw.v), std::max(raw.u, raw.v), raw.colour});
  }
  std::sort(specs.begin(), specs.end(), [](const EdgeSpec& a, const EdgeSpec& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < specs.size(); ++i) {
    if (specs[i].u == specs[i - 1].u && specs[i].v == specs[i - 1].v) {
      throw Error(ErrorCode::kDuplicateEdge, "duplicate edge " + describe(specs[i - 1]) +
                                                 " and " + describe(specs[i]));
    }
  }

  EdgeColoredGraph g;
  g.n_ = n;
  g.incidence_.assign(n, {});
  for (const EdgeSpec& s : specs) g.palette_.push_back(s.colour);
  std::sort(g.palette_.begin(), g.palette_.end());
  g.palette_.erase(std::unique(g.palette_.begin(), g.palette_.end()), g.palette_.end());

  // (vertex, colour) -> edge already holding that colour at the vertex
  std::unordered_map<std::uint64_t, EdgeId> seen;
  seen.reserve(specs.size() * 2);
  g.edges_.reserve(specs.size());
  for (const EdgeSpec& s : specs) {
    const auto id = static_cast<EdgeId>(g.edges_.size());
    const auto ci = static_cast<ColourIndex>(
        std::lower_bound(g.palette_.begin(), g.palette_.end(), s.colour) - g.palette_.begin());
    for (VertexId w : {s.u, s.v}) {
      const std::uint64_t key = (static_cast<std::uint64_t>(w) << 32) | ci;
      auto [it, inserted] = seen.emplace(key, id);
      if (!inserted) {
        const Edge& clash = g.edges_[it->second];
        throw Error(ErrorCode::kImproperColoring,
                    "edges " + describe({clash.u, clash.v, clash.colour}) + " and " +
                        describe(s) + " share vertex " + std::to_string(w) +
                        " and colour " + std::to_string(s.colour));
      }
    }
    g.edges_.push_back({s.u, s.v, s.colour, ci});
    g.incidence_[s.u].push_back(id);
    g.incidence_[s.v].push_back(id);
  }
  return g;
}

std::optional<EdgeId> EdgeColoredGraph::find_edge(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(a, b),
                             [](const Edge& e, const std::pair<VertexId, VertexId>& key) {
                               return std::pair(e.u, e.v) < key;
                             });
  if (it == edges_.end() || it->u != a || it->v != b) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

std::vector<EdgeSpec> EdgeColoredGraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back({e.u, e.v, e.colour});
  return out;
}

EdgeColoredGraph build_graph(std::uint32_t n, std::span<const EdgeSpec> edges) {
  return EdgeColoredGraph::build(n, edges);
}

EdgeColoredGraph without_vertex(const EdgeColoredGraph& g, VertexId v,
                                std::vector<EdgeId>* kept) {
  std::vector<EdgeSpec> specs;
  if (kept) kept->clear();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.touches(v)) continue;
    specs.push_back({ed.u, ed.v, ed.colour});
    if (kept) kept->push_back(e);
  }
  return EdgeColoredGraph::build(g.order(), specs);
}

std::uint32_t min_degree(const EdgeColoredGraph& g) {
  if (g.order() == 0) return 0;
  std::uint32_t best = g.degree(0);
  for (VertexId v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::uint32_t max_degree(const EdgeColoredGraph& g) {
  std::uint32_t best = 0;
  for (VertexId v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

ColorProfile color_profile(const EdgeColoredGraph& g) {
  ColorProfile p;
  for (const Edge& e : g.edges()) ++p.class_sizes[e.colour];
  for (const auto& [colour, size] : p.class_sizes) {
    if (size > p.a) {
      p.a = size;
      p.largest_colour = colour;
    }
  }
  return p;
}

bool Matching::contains(EdgeId e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

void Matching::normalise() {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

Matching make_matching(std::vector<EdgeId> edges) {
  Matching m{std::move(edges)};
  m.normalise();
  return m;
}

namespace {

void check_known(const EdgeColoredGraph& g, std::span<const EdgeId> edges) {
  for (EdgeId e : edges) {
    if (e >= g.edge_count()) {
      throw Error(ErrorCode::kUnknownEdge, "edge id " + std::to_string(e) +
                                               " is not an edge of the graph");
    }
  }
}

}  // namespace

bool is_matching(const EdgeColoredGraph& g, std::span<const EdgeId> edges) {
  check_known(g, edges);
  std::vector<VertexId> ends;
  ends.reserve(edges.size() * 2);
  for (EdgeId e : edges) {
    ends.push_back(g.edge(e).u);
    ends.push_back(g.edge(e).v);
  }
  std::sort(ends.begin(), ends.end());
  return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

bool is_rainbow_matching(const EdgeColoredGraph& g, std::span<const EdgeId> edges) {
  if (!is_matching(g, edges)) return false;
  std::vector<ColourIndex> colours;
  colours.reserve(edges.size());
  for (EdgeId e : edges) colours.push_back(g.edge(e).colour_index);
  std::sort(colours.begin(), colours.end());
  return std::adjacent_find(colours.begin(), colours.end()) == colours.end();
}

bool is_rainbow_matching(const EdgeColoredGraph& g, const Matching& m) {
  return is_rainbow_matching(g, std::span<const EdgeId>(m.edges));
}

Matching matching_from_pairs(const EdgeColoredGraph& g,
                             std::span<const std::pair<VertexId, VertexId>> pairs) {
  Matching m;
  for (const auto& [a, b] : pairs) {
    auto e = g.find_edge(a, b);
    if (!e) {
      throw Error(ErrorCode::kUnknownEdge, "no edge between " + std::to_string(a) +
                                               " and " + std::to_string(b));
    }
    m.edges.push_back(*e);
  }
  m.normalise();
  return m;
}

std::uint64_t bound_n(std::uint64_t delta) {
  if (delta == 0) throw Error(ErrorCode::kInvalidArgument, "bound_n needs delta >= 1");
  // ceil((9d - 5) / 2)
  return (9 * delta - 5 + 1) / 2;
}

std::uint64_t diemunsch_bound(std::uint64_t delta) {
  if (delta == 0) throw Error(ErrorCode::kInvalidArgument, "diemunsch_bound needs delta >= 1");
  // 13d/2 - 23/2 + 41/(8d) = (52d^2 - 92d + 41) / (8d); numerator > 0 for d >= 1
  const std::uint64_t num = 52 * delta * delta + 41 - 92 * delta;
  return num / (8 * delta) + 1;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + msg);
}

std::uint32_t parse_u32(std::istringstream& is, std::size_t line, const char* what) {
  std::string tok;
  if (!(is >> tok)) parse_fail(line, std::string("missing ") + what);
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    if (tok.empty() || tok[0] == '-' || tok[0] == '+') throw std::invalid_argument(tok);
    value = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    parse_fail(line, std::string("bad ") + what + " '" + tok + "'");
  }
  if (pos != tok.size() || value > 0xFFFFFFFFull) {
    parse_fail(line, std::string("bad ") + what + " '" + tok + "'");
  }
  return static_cast<std::uint32_t>(value);
}

}  // namespace

EdgeColoredGraph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::uint32_t> n;
  std::vector<EdgeSpec> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream is(raw);
    std::string tag;
    if (!(is >> tag)) continue;
    if (tag == "g") {
      if (n) parse_fail(line_no, "duplicate 'g' header");
      n = parse_u32(is, line_no, "vertex count");
    } else if (tag == "e") {
      if (!n) parse_fail(line_no, "'e' record before 'g' header");
      EdgeSpec e{};
      e.u = parse_u32(is, line_no, "vertex");
      e.v = parse_u32(is, line_no, "vertex");
      e.colour = parse_u32(is, line_no, "colour");
      edges.push_back(e);
    } else {
      parse_fail(line_no, "unknown record '" + tag + "'");
    }
    std::string extra;
    if (is >> extra) parse_fail(line_no, "trailing token '" + extra + "'");
  }
  if (!n) parse_fail(line_no, "missing 'g <n>' header");
  return build_graph(*n, edges);
}

std::string graph_to_text(const EdgeColoredGraph& g) {
  std::ostringstream os;
  os << "g " << g.order() << "\n";
  for (const Edge& e : g.edges()) os << "e " << e.u << " " << e.v << " " << e.colour << "\n";
  return os.str();
}

EdgeColoredGraph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  std::uint32_t n = 0;
  std::vector<EdgeSpec> edges;
  try {
    n = j.at("n").get<std::uint32_t>();
    for (const auto& rec : j.at("edges")) {
      if (!rec.is_array() || rec.size() != 3) {
        throw Error(ErrorCode::kParse, "edge record must be [u, v, colour]");
      }
      edges.push_back({rec[0].get<std::uint32_t>(), rec[1].get<std::uint32_t>(),
                       rec[2].get<std::uint32_t>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad graph JSON: ") + e.what());
  }
  return build_graph(n, edges);
}

std::string graph_to_json(const EdgeColoredGraph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  auto& arr = j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) arr.push_back({e.u, e.v, e.colour});
  return j.dump();
}

EdgeColoredGraph parse_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);
  return parse_graph_text(text);
}

EdgeColoredGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

}  // namespace rainbow
