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

#include "rainbow/latin.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

namespace rainbow {
namespace {

std::string latin_problem(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return "square has no rows";
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      return "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
             " entries, expected " + std::to_string(n);
    }
  }
  std::vector<std::int64_t> symbols = rows[0];
  std::sort(symbols.begin(), symbols.end());
  if (std::adjacent_find(symbols.begin(), symbols.end()) != symbols.end()) {
    return "row 0 repeats a symbol";
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> row = rows[i];
    std::sort(row.begin(), row.end());
    if (row != symbols) return "row " + std::to_string(i) + " is not a permutation of row 0";
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::int64_t> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = rows[i][j];
    std::sort(col.begin(), col.end());
    if (col != symbols) return "column " + std::to_string(j) + " repeats a symbol";
  }
  return {};
}

}  // namespace

bool is_latin(const std::vector<std::vector<std::int64_t>>& rows) {
  return latin_problem(rows).empty();
}

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  if (auto problem = latin_problem(rows); !problem.empty()) {
    throw Error(ErrorCode::kInvalidLatinSquare, problem);
  }
  std::vector<std::int64_t> symbols = rows[0];
  std::sort(symbols.begin(), symbols.end());
  LatinSquare sq;
  sq.n_ = static_cast<std::uint32_t>(rows.size());
  sq.cells_.reserve(sq.n_ * sq.n_);
  for (const auto& row : rows) {
    for (std::int64_t v : row) {
      const auto rank = std::lower_bound(symbols.begin(), symbols.end(), v) - symbols.begin();
      sq.cells_.push_back(static_cast<std::uint32_t>(rank + 1));
    }
  }
  return sq;
}

std::vector<std::vector<std::uint32_t>> LatinSquare::rows() const {
  std::vector<std::vector<std::uint32_t>> out(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    out[i].assign(cells_.begin() + i * n_, cells_.begin() + (i + 1) * n_);
  }
  return out;
}

LatinSquare cyclic_square(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "cyclic square needs n >= 1");
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) rows[i][j] = (i + j) % n + 1;
  }
  return LatinSquare::from_rows(rows);
}

EdgeColoredGraph latin_to_graph(const LatinSquare& square) {
  const std::uint32_t n = square.order();
  std::vector<EdgeSpec> edges;
  edges.reserve(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) edges.push_back({i, n + j, square.at(i, j)});
  }
  return build_graph(2 * n, edges);
}

LatinSquare graph_to_latin(const EdgeColoredGraph& g) {
  const std::uint32_t total = g.order();
  if (total == 0 || total % 2 != 0) {
    throw Error(ErrorCode::kNotCompleteBipartite, "K_{n,n} needs an even, nonzero vertex count");
  }
  const std::uint32_t n = total / 2;
  if (g.edge_count() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorCode::kNotCompleteBipartite,
                "expected " + std::to_string(n * n) + " edges, found " +
                    std::to_string(g.edge_count()));
  }
  // Two-colour the vertices starting from vertex 0.
  std::vector<int> side(total, -1);
  std::deque<VertexId> queue{0};
  side[0] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(v)) {
      const VertexId w = g.edge(e).other(v);
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        queue.push_back(w);
      } else if (side[w] == side[v]) {
        throw Error(ErrorCode::kNotCompleteBipartite, "graph has an odd cycle");
      }
    }
  }
  std::vector<VertexId> rows, cols;
  for (VertexId v = 0; v < total; ++v) {
    if (side[v] < 0) throw Error(ErrorCode::kNotCompleteBipartite, "graph is disconnected");
    (side[v] == 0 ? rows : cols).push_back(v);
  }
  if (rows.size() != n || cols.size() != n) {
    throw Error(ErrorCode::kNotCompleteBipartite, "sides have unequal sizes");
  }
  if (g.palette_size() != n) {
    throw Error(ErrorCode::kWrongColourCount, "expected " + std::to_string(n) +
                                                  " colours, found " +
                                                  std::to_string(g.palette_size()));
  }
  std::vector<std::vector<std::int64_t>> cells(n, std::vector<std::int64_t>(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      auto e = g.find_edge(rows[i], cols[j]);
      if (!e) throw Error(ErrorCode::kNotCompleteBipartite, "missing a cross edge");
      cells[i][j] = g.edge(*e).colour;
    }
  }
  return LatinSquare::from_rows(cells);
}

namespace {

void count_rows(const LatinSquare& sq, std::uint32_t row, std::vector<char>& col_used,
                std::vector<char>& sym_used, std::uint64_t& total) {
  const std::uint32_t n = sq.order();
  if (row == n) {
    ++total;
    return;
  }
  for (std::uint32_t c = 0; c < n; ++c) {
    const std::uint32_t sym = sq.at(row, c);
    if (col_used[c] || sym_used[sym]) continue;
    col_used[c] = sym_used[sym] = 1;
    count_rows(sq, row + 1, col_used, sym_used, total);
    col_used[c] = sym_used[sym] = 0;
  }
}

}  // namespace

std::uint64_t count_transversals(const LatinSquare& square) {
  if (square.order() > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kOrderTooLarge, "transversal enumeration is limited to order " +
                                               std::to_string(kMaxEnumerationOrder));
  }
  std::vector<char> col_used(square.order(), 0);
  std::vector<char> sym_used(square.order() + 1, 0);
  std::uint64_t total = 0;
  count_rows(square, 0, col_used, sym_used, total);
  return total;
}

LatinSquare parse_latin_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> content;
  std::vector<std::size_t> numbers;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    content.push_back(line);
    numbers.push_back(line_no);
  }
  if (content.empty()) throw Error(ErrorCode::kParse, "empty square file");
  auto fail = [&](std::size_t idx, const std::string& msg) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(numbers[idx]) + ": " + msg);
  };
  std::istringstream head(content[0]);
  long long n = 0;
  std::string extra;
  if (!(head >> n) || n <= 0 || (head >> extra)) fail(0, "first line must be the order n");
  if (content.size() != static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorCode::kParse, "expected " + std::to_string(n) + " rows, found " +
                                       std::to_string(content.size() - 1));
  }
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 1; i < content.size(); ++i) {
    std::istringstream is(content[i]);
    std::vector<std::int64_t> row;
    std::string tok;
    while (is >> tok) {
      std::size_t pos = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &pos);
      } catch (const std::exception&) {
        fail(i, "bad symbol '" + tok + "'");
      }
      if (pos != tok.size()) fail(i, "bad symbol '" + tok + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return LatinSquare::from_rows(rows);
}

std::string latin_to_text(const LatinSquare& square) {
  std::ostringstream os;
  os << square.order() << "\n";
  for (std::uint32_t i = 0; i < square.order(); ++i) {
    for (std::uint32_t j = 0; j < square.order(); ++j) {
      if (j) os << " ";
      os << square.at(i, j);
    }
    os << "\n";
  }
  return os.str();
}

LatinSquare load_latin(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_latin_text(ss.str());
}

}  // namespace rainbow
