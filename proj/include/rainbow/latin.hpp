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

#ifndef RAINBOW_LATIN_HPP
#define RAINBOW_LATIN_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

inline constexpr std::uint32_t kMaxEnumerationOrder = 9;

// n x n array over symbols 1..n, each row and column a permutation.
class LatinSquare {
 public:
  LatinSquare() = default;

  // Symbols may be any distinct integers; they are relabelled to 1..n in
  // increasing order. Throws kInvalidLatinSquare.
  static LatinSquare from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::uint32_t order() const { return n_; }
  std::uint32_t at(std::uint32_t row, std::uint32_t col) const { return cells_[row * n_ + col]; }
  std::vector<std::vector<std::uint32_t>> rows() const;

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> cells_;
};

bool is_latin(const std::vector<std::vector<std::int64_t>>& rows);

LatinSquare cyclic_square(std::uint32_t n);

// K_{n,n}: rows are vertices 0..n-1, columns n..2n-1, edge (i, n+j) has
// colour L[i][j].
EdgeColoredGraph latin_to_graph(const LatinSquare& square);

// Inverse of latin_to_graph for any labelling of K_{n,n}: the side holding
// vertex 0 gives the rows (ascending ids), the other side the columns.
// Throws kNotCompleteBipartite or kWrongColourCount.
LatinSquare graph_to_latin(const EdgeColoredGraph& g);

// Permutations with pairwise distinct symbols. Throws kOrderTooLarge above
// kMaxEnumerationOrder.
std::uint64_t count_transversals(const LatinSquare& square);

// Text: first line n, then n rows of whitespace-separated symbols.
LatinSquare parse_latin_text(std::string_view text);
std::string latin_to_text(const LatinSquare& square);
LatinSquare load_latin(const std::string& path);

}  // namespace rainbow

#endif  // RAINBOW_LATIN_HPP
