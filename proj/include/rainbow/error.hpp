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

#ifndef RAINBOW_ERROR_HPP
#define RAINBOW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rainbow {

// Values mirror rb_status in rainbow.h; keep the two in sync.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kParse = 2,
  kLoopEdge = 3,
  kDuplicateEdge = 4,
  kImproperColoring = 5,
  kVertexOutOfRange = 6,
  kUnknownEdge = 7,
  kBudgetExceeded = 8,
  kNotStuck = 9,
  kInvalidState = 10,
  kOrderTooLarge = 11,
  kNotCompleteBipartite = 12,
  kWrongColourCount = 13,
  kInfeasibleDegree = 14,
  kCapUnsafe = 15,
  kRecursionBudget = 16,
  kIo = 17,
  kInvalidLatinSquare = 18,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rainbow

#endif  // RAINBOW_ERROR_HPP
