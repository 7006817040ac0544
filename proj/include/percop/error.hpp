// Copyright 2026 The percop Authors.
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

#ifndef PERCOP_ERROR_HPP_
#define PERCOP_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace percop {

enum class ErrorCode {
  kInvalidArgument,
  kVertexCollision,
  kLimitExceeded,
  kBudgetExceeded,
  kUndefined,
  kInfeasibleMove,
  kInvalidDecomposition,
  kConstructionCheck,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kVertexCollision: return "vertex_collision";
    case ErrorCode::kLimitExceeded: return "limit_exceeded";
    case ErrorCode::kBudgetExceeded: return "budget_exceeded";
    case ErrorCode::kUndefined: return "undefined";
    case ErrorCode::kInfeasibleMove: return "infeasible_move";
    case ErrorCode::kInvalidDecomposition: return "invalid_decomposition";
    case ErrorCode::kConstructionCheck: return "construction_check";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown when a solve would exceed the configured state cap. Carries the
// estimated state count so callers can report it or raise the cap.
class BudgetError : public Error {
 public:
  BudgetError(std::uint64_t estimate, std::uint64_t budget)
      : Error(ErrorCode::kBudgetExceeded,
              "state budget exceeded: " + std::to_string(estimate) +
                  " states > budget " + std::to_string(budget)),
        estimate_(estimate),
        budget_(budget) {}

  std::uint64_t estimate() const noexcept { return estimate_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t budget_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace detail
}  // namespace percop

#endif  // PERCOP_ERROR_HPP_
