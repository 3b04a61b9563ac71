// Copyright 2026 The Ventalloc Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ventalloc/common/error.hpp"

namespace ventalloc {

struct SolveLimits {
  double time_limit_seconds = 3600.0;
  double relative_gap = 1e-6;
  double absolute_gap = 1e-9;
  std::optional<std::int64_t> node_limit;

  bool operator==(const SolveLimits&) const = default;
};

// kNoSolution: a time or node limit stopped the search before any integer
// solution was found.
enum class SolveStatus { kOptimal, kFeasibleTimeLimit, kInfeasible, kUnbounded, kNoSolution };

std::string_view status_name(SolveStatus status);
SolveStatus status_from_name(std::string_view name);

struct SolveResult {
  SolveStatus status = SolveStatus::kNoSolution;
  // Column values of the best solution; empty when there is none.
  std::vector<double> incumbent;
  double objective = 0.0;
  double best_bound = 0.0;
  std::int64_t node_count = 0;
  std::int64_t simplex_iterations = 0;
  double wall_time_seconds = 0.0;

  bool has_incumbent() const { return !incumbent.empty(); }
};

// The simplex hit an unusable pivot or failed to converge. The message names
// the pivot (row, column, value) or the phase that failed.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Tolerances shared by the LP and branch-and-bound layers.
inline constexpr double kFeasibilityTol = 1e-7;
inline constexpr double kOptimalityTol = 1e-7;
inline constexpr double kIntegralityTol = 1e-6;

}  // namespace ventalloc
