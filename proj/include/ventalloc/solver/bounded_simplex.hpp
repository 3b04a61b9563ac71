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

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ventalloc/model/milp_model.hpp"
#include "ventalloc/solver/solve_types.hpp"

namespace ventalloc {

struct LpOptions {
  double feasibility_tol = kFeasibilityTol;
  double optimality_tol = kOptimalityTol;
  double pivot_tol = 1e-9;
  std::int64_t iteration_limit = 1'000'000;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int degenerate_switch = 50;
  // Pivots between refactorizations of the tableau from the original matrix.
  int refactor_interval = 100;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kTimeLimit };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> values;  // structural columns only
  double objective = 0.0;
  std::int64_t iterations = 0;
};

// Bounded-variable primal simplex on a dense tableau. Each row i becomes
// a_i x - r_i = 0 with a logical variable r_i bounded by the row sense, so
// the all-logical basis is always available and phase 1 minimizes the sum of
// bound violations of basic variables. Dantzig pricing, falling back to
// Bland's rule after a run of degenerate pivots.
//
// The matrix is densified once per instance; solve() may be called
// repeatedly with different column bounds (as branch-and-bound does).
class BoundedSimplex {
 public:
  explicit BoundedSimplex(const MilpModel& model);

  int num_rows() const { return m_; }
  int num_columns() const { return n_; }

  // Column bounds override the model's; binaries are treated as continuous.
  LpSolution solve(std::span<const double> lower, std::span<const double> upper,
                   const LpOptions& options = {}) const;
  LpSolution solve(const LpOptions& options = {}) const;

  // Dense entries above which construction refuses the model.
  static constexpr std::int64_t kMaxTableauEntries = 60'000'000;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<double> matrix_;  // m_ x n_, row-major
  std::vector<double> cost_;
  std::vector<double> row_lower_;
  std::vector<double> row_upper_;
  std::vector<double> col_lower_;
  std::vector<double> col_upper_;
};

}  // namespace ventalloc
