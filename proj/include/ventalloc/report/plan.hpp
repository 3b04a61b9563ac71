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
#include <span>
#include <vector>

#include "ventalloc/model/milp_model.hpp"
#include "ventalloc/solver/solve_types.hpp"

namespace ventalloc {

// Solver outcome attached to one scenario's plan. Under the monolithic
// strategy every scenario carries the status of the single joint solve.
struct ScenarioSolveInfo {
  SolveStatus status = SolveStatus::kOptimal;
  std::optional<double> best_bound;
  std::int64_t node_count = 0;

  bool operator==(const ScenarioSolveInfo&) const = default;
};

// Decision values of one scenario. Grids are region-major; x, z, e and g
// cover periods 1..T, y covers 0..T and s covers 0..T.
struct ScenarioPlan {
  int scenario = 0;
  int num_regions = 0;
  int num_periods = 0;
  std::vector<double> x;
  std::vector<double> z;
  std::vector<double> e;
  std::vector<double> g;
  std::vector<double> y;
  std::vector<double> s;
  ScenarioSolveInfo solve;

  double x_at(int n, int t) const { return x[cell(n, t)]; }
  double z_at(int n, int t) const { return z[cell(n, t)]; }
  double e_at(int n, int t) const { return e[cell(n, t)]; }
  double g_at(int n, int t) const { return g[cell(n, t)]; }
  double y_at(int n, int t) const {
    return y[static_cast<std::size_t>(n) * (num_periods + 1) + t];
  }
  double s_at(int t) const { return s[t]; }

  // Sum of shortages over all regions and periods.
  double shortage_sum() const;

  bool operator==(const ScenarioPlan&) const = default;

 private:
  std::size_t cell(int n, int t) const { return static_cast<std::size_t>(n) * num_periods + t - 1; }
};

// Reads the block of `scenario` out of a full column assignment through the
// model's directory. Throws Error if the model has no directory and
// ShapeMismatchError if `values` does not cover every column.
ScenarioPlan extract_plan(const MilpModel& model, std::span<const double> values, int scenario);

}  // namespace ventalloc
