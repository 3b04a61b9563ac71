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

#include "ventalloc/report/plan.hpp"

#include <numeric>
#include <string>

#include "ventalloc/common/error.hpp"

namespace ventalloc {

double ScenarioPlan::shortage_sum() const { return std::accumulate(e.begin(), e.end(), 0.0); }

ScenarioPlan extract_plan(const MilpModel& model, std::span<const double> values, int scenario) {
  if (!model.directory()) throw Error("model has no variable directory");
  if (static_cast<int>(values.size()) != model.num_columns()) {
    throw ShapeMismatchError("assignment has " + std::to_string(values.size()) + " values for " +
                             std::to_string(model.num_columns()) + " columns");
  }
  const VariableDirectory& dir = *model.directory();
  ScenarioPlan plan;
  plan.scenario = scenario;
  plan.num_regions = dir.num_regions();
  plan.num_periods = dir.num_periods();
  const int N = plan.num_regions;
  const int T = plan.num_periods;
  auto value = [&](VarKind kind, std::optional<int> n, int t) {
    return values[dir.lookup(VariableKey{kind, n, t, scenario})];
  };
  for (int n = 0; n < N; ++n) {
    for (int t = 0; t <= T; ++t) plan.y.push_back(value(VarKind::kY, n, t));
    for (int t = 1; t <= T; ++t) {
      plan.x.push_back(value(VarKind::kX, n, t));
      plan.z.push_back(value(VarKind::kZ, n, t));
      plan.e.push_back(value(VarKind::kE, n, t));
      plan.g.push_back(value(VarKind::kG, n, t));
    }
  }
  for (int t = 0; t <= T; ++t) plan.s.push_back(value(VarKind::kS, std::nullopt, t));
  return plan;
}

}  // namespace ventalloc
