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

#include <span>
#include <string_view>
#include <vector>

#include "ventalloc/instance/instance.hpp"
#include "ventalloc/model/milp_model.hpp"
#include "ventalloc/scenario/scenario.hpp"

namespace ventalloc {

enum class BigMPolicy {
  // M[n,t] = I + tau_n y_{n,0} + Q_1 + ... + Q_t, as in the published model.
  // With large rho * d this constant can cut off solutions the nonlinear
  // safety-stock rule admits; audit_big_m reports where it binds.
  kPublished,
  // M[n,t,w] = max(total system units at t, (1 - tau_n) y_{n,0} + rho_n d).
  // Provably never cuts a solution of the nonlinear rule. Opt-in.
  kSystemBound,
};

// "published" / "system_bound". The parser throws InputError otherwise.
std::string_view big_m_policy_name(BigMPolicy policy);
BigMPolicy big_m_policy_from_name(std::string_view name);

struct BuildOptions {
  BigMPolicy big_m = BigMPolicy::kPublished;
};

// I + tau_n (1 - gamma_n) Y_n + sum_{t' <= t} Q_t'. `n` is a region index.
double compute_big_m(const PlanningInstance& instance, int n, int t);

// Full extensive form: one block of variables and constraints per scenario,
// objective sum_w p_w sum_{n,t} e[n,t,w]. Throws ShapeMismatchError if the
// scenario set does not match the instance.
MilpModel build_extensive_form(const PlanningInstance& instance, const ScenarioSet& scenarios,
                               const BuildOptions& options = {});

// The block of scenario `scenario` alone, with objective sum_{n,t} e[n,t].
// Scenario blocks share no rows, so the extensive-form optimum is the
// probability-weighted sum of these optima.
MilpModel single_scenario_model(const PlanningInstance& instance, const ScenarioSet& scenarios,
                                int scenario, const BuildOptions& options = {});

// Closed-form sizes of one scenario block.
int columns_per_scenario(int num_regions, int num_periods);
int rows_per_scenario(int num_regions, int num_periods);

// Places where a big-M constant is binding in `values`: z = M on an
// outflow-indicator row, or y at floor - M on a safety-activation row with
// g = 0. Either means the constant, not the safety-stock rule, limited the
// solution.
struct BigMBinding {
  RowTag tag;
  double big_m = 0.0;
  double slack = 0.0;
};
std::vector<BigMBinding> audit_big_m(const MilpModel& model, std::span<const double> values,
                                     double tol = 1e-6);

}  // namespace ventalloc
