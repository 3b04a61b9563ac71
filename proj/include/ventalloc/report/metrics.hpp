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
#include <string>
#include <vector>

#include "ventalloc/instance/instance.hpp"
#include "ventalloc/report/plan.hpp"

namespace ventalloc {

// All metrics take one plan per scenario and the matching probabilities.
// They throw ShapeMismatchError when the counts differ or the plans do not
// share one grid shape.

// sum_w p_w sum_{n,t} e[n,t,w].
double total_shortage(std::span<const ScenarioPlan> plans, std::span<const double> p);

// Expected shortage per day: entry t - 1 is sum_w p_w sum_n e[n,t,w].
std::vector<double> daily_expected_shortage(std::span<const ScenarioPlan> plans,
                                            std::span<const double> p);

struct WorstDay {
  double value = 0.0;
  int period = 1;

  bool operator==(const WorstDay&) const = default;
};

struct WorstDayState {
  double value = 0.0;
  int period = 1;
  int region = 0;

  bool operator==(const WorstDayState&) const = default;
};

// Largest daily expected shortage; ties go to the earliest period.
WorstDay worst_day(std::span<const ScenarioPlan> plans, std::span<const double> p);

// Largest expected shortage of a single region-day; ties go to the earliest
// period, then to the first region in instance order.
WorstDayState worst_day_state(std::span<const ScenarioPlan> plans, std::span<const double> p);

struct FlowRow {
  std::string region_id;
  double total_inflow = 0.0;
  double total_outflow = 0.0;
  double net_flow = 0.0;

  bool operator==(const FlowRow&) const = default;
};

// Expected shipments into (x) and out of (z) region `n` over the horizon.
// region_id is left empty; summarize() fills it in.
FlowRow flows(std::span<const ScenarioPlan> plans, std::span<const double> p, int n);

struct DatedWorstDay {
  double value = 0.0;
  int period = 1;
  Date date;

  bool operator==(const DatedWorstDay&) const = default;
};

struct DatedWorstDayState {
  double value = 0.0;
  int period = 1;
  Date date;
  std::string region_id;

  bool operator==(const DatedWorstDayState&) const = default;
};

struct ShortageReport {
  double total = 0.0;
  DatedWorstDay worst_day;
  DatedWorstDayState worst_day_state;
  std::vector<double> daily_expected_shortage;
  // sum_{n,t} e[n,t,w] for each scenario.
  std::vector<double> scenario_objectives;

  bool operator==(const ShortageReport&) const = default;
};

struct FlowReport {
  std::vector<FlowRow> rows;

  bool operator==(const FlowReport&) const = default;
};

// Every metric at once, with dates from `horizon` and region ids.
ShortageReport summarize_shortage(std::span<const ScenarioPlan> plans, std::span<const double> p,
                                  const Horizon& horizon, std::span<const std::string> region_ids);
FlowReport summarize_flows(std::span<const ScenarioPlan> plans, std::span<const double> p,
                           std::span<const std::string> region_ids);

}  // namespace ventalloc
