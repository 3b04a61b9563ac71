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

#include "ventalloc/report/metrics.hpp"

#include <string>

#include "ventalloc/common/error.hpp"

namespace ventalloc {
namespace {

void check_shapes(std::span<const ScenarioPlan> plans, std::span<const double> p) {
  if (plans.size() != p.size()) {
    throw ShapeMismatchError(std::to_string(plans.size()) + " scenario plans but " +
                             std::to_string(p.size()) + " probabilities");
  }
  if (plans.empty()) throw ShapeMismatchError("no scenario plans");
  const int N = plans.front().num_regions;
  const int T = plans.front().num_periods;
  for (const ScenarioPlan& plan : plans) {
    const std::size_t cells = static_cast<std::size_t>(N) * T;
    if (plan.num_regions != N || plan.num_periods != T || plan.e.size() != cells ||
        plan.x.size() != cells || plan.z.size() != cells) {
      throw ShapeMismatchError("scenario " + std::to_string(plan.scenario) +
                               " has a different grid shape");
    }
  }
}

// Expected shortage of one region-day.
double expected_cell(std::span<const ScenarioPlan> plans, std::span<const double> p, int n, int t) {
  double sum = 0.0;
  for (std::size_t w = 0; w < plans.size(); ++w) sum += p[w] * plans[w].e_at(n, t);
  return sum;
}

}  // namespace

double total_shortage(std::span<const ScenarioPlan> plans, std::span<const double> p) {
  check_shapes(plans, p);
  double total = 0.0;
  for (std::size_t w = 0; w < plans.size(); ++w) total += p[w] * plans[w].shortage_sum();
  return total;
}

std::vector<double> daily_expected_shortage(std::span<const ScenarioPlan> plans,
                                            std::span<const double> p) {
  check_shapes(plans, p);
  const int N = plans.front().num_regions;
  const int T = plans.front().num_periods;
  std::vector<double> curve(T, 0.0);
  for (std::size_t w = 0; w < plans.size(); ++w) {
    for (int t = 1; t <= T; ++t) {
      double day = 0.0;
      for (int n = 0; n < N; ++n) day += plans[w].e_at(n, t);
      curve[t - 1] += p[w] * day;
    }
  }
  return curve;
}

WorstDay worst_day(std::span<const ScenarioPlan> plans, std::span<const double> p) {
  const std::vector<double> curve = daily_expected_shortage(plans, p);
  WorstDay worst{curve.empty() ? 0.0 : curve[0], 1};
  for (std::size_t t = 1; t < curve.size(); ++t) {
    if (curve[t] > worst.value) worst = {curve[t], static_cast<int>(t) + 1};
  }
  return worst;
}

WorstDayState worst_day_state(std::span<const ScenarioPlan> plans, std::span<const double> p) {
  check_shapes(plans, p);
  const int N = plans.front().num_regions;
  const int T = plans.front().num_periods;
  WorstDayState worst{};
  bool first = true;
  for (int t = 1; t <= T; ++t) {
    for (int n = 0; n < N; ++n) {
      const double value = expected_cell(plans, p, n, t);
      if (first || value > worst.value) worst = {value, t, n};
      first = false;
    }
  }
  return worst;
}

FlowRow flows(std::span<const ScenarioPlan> plans, std::span<const double> p, int n) {
  check_shapes(plans, p);
  if (n < 0 || n >= plans.front().num_regions) {
    throw ShapeMismatchError("region index " + std::to_string(n) + " out of range");
  }
  FlowRow row;
  for (std::size_t w = 0; w < plans.size(); ++w) {
    double in = 0.0;
    double out = 0.0;
    for (int t = 1; t <= plans[w].num_periods; ++t) {
      in += plans[w].x_at(n, t);
      out += plans[w].z_at(n, t);
    }
    row.total_inflow += p[w] * in;
    row.total_outflow += p[w] * out;
  }
  row.net_flow = row.total_inflow - row.total_outflow;
  return row;
}

ShortageReport summarize_shortage(std::span<const ScenarioPlan> plans, std::span<const double> p,
                                  const Horizon& horizon, std::span<const std::string> region_ids) {
  check_shapes(plans, p);
  if (static_cast<int>(region_ids.size()) != plans.front().num_regions) {
    throw ShapeMismatchError("region id count does not match the plans");
  }
  ShortageReport report;
  report.total = total_shortage(plans, p);
  report.daily_expected_shortage = daily_expected_shortage(plans, p);
  const WorstDay day = worst_day(plans, p);
  report.worst_day = {day.value, day.period, horizon.date_of(day.period)};
  const WorstDayState cell = worst_day_state(plans, p);
  report.worst_day_state = {cell.value, cell.period, horizon.date_of(cell.period),
                            region_ids[cell.region]};
  for (const ScenarioPlan& plan : plans) report.scenario_objectives.push_back(plan.shortage_sum());
  return report;
}

FlowReport summarize_flows(std::span<const ScenarioPlan> plans, std::span<const double> p,
                           std::span<const std::string> region_ids) {
  check_shapes(plans, p);
  if (static_cast<int>(region_ids.size()) != plans.front().num_regions) {
    throw ShapeMismatchError("region id count does not match the plans");
  }
  FlowReport report;
  for (int n = 0; n < static_cast<int>(region_ids.size()); ++n) {
    FlowRow row = flows(plans, p, n);
    row.region_id = region_ids[n];
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace ventalloc
