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

#include <sstream>

#include "doctest.h"
#include "test_support.hpp"
#include "ventalloc/common/error.hpp"
#include "ventalloc/model/builder.hpp"
#include "ventalloc/report/metrics.hpp"
#include "ventalloc/report/plan.hpp"
#include "ventalloc/report/report.hpp"
#include "ventalloc/solver/branch_and_bound.hpp"

using namespace ventalloc;
using ventalloc::testing::scenarios_for;
using ventalloc::testing::small_instance;

namespace {

ScenarioPlan blank_plan(int regions, int periods, int scenario = 0) {
  ScenarioPlan plan;
  plan.scenario = scenario;
  plan.num_regions = regions;
  plan.num_periods = periods;
  const std::size_t cells = static_cast<std::size_t>(regions) * periods;
  plan.x.assign(cells, 0.0);
  plan.z.assign(cells, 0.0);
  plan.e.assign(cells, 0.0);
  plan.g.assign(cells, 0.0);
  plan.y.assign(static_cast<std::size_t>(regions) * (periods + 1), 0.0);
  plan.s.assign(periods + 1, 0.0);
  return plan;
}

// Cell index of (n, t) in a region-major grid.
std::size_t cell(const ScenarioPlan& plan, int n, int t) {
  return static_cast<std::size_t>(n) * plan.num_periods + t - 1;
}

ReportBundle solved_bundle() {
  const PlanningInstance inst = small_instance({5, 1}, 2, {1, 0}, 0.5, 0.5);
  const ScenarioSet set = scenarios_for(inst, {{2, 6, 1, 3}, {7, 1, 4, 2}}, {3.0, 1.0});
  std::vector<ScenarioPlan> plans;
  for (int w = 0; w < set.size(); ++w) {
    const MilpModel model = single_scenario_model(inst, set, w);
    const SolveResult r = branch_and_bound(model);
    ScenarioPlan plan = extract_plan(model, r.incumbent, w);
    plan.solve = {r.status, r.best_bound, r.node_count};
    plans.push_back(std::move(plan));
  }
  ScenarioSet seeded = set;
  seeded.seed = 424242;
  seeded.case_spec = case_preset("IV");
  return make_report(inst, seeded, std::move(plans), SolveStrategy::kPerScenario, SolveLimits{},
                     BigMPolicy::kPublished, RunTiming{0.5, {0.2, 0.3}});
}

}  // namespace

TEST_CASE("total_shortage") {
  ScenarioPlan one = blank_plan(2, 2);
  one.e = {1, 2, 3, 1};
  const std::vector<double> p1{1.0};
  CHECK(total_shortage(std::span(&one, 1), p1) == 7.0);

  const std::vector<ScenarioPlan> zeros{blank_plan(2, 2), blank_plan(2, 2, 1)};
  const std::vector<double> half{0.5, 0.5};
  CHECK(total_shortage(zeros, half) == 0.0);

  std::vector<ScenarioPlan> two{blank_plan(1, 2), blank_plan(1, 2, 1)};
  two[0].e = {4, 6};
  two[1].e = {2, 0};
  const std::vector<double> p{0.75, 0.25};
  CHECK(total_shortage(two, p) == doctest::Approx(8.0).epsilon(1e-15));

  CHECK_THROWS_AS(total_shortage(two, p1), ShapeMismatchError);
  two[1] = blank_plan(2, 1, 1);
  CHECK_THROWS_AS(total_shortage(two, p), ShapeMismatchError);
}

TEST_CASE("worst_day") {
  ScenarioPlan plan = blank_plan(1, 3);
  plan.e = {0, 5, 3};
  const std::vector<double> p{1.0};
  CHECK(worst_day(std::span(&plan, 1), p) == WorstDay{5.0, 2});
  CHECK(daily_expected_shortage(std::span(&plan, 1), p) == std::vector<double>{0, 5, 3});

  const ScenarioPlan zero = blank_plan(3, 4);
  CHECK(worst_day(std::span(&zero, 1), p) == WorstDay{0.0, 1});

  plan.e = {4, 1, 4};
  CHECK(worst_day(std::span(&plan, 1), p) == WorstDay{4.0, 1});
}

TEST_CASE("worst_day_state") {
  ScenarioPlan plan = blank_plan(3, 4);
  plan.e[cell(plan, 1, 3)] = 9;
  plan.e[cell(plan, 2, 3)] = 4;
  plan.e[cell(plan, 0, 1)] = 8;
  const std::vector<double> p{1.0};
  CHECK(worst_day_state(std::span(&plan, 1), p) == WorstDayState{9.0, 3, 1});

  const ScenarioPlan zero = blank_plan(3, 4);
  CHECK(worst_day_state(std::span(&zero, 1), p) == WorstDayState{0.0, 1, 0});

  SUBCASE("ties go to the earliest period, then the first region") {
    ScenarioPlan tied = blank_plan(3, 4);
    tied.e[cell(tied, 2, 2)] = 6;
    tied.e[cell(tied, 1, 2)] = 6;
    tied.e[cell(tied, 0, 4)] = 6;
    CHECK(worst_day_state(std::span(&tied, 1), p) == WorstDayState{6.0, 2, 1});
  }
}

TEST_CASE("flows") {
  const std::vector<double> p{1.0};
  const ScenarioPlan zero = blank_plan(2, 3);
  CHECK(flows(std::span(&zero, 1), p, 1) == FlowRow{"", 0, 0, 0});

  ScenarioPlan plan = blank_plan(2, 3);
  plan.x[cell(plan, 0, 1)] = 2;
  plan.x[cell(plan, 0, 3)] = 3;
  plan.z[cell(plan, 0, 2)] = 2;
  plan.x[cell(plan, 1, 1)] = 100;
  CHECK(flows(std::span(&plan, 1), p, 0) == FlowRow{"", 5, 2, 3});

  std::vector<ScenarioPlan> two{plan, blank_plan(2, 3, 1)};
  const std::vector<double> half{0.5, 0.5};
  CHECK(flows(two, half, 0) == FlowRow{"", 2.5, 1, 1.5});
}

TEST_CASE("summaries agree with each other") {
  const ReportBundle report = solved_bundle();
  const auto& s = report.shortage;
  double curve_sum = 0.0;
  for (double v : s.daily_expected_shortage) curve_sum += v;
  double by_scenario = 0.0;
  for (std::size_t w = 0; w < s.scenario_objectives.size(); ++w) {
    by_scenario += report.probabilities[w] * s.scenario_objectives[w];
  }
  CHECK(s.total == doctest::Approx(curve_sum).epsilon(1e-12));
  CHECK(s.total == doctest::Approx(by_scenario).epsilon(1e-12));
  CHECK(s.worst_day.value <= s.total + 1e-12);
  CHECK(s.worst_day.date == report.instance.horizon.date_of(s.worst_day.period));
  CHECK(s.worst_day_state.date == report.instance.horizon.date_of(s.worst_day_state.period));
  double net = 0.0;
  for (const auto& row : report.flows.rows) {
    CHECK(row.net_flow == doctest::Approx(row.total_inflow - row.total_outflow).epsilon(1e-12));
    net += row.net_flow;
  }
  CHECK(net <= 2.0 + 1.0 + 1e-9);
  CHECK(report.flows.rows[0].region_id == "R0");
}

TEST_CASE("JSON report round trip keeps metadata") {
  const ReportBundle report = solved_bundle();
  const std::string text = emit_report(report, ReportFormat::kJson);
  std::istringstream in(text);
  CHECK(parse_report(in) == report);

  const auto doc = nlohmann::json::parse(text);
  CHECK(doc.at("schema_version") == ReportBundle::kSchemaVersion);
  CHECK(doc.at("metadata").at("seed") == 424242);
  CHECK(doc.at("metadata").at("case").at("label") == "IV");
  CHECK(doc.at("scenarios").size() == 2);
  CHECK(doc.at("scenarios")[0].at("status") == "Optimal");

  CHECK_FALSE(report_to_json(report, false).contains("timing"));
  auto future = doc;
  future["schema_version"] = 99;
  CHECK_THROWS_AS(report_from_json(future), InputError);
}

TEST_CASE("CSV flow table has one row per region") {
  const ReportBundle report = solved_bundle();
  std::istringstream csv(emit_report(report, ReportFormat::kCsv));
  std::vector<std::string> lines;
  for (std::string line; std::getline(csv, line);) lines.push_back(line);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "region,total_inflow,total_outflow,net_flow");
  CHECK(lines[1].rfind("R0,", 0) == 0);
  CHECK(lines[2].rfind("R1,", 0) == 0);

  std::ostringstream daily;
  write_daily_shortage_csv(report, daily);
  CHECK(daily.str().rfind("date,period,expected_shortage\n2020-04-01,1,", 0) == 0);
}

TEST_CASE("extract_plan reads one block through the directory") {
  const PlanningInstance inst = small_instance({5}, 0, {0}, 0.5);
  const MilpModel model = single_scenario_model(inst, scenarios_for(inst, {{8.0}}), 0);
  const SolveResult r = branch_and_bound(model);
  const ScenarioPlan plan = extract_plan(model, r.incumbent, 0);
  CHECK(plan.e_at(0, 1) == doctest::Approx(3.0));
  CHECK(plan.y_at(0, 0) == doctest::Approx(5.0));
  CHECK(plan.shortage_sum() == doctest::Approx(3.0));
  CHECK_THROWS_AS(extract_plan(model, std::vector<double>(2, 0.0), 0), ShapeMismatchError);
}

TEST_CASE("strategy names") {
  CHECK(strategy_from_name(strategy_name(SolveStrategy::kMonolithic)) == SolveStrategy::kMonolithic);
  CHECK(strategy_name(SolveStrategy::kPerScenario) == "per_scenario");
  CHECK_THROWS_AS(strategy_from_name("parallel"), InputError);
}
