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
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ventalloc/instance/instance.hpp"
#include "ventalloc/model/builder.hpp"
#include "ventalloc/report/metrics.hpp"
#include "ventalloc/report/plan.hpp"
#include "ventalloc/scenario/scenario.hpp"
#include "ventalloc/solver/solve_types.hpp"

namespace ventalloc {

// kPerScenario solves each scenario block on its own and combines the
// optima; kMonolithic solves the whole extensive form at once.
enum class SolveStrategy { kPerScenario, kMonolithic };

std::string_view strategy_name(SolveStrategy strategy);  // "per_scenario" / "monolithic"
SolveStrategy strategy_from_name(std::string_view name);

// Wall-clock measurements; the only nondeterministic part of a report.
struct RunTiming {
  double total_seconds = 0.0;
  std::vector<double> scenario_seconds;

  bool operator==(const RunTiming&) const = default;
};

struct ReportBundle {
  static constexpr int kSchemaVersion = 1;

  PlanningInstance instance;
  std::uint64_t seed = 0;
  CaseSpec case_spec;
  SolveStrategy strategy = SolveStrategy::kPerScenario;
  SolveLimits limits;
  BigMPolicy big_m = BigMPolicy::kPublished;
  std::vector<double> probabilities;
  std::vector<ScenarioPlan> plans;
  ShortageReport shortage;
  FlowReport flows;
  RunTiming timing;

  bool operator==(const ReportBundle&) const = default;
};

// Computes the metrics over `plans` and records the run metadata.
ReportBundle make_report(const PlanningInstance& instance, const ScenarioSet& scenarios,
                         std::vector<ScenarioPlan> plans, SolveStrategy strategy,
                         const SolveLimits& limits, BigMPolicy big_m, RunTiming timing = {});

enum class ReportFormat { kJson, kCsv };

nlohmann::json report_to_json(const ReportBundle& report, bool include_timing = true);
// Throws InputError on malformed documents or an unsupported schema_version.
ReportBundle report_from_json(const nlohmann::json& doc);

// JSON is the full bundle. CSV is the flow table:
// `region,total_inflow,total_outflow,net_flow`, one row per region.
void emit_report(const ReportBundle& report, ReportFormat format, std::ostream& out);
std::string emit_report(const ReportBundle& report, ReportFormat format);
ReportBundle parse_report(std::istream& in);
ReportBundle load_report_file(const std::string& path);

// `date,period,expected_shortage`, one row per day.
void write_daily_shortage_csv(const ReportBundle& report, std::ostream& out);

}  // namespace ventalloc
