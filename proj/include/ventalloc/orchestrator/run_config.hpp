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
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "ventalloc/model/builder.hpp"
#include "ventalloc/report/report.hpp"
#include "ventalloc/scenario/scenario.hpp"
#include "ventalloc/solver/solve_types.hpp"

namespace ventalloc {

// Where a run reads one of its inputs: a file path or the document inline.
// Relative paths resolve against RunConfig::base_dir.
struct InputRef {
  std::optional<std::string> path;
  std::optional<std::string> inline_text;  // JSON text for instances, CSV for forecasts

  bool operator==(const InputRef&) const = default;
};

// Everything one end-to-end run needs. JSON layout (schema_version 1):
//
//   { "schema_version": 1,
//     "instance": "path.json" | { ...instance document... },
//     "forecast": "path.csv" | { "csv": "region,date,..." },
//     "scenarios": "path.json",            optional, replaces forecast + case
//     "case": "IV" | { "preset"?: "IV", "right_tail_prob": ... },
//     "scenario_count": 24, "seed": 1,
//     "limits": { "time_limit_seconds", "relative_gap", "absolute_gap", "node_limit" },
//     "strategy": "per_scenario" | "monolithic",
//     "big_m_policy": "published" | "system_bound",
//     "workers": 1,
//     "outputs": { "report_json", "flows_csv", "daily_csv", "scenarios_json" } }
struct RunConfig {
  static constexpr int kSchemaVersion = 1;

  InputRef instance;
  InputRef forecast;
  std::optional<std::string> scenarios_path;
  CaseSpec case_spec = case_preset("I");
  int scenario_count = 24;
  std::uint64_t seed = 1;
  SolveLimits limits;
  SolveStrategy strategy = SolveStrategy::kPerScenario;
  BigMPolicy big_m = BigMPolicy::kPublished;
  int workers = 1;

  std::optional<std::string> report_json_path;
  std::optional<std::string> flows_csv_path;
  std::optional<std::string> daily_csv_path;
  std::optional<std::string> scenarios_json_path;

  std::filesystem::path base_dir = ".";

  // `path` made absolute against base_dir.
  std::filesystem::path resolve(const std::string& path) const;

  bool operator==(const RunConfig&) const = default;
};

// Structural parse; throws InputError naming the offending field.
RunConfig run_config_from_json(const nlohmann::json& doc,
                               const std::filesystem::path& base_dir = ".");
nlohmann::json run_config_to_json(const RunConfig& config);
// Relative paths inside the file resolve against the file's directory.
RunConfig load_run_config(const std::string& path);

// Throws ValidationError listing every problem: scenario_count < 1,
// workers < 1, limits out of range, input references that are missing or
// name files that do not exist.
void validate_run_config(const RunConfig& config);

}  // namespace ventalloc
