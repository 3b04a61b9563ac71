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

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ventalloc/instance/instance.hpp"
#include "ventalloc/model/milp_model.hpp"
#include "ventalloc/orchestrator/run_config.hpp"
#include "ventalloc/report/report.hpp"
#include "ventalloc/scenario/scenario.hpp"

namespace ventalloc {

// Pipeline stages, in order.
enum class Stage { kConfig, kIngestion, kScenarioGeneration, kModelBuild, kSolve, kReport, kOutput };

std::string_view stage_name(Stage stage);

// Any failure inside run(), tagged with the stage it happened in.
class StageError : public Error {
 public:
  StageError(Stage stage, const std::string& message);
  Stage stage() const { return stage_; }
  // Message of the underlying error, without the stage prefix.
  const std::string& detail() const { return detail_; }

 private:
  Stage stage_;
  std::string detail_;
};

struct RunHooks {
  // Called with (scenarios solved, total) after every finished solve and
  // once with (0, total) before the first.
  std::function<void(int, int)> on_progress;
  // Log destination; empty logs to the process-wide default logger.
  std::string log_file;
};

// Inputs of a run after ingestion and scenario generation.
struct PreparedRun {
  PlanningInstance instance;
  ScenarioSet scenarios;
};

PreparedRun prepare_run(const RunConfig& config, const RunHooks& hooks = {});

// Builds and solves according to config.strategy; returns one plan per
// scenario plus per-scenario wall times.
struct SolvedRun {
  std::vector<ScenarioPlan> plans;
  RunTiming timing;
};
SolvedRun solve_prepared(const PreparedRun& prepared, const RunConfig& config,
                         const RunHooks& hooks = {});

// ingestion -> scenario generation -> model build -> solve -> report ->
// output files. Deterministic for a fixed config unless a time limit
// interrupts a search. Throws StageError.
ReportBundle run(const RunConfig& config, const RunHooks& hooks = {});

// Report for an extensive-form solution computed elsewhere (for example
// by an external solver on an exported model).
ReportBundle report_from_solution(const PreparedRun& prepared, const RunConfig& config,
                                  const MilpModel& extensive_form,
                                  const std::vector<double>& values);

// Writes the report files named in config's outputs.
void write_outputs(const ReportBundle& report, const RunConfig& config);

}  // namespace ventalloc
