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

#include "ventalloc/orchestrator/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <spdlog/sinks/basic_file_sink.h>
#include <spdlog/spdlog.h>

#include "ventalloc/model/builder.hpp"
#include "ventalloc/model/names.hpp"
#include "ventalloc/scenario/forecast.hpp"
#include "ventalloc/solver/branch_and_bound.hpp"
#include "ventalloc/solver/feasibility.hpp"

namespace ventalloc {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::shared_ptr<spdlog::logger> make_logger(const RunHooks& hooks) {
  if (hooks.log_file.empty()) return spdlog::default_logger();
  auto sink = std::make_shared<spdlog::sinks::basic_file_sink_mt>(hooks.log_file);
  auto logger = std::make_shared<spdlog::logger>("run", sink);
  logger->set_level(spdlog::level::info);
  logger->flush_on(spdlog::level::info);
  return logger;
}

// Runs `body` and rethrows anything it throws as a StageError for `stage`.
template <typename F>
auto in_stage(Stage stage, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, e.what());
  }
}

PlanningInstance load_instance(const RunConfig& config) {
  if (config.instance.path) return load_instance_file(config.resolve(*config.instance.path).string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(*config.instance.inline_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("inline instance: ") + e.what());
  }
  return validate_instance(instance_from_json(doc));
}

ForecastSet load_forecasts(const RunConfig& config, const PlanningInstance& instance) {
  if (config.forecast.path) {
    return load_forecast_file(config.resolve(*config.forecast.path).string(), instance.horizon,
                              instance.regions);
  }
  std::istringstream in(*config.forecast.inline_text);
  return load_forecast(in, instance.horizon, instance.regions);
}

void log_big_m_bindings(spdlog::logger& log, const MilpModel& model,
                        const std::vector<double>& values, int scenario) {
  const auto bindings = audit_big_m(model, values);
  if (bindings.empty()) return;
  std::vector<std::string> ids = model.region_ids();
  log.warn("scenario {}: big-M constant binds on {} row(s), first {}", scenario, bindings.size(),
           encode_row_name(bindings.front().tag, ids));
}

void check_solution(const SolveResult& result, int scenario) {
  if (!result.has_incumbent()) {
    throw Error("scenario " + std::to_string(scenario) + " has no solution (" +
                std::string(status_name(result.status)) + ")");
  }
}

SolvedRun solve_per_scenario(const PreparedRun& prepared, const RunConfig& config,
                             const RunHooks& hooks, spdlog::logger& log) {
  const int count = prepared.scenarios.size();
  SolvedRun solved;
  solved.plans.resize(count);
  solved.timing.scenario_seconds.assign(count, 0.0);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<int> next{0};
  std::atomic<int> done{0};
  std::mutex progress_mutex;
  const BuildOptions options{config.big_m};

  auto worker = [&] {
    for (int w = next++; w < count; w = next++) {
      try {
        const auto start = Clock::now();
        const MilpModel model = in_stage(Stage::kModelBuild, [&] {
          return single_scenario_model(prepared.instance, prepared.scenarios, w, options);
        });
        in_stage(Stage::kSolve, [&] {
          const SolveResult result = branch_and_bound(model, config.limits);
          check_solution(result, w);
          ScenarioPlan plan = extract_plan(model, result.incumbent, w);
          plan.solve = {result.status, result.best_bound, result.node_count};
          solved.plans[w] = std::move(plan);
          log.info("scenario {}: {} objective {} bound {} nodes {} in {:.3f}s", w,
                   status_name(result.status), result.objective, result.best_bound,
                   result.node_count, result.wall_time_seconds);
          log_big_m_bindings(log, model, result.incumbent, w);
        });
        solved.timing.scenario_seconds[w] = seconds_since(start);
      } catch (...) {
        errors[w] = std::current_exception();
      }
      const int finished = ++done;
      if (hooks.on_progress) {
        std::lock_guard lock(progress_mutex);
        hooks.on_progress(finished, count);
      }
    }
  };

  const int threads = std::max(1, std::min(config.workers, count));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return solved;
}

SolvedRun solve_monolithic(const PreparedRun& prepared, const RunConfig& config,
                           const RunHooks& hooks, spdlog::logger& log) {
  const int count = prepared.scenarios.size();
  const auto start = Clock::now();
  const MilpModel model = in_stage(Stage::kModelBuild, [&] {
    return build_extensive_form(prepared.instance, prepared.scenarios, BuildOptions{config.big_m});
  });
  return in_stage(Stage::kSolve, [&] {
    const SolveResult result = branch_and_bound(model, config.limits);
    check_solution(result, -1);
    log.info("extensive form: {} objective {} bound {} nodes {} in {:.3f}s",
             status_name(result.status), result.objective, result.best_bound, result.node_count,
             result.wall_time_seconds);
    SolvedRun solved;
    for (int w = 0; w < count; ++w) {
      ScenarioPlan plan = extract_plan(model, result.incumbent, w);
      plan.solve = {result.status, std::nullopt, result.node_count};
      solved.plans.push_back(std::move(plan));
      log_big_m_bindings(log, model, result.incumbent, w);
    }
    solved.timing.scenario_seconds.assign(count, 0.0);
    solved.timing.total_seconds = seconds_since(start);
    if (hooks.on_progress) hooks.on_progress(count, count);
    return solved;
  });
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace

std::string_view stage_name(Stage stage) {
  switch (stage) {
    case Stage::kConfig: return "config";
    case Stage::kIngestion: return "ingestion";
    case Stage::kScenarioGeneration: return "scenario_generation";
    case Stage::kModelBuild: return "model_build";
    case Stage::kSolve: return "solve";
    case Stage::kReport: return "report";
    case Stage::kOutput: return "output";
  }
  return "unknown";
}

StageError::StageError(Stage stage, const std::string& message)
    : Error(std::string(stage_name(stage)) + " stage: " + message), stage_(stage), detail_(message) {}

PreparedRun prepare_run(const RunConfig& config, const RunHooks& hooks) {
  auto log = make_logger(hooks);
  in_stage(Stage::kConfig, [&] { validate_run_config(config); });
  PreparedRun prepared;
  prepared.instance = in_stage(Stage::kIngestion, [&] { return load_instance(config); });
  log->info("instance: {} regions, {} periods from {}", prepared.instance.num_regions(),
            prepared.instance.num_periods(), prepared.instance.horizon.start_date.to_iso());
  if (config.scenarios_path) {
    prepared.scenarios = in_stage(Stage::kIngestion, [&] {
      return load_scenario_file(config.resolve(*config.scenarios_path).string());
    });
  } else {
    const ForecastSet forecasts =
        in_stage(Stage::kIngestion, [&] { return load_forecasts(config, prepared.instance); });
    prepared.scenarios = in_stage(Stage::kScenarioGeneration, [&] {
      CaseSpec spec = config.case_spec;
      spec.scenario_count = config.scenario_count;
      return generate_scenarios(forecasts, prepared.instance.horizon, spec, config.seed);
    });
  }
  in_stage(Stage::kScenarioGeneration,
           [&] { check_compatible(prepared.instance, prepared.scenarios); });
  log->info("scenarios: {} (case {}, seed {})", prepared.scenarios.size(),
            prepared.scenarios.case_spec.label, prepared.scenarios.seed);
  return prepared;
}

SolvedRun solve_prepared(const PreparedRun& prepared, const RunConfig& config,
                         const RunHooks& hooks) {
  auto log = make_logger(hooks);
  if (hooks.on_progress) hooks.on_progress(0, prepared.scenarios.size());
  const auto start = Clock::now();
  SolvedRun solved = config.strategy == SolveStrategy::kPerScenario
                         ? solve_per_scenario(prepared, config, hooks, *log)
                         : solve_monolithic(prepared, config, hooks, *log);
  solved.timing.total_seconds = seconds_since(start);
  return solved;
}

ReportBundle run(const RunConfig& config, const RunHooks& hooks) {
  const auto start = Clock::now();
  const PreparedRun prepared = prepare_run(config, hooks);
  SolvedRun solved = solve_prepared(prepared, config, hooks);
  ReportBundle report = in_stage(Stage::kReport, [&] {
    return make_report(prepared.instance, prepared.scenarios, std::move(solved.plans),
                       config.strategy, config.limits, config.big_m, std::move(solved.timing));
  });
  report.timing.total_seconds = seconds_since(start);
  in_stage(Stage::kOutput, [&] {
    write_outputs(report, config);
    if (config.scenarios_json_path) {
      write_text_file(config.resolve(*config.scenarios_json_path),
                      scenario_set_to_json(prepared.scenarios).dump(2) + "\n");
    }
  });
  auto log = make_logger(hooks);
  log->info("total expected shortage {} (worst day {} on {})", report.shortage.total,
            report.shortage.worst_day.value, report.shortage.worst_day.date.to_iso());
  return report;
}

ReportBundle report_from_solution(const PreparedRun& prepared, const RunConfig& config,
                                  const MilpModel& extensive_form,
                                  const std::vector<double>& values) {
  return in_stage(Stage::kReport, [&] {
    const auto violations = check_feasibility(extensive_form, values, 1e-6);
    if (!violations.empty()) {
      throw Error("imported solution is infeasible: " + violations.front().describe() + " (" +
                  std::to_string(violations.size()) + " violation(s))");
    }
    std::vector<ScenarioPlan> plans;
    for (int w = 0; w < prepared.scenarios.size(); ++w) {
      ScenarioPlan plan = extract_plan(extensive_form, values, w);
      plan.solve = {SolveStatus::kFeasibleTimeLimit, std::nullopt, 0};
      plans.push_back(std::move(plan));
    }
    return make_report(prepared.instance, prepared.scenarios, std::move(plans),
                       SolveStrategy::kMonolithic, config.limits, config.big_m);
  });
}

void write_outputs(const ReportBundle& report, const RunConfig& config) {
  if (config.report_json_path) {
    write_text_file(config.resolve(*config.report_json_path), emit_report(report, ReportFormat::kJson));
  }
  if (config.flows_csv_path) {
    write_text_file(config.resolve(*config.flows_csv_path), emit_report(report, ReportFormat::kCsv));
  }
  if (config.daily_csv_path) {
    std::ostringstream out;
    write_daily_shortage_csv(report, out);
    write_text_file(config.resolve(*config.daily_csv_path), out.str());
  }
}

}  // namespace ventalloc
