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

// Command-line front end: scenario generation, solving, report conversion
// and the HTTP job service.

#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "ventalloc/model/builder.hpp"
#include "ventalloc/orchestrator/http_service.hpp"
#include "ventalloc/orchestrator/job_registry.hpp"
#include "ventalloc/orchestrator/pipeline.hpp"
#include "ventalloc/orchestrator/run_config.hpp"
#include "ventalloc/scenario/scenario.hpp"
#include "ventalloc/solver/model_io.hpp"

namespace {

using namespace ventalloc;

// Flags shared by generate-scenarios and solve; each overrides the same
// field of an optional --config file.
struct RunFlags {
  std::string config_path;
  std::string instance;
  std::string forecast;
  std::string scenarios;
  std::string case_label;
  std::optional<int> scenario_count;
  std::optional<std::uint64_t> seed;
  std::optional<double> time_limit;
  std::optional<double> relative_gap;
  std::optional<std::int64_t> node_limit;
  std::string strategy;
  std::string big_m;
  std::optional<int> workers;
  std::string report_json;
  std::string flows_csv;
  std::string daily_csv;
  std::string scenarios_json;

  void add_input_flags(CLI::App* app) {
    app->add_option("--config", config_path, "RunConfig JSON file");
    app->add_option("--instance", instance, "Planning instance JSON");
    app->add_option("--forecast", forecast, "Forecast CSV (region,date,mean,lower,upper)");
    app->add_option("--case", case_label, "Case preset: I, II, III or IV");
    app->add_option("--scenario-count", scenario_count, "Number of scenarios")->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "Scenario sampling seed");
  }

  void add_solve_flags(CLI::App* app) {
    app->add_option("--scenarios", scenarios, "Scenario set JSON (replaces forecast sampling)");
    app->add_option("--time-limit", time_limit, "Per-solve time limit in seconds")
        ->check(CLI::PositiveNumber);
    app->add_option("--relative-gap", relative_gap, "Relative optimality gap")->check(CLI::NonNegativeNumber);
    app->add_option("--node-limit", node_limit, "Branch-and-bound node limit")->check(CLI::PositiveNumber);
    app->add_option("--strategy", strategy, "per_scenario or monolithic")
        ->check(CLI::IsMember({"per_scenario", "monolithic"}));
    app->add_option("--big-m", big_m, "published or system_bound")
        ->check(CLI::IsMember({"published", "system_bound"}));
    app->add_option("--workers", workers, "Parallel scenario solves")->check(CLI::PositiveNumber);
    app->add_option("--report", report_json, "Write the report JSON here");
    app->add_option("--flows-csv", flows_csv, "Write the flow table CSV here");
    app->add_option("--daily-csv", daily_csv, "Write the daily expected shortage CSV here");
  }

  RunConfig build() const {
    RunConfig config = config_path.empty() ? RunConfig{} : load_run_config(config_path);
    if (config_path.empty()) config.base_dir = std::filesystem::current_path();
    auto here = [](const std::string& p) { return std::filesystem::absolute(p).string(); };
    if (!instance.empty()) config.instance = InputRef{here(instance), std::nullopt};
    if (!forecast.empty()) config.forecast = InputRef{here(forecast), std::nullopt};
    if (!scenarios.empty()) config.scenarios_path = here(scenarios);
    if (!case_label.empty()) config.case_spec = case_preset(case_label);
    if (scenario_count) config.scenario_count = *scenario_count;
    config.case_spec.scenario_count = config.scenario_count;
    if (seed) config.seed = *seed;
    if (time_limit) config.limits.time_limit_seconds = *time_limit;
    if (relative_gap) config.limits.relative_gap = *relative_gap;
    if (node_limit) config.limits.node_limit = *node_limit;
    if (!strategy.empty()) config.strategy = strategy_from_name(strategy);
    if (!big_m.empty()) config.big_m = big_m_policy_from_name(big_m);
    if (workers) config.workers = *workers;
    if (!report_json.empty()) config.report_json_path = here(report_json);
    if (!flows_csv.empty()) config.flows_csv_path = here(flows_csv);
    if (!daily_csv.empty()) config.daily_csv_path = here(daily_csv);
    if (!scenarios_json.empty()) config.scenarios_json_path = here(scenarios_json);
    return config;
  }
};

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

int generate_scenarios_command(const RunFlags& flags, const std::string& out_path) {
  RunConfig config = flags.build();
  config.scenarios_path.reset();
  const PreparedRun prepared = prepare_run(config);
  write_or_print(out_path, scenario_set_to_json(prepared.scenarios).dump(2) + "\n");
  return 0;
}

int solve_command(const RunFlags& flags, const std::string& export_lp, const std::string& export_mps,
                  const std::string& import_solution) {
  const RunConfig config = flags.build();
  if (export_lp.empty() && export_mps.empty() && import_solution.empty()) {
    const ReportBundle report = run(config);
    if (!config.report_json_path) std::cout << emit_report(report, ReportFormat::kJson);
    std::cerr << "total expected shortage " << report.shortage.total << "\n";
    return 0;
  }
  const PreparedRun prepared = prepare_run(config);
  const MilpModel model =
      build_extensive_form(prepared.instance, prepared.scenarios, BuildOptions{config.big_m});
  if (!export_lp.empty()) write_or_print(export_lp, export_model(model, ModelFormat::kLp));
  if (!export_mps.empty()) write_or_print(export_mps, export_model(model, ModelFormat::kMps));
  if (import_solution.empty()) return 0;
  std::ifstream in(import_solution);
  if (!in) throw InputError("cannot open solution file " + import_solution);
  const ReportBundle report = report_from_solution(prepared, config, model, read_solution(in, model));
  write_outputs(report, config);
  if (!config.report_json_path) std::cout << emit_report(report, ReportFormat::kJson);
  return 0;
}

int report_command(const std::string& in_path, const std::string& format, const std::string& out_path) {
  const ReportBundle report = load_report_file(in_path);
  std::ostringstream out;
  if (format == "json") emit_report(report, ReportFormat::kJson, out);
  else if (format == "csv") emit_report(report, ReportFormat::kCsv, out);
  else write_daily_shortage_csv(report, out);
  write_or_print(out_path, out.str());
  return 0;
}

HttpService* g_service = nullptr;

void handle_signal(int) {
  if (g_service) g_service->stop();
}

int serve_command(const ServiceOptions& options, const std::string& run_dir, int workers) {
  JobRegistry registry(run_dir, workers);
  HttpService service(registry, options);
  const int port = service.bind();
  g_service = &service;
  std::signal(SIGINT, handle_signal);
  std::signal(SIGTERM, handle_signal);
  spdlog::info("serving on http://{}:{} (run dir {})", options.host, port, run_dir);
  service.listen();
  g_service = nullptr;
  registry.shutdown();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ventilator allocation planner"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string log_level = "info";
  app.add_option("--log-level", log_level, "trace, debug, info, warn, error or off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}));

  RunFlags gen_flags;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate-scenarios", "Sample demand scenarios from a forecast");
  gen_flags.add_input_flags(gen);
  gen->add_option("--out,-o", gen_out, "Output scenario set JSON (default stdout)");

  RunFlags solve_flags;
  std::string export_lp;
  std::string export_mps;
  std::string import_solution;
  auto* solve = app.add_subcommand("solve", "Build and solve the allocation model, then report");
  solve_flags.add_input_flags(solve);
  solve_flags.add_solve_flags(solve);
  solve->add_option("--scenarios-out", solve_flags.scenarios_json, "Write the scenario set JSON here");
  solve->add_option("--export-lp", export_lp, "Write the extensive form as an LP file instead of solving");
  solve->add_option("--export-mps", export_mps, "Write the extensive form as an MPS file instead of solving");
  solve->add_option("--import-solution", import_solution,
                    "Report on an extensive-form solution file (`name value` lines)");

  std::string report_in;
  std::string report_format = "json";
  std::string report_out;
  auto* report = app.add_subcommand("report", "Convert a report JSON to another format");
  report->add_option("--in,-i", report_in, "Report JSON")->required()->check(CLI::ExistingFile);
  report->add_option("--format,-f", report_format, "json, csv (flow table) or daily")
      ->check(CLI::IsMember({"json", "csv", "daily"}));
  report->add_option("--out,-o", report_out, "Output file (default stdout)");

  ServiceOptions service_options;
  std::string run_dir = "runs";
  int service_workers = 1;
  auto* serve = app.add_subcommand("serve", "Run the HTTP job service");
  serve->add_option("--host", service_options.host, "Bind address");
  serve->add_option("--port", service_options.port, "Port (0 picks a free one)");
  serve->add_option("--run-dir", run_dir, "Directory holding job files");
  serve->add_option("--data-dir", service_options.data_dir, "Base for relative input paths");
  serve->add_option("--workers", service_workers, "Concurrent jobs")->check(CLI::PositiveNumber);
  serve->add_option("--allow-origin", service_options.allow_origin, "CORS origin for browser clients");

  CLI11_PARSE(app, argc, argv);
  spdlog::set_level(spdlog::level::from_str(log_level));

  try {
    if (*gen) return generate_scenarios_command(gen_flags, gen_out);
    if (*solve) return solve_command(solve_flags, export_lp, export_mps, import_solution);
    if (*report) return report_command(report_in, report_format, report_out);
    if (*serve) return serve_command(service_options, run_dir, service_workers);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
