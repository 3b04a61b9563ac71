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

#include <filesystem>
#include <sstream>
#include <fstream>
#include <set>
#include <thread>
#include <chrono>

#include "doctest.h"
#include "httplib.h"
#include "test_support.hpp"
#include "ventalloc/common/error.hpp"
#include "ventalloc/orchestrator/http_service.hpp"
#include "ventalloc/orchestrator/job_registry.hpp"
#include "ventalloc/orchestrator/pipeline.hpp"
#include "ventalloc/orchestrator/run_config.hpp"
#include "ventalloc/model/builder.hpp"
#include "ventalloc/solver/branch_and_bound.hpp"
#include "ventalloc/solver/model_io.hpp"

using namespace ventalloc;
using ventalloc::testing::fixture;

namespace fs = std::filesystem;

namespace {

RunConfig tiny_config() { return load_run_config(fixture("tiny_run.json")); }

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("ventalloc-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("the tiny fixture runs end to end and conserves units") {
  const RunConfig config = tiny_config();
  std::vector<std::pair<int, int>> progress;
  RunHooks hooks;
  hooks.on_progress = [&](int done, int total) { progress.emplace_back(done, total); };
  const ReportBundle report = run(config, hooks);

  REQUIRE(report.plans.size() == 2);
  CHECK(report.seed == 7);
  CHECK(report.case_spec.label == "IV");
  CHECK(progress.front() == std::pair{0, 2});
  CHECK(progress.back() == std::pair{2, 2});

  const PlanningInstance& inst = report.instance;
  for (const auto& plan : report.plans) {
    CHECK(plan.solve.status == SolveStatus::kOptimal);
    for (int t = 0; t <= inst.num_periods(); ++t) {
      double units = plan.s_at(t);
      for (int n = 0; n < inst.num_regions(); ++n) units += plan.y_at(n, t);
      double expected = inst.central_initial;
      for (int n = 0; n < inst.num_regions(); ++n) expected += inst.usable_initial(n);
      if (t > 0) expected += inst.cumulative_production(t);
      CHECK(units == doctest::Approx(expected).epsilon(1e-9));
    }
  }
}

TEST_CASE("both strategies give the same total") {
  RunConfig config = tiny_config();
  const double per_scenario = run(config).shortage.total;
  config.strategy = SolveStrategy::kMonolithic;
  const double monolithic = run(config).shortage.total;
  CHECK(monolithic == doctest::Approx(per_scenario).epsilon(1e-9));
}

TEST_CASE("repeat runs agree once timing is dropped") {
  RunConfig config = tiny_config();
  config.workers = 2;
  const auto a = report_to_json(run(config), false);
  const auto b = report_to_json(run(config), false);
  CHECK(a == b);
}

TEST_CASE("an unreadable forecast fails at ingestion") {
  RunConfig config = tiny_config();
  config.forecast = InputRef{std::nullopt, std::string("region,date,mean,lower,upper\nNY,2020-04-01,1,0,2\n")};
  try {
    run(config);
    FAIL("expected StageError");
  } catch (const StageError& e) {
    CHECK(e.stage() == Stage::kIngestion);
    CHECK(stage_name(e.stage()) == "ingestion");
    CHECK(e.detail().find("missing") != std::string::npos);
  }
}

TEST_CASE("run config validation lists every problem") {
  RunConfig config = tiny_config();
  config.scenario_count = 0;
  config.workers = 0;
  config.limits.time_limit_seconds = -1;
  config.instance = InputRef{std::string("no-such-file.json"), std::nullopt};
  try {
    validate_run_config(config);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.issues().size() >= 4);
  }
  CHECK_NOTHROW(validate_run_config(tiny_config()));
  CHECK_THROWS_AS(run_config_from_json(nlohmann::json::parse(R"({"schema_version": 1, "seed": "x"})")),
                  InputError);
}

TEST_CASE("run config JSON round trip") {
  const RunConfig config = tiny_config();
  CHECK(run_config_from_json(run_config_to_json(config), config.base_dir) == config);
}

TEST_CASE("outputs are written where the config says") {
  TempDir dir;
  RunConfig config = tiny_config();
  config.report_json_path = (dir.path() / "report.json").string();
  config.flows_csv_path = (dir.path() / "flows.csv").string();
  config.daily_csv_path = (dir.path() / "daily.csv").string();
  config.scenarios_json_path = (dir.path() / "scenarios.json").string();
  const ReportBundle report = run(config);
  CHECK(load_report_file(*config.report_json_path) == report);
  CHECK(read_file(*config.flows_csv_path).rfind("region,total_inflow", 0) == 0);
  CHECK(read_file(*config.daily_csv_path).rfind("date,period,expected_shortage", 0) == 0);
  CHECK(load_scenario_file(*config.scenarios_json_path).seed == 7);
}

TEST_CASE("job lifecycle") {
  TempDir dir;
  JobRegistry registry(dir.path(), 1);
  const std::string first = registry.submit(tiny_config());
  const std::string second = registry.submit(tiny_config());
  CHECK(first != second);

  const JobRecord queued = registry.status(second);
  CHECK((queued.state == JobState::kQueued || queued.state == JobState::kRunning ||
         queued.state == JobState::kDone));
  if (queued.state != JobState::kDone) CHECK_THROWS_AS(registry.result_json(second), JobNotReadyError);

  const JobRecord done = registry.wait(first);
  CHECK(done.state == JobState::kDone);
  CHECK(done.scenarios_solved == 2);
  CHECK(done.scenarios_total == 2);
  CHECK(done.started_at.has_value());
  CHECK(done.finished_at.has_value());
  CHECK(registry.result(first).shortage.total >= 0.0);
  CHECK(fs::exists(dir.path() / first / "report.json"));
  CHECK(fs::exists(dir.path() / first / "run.log"));
  CHECK(registry.wait(second).state == JobState::kDone);
  CHECK(registry.list().size() == 2);
  CHECK_THROWS_AS(registry.status("job-999999"), UnknownJobError);
  CHECK(job_record_from_json(job_record_to_json(done)) == done);
}

TEST_CASE("failed jobs record the stage") {
  TempDir dir;
  JobRegistry registry(dir.path(), 1);
  RunConfig config = tiny_config();
  config.forecast = InputRef{std::nullopt, std::string("region,date,mean,lower,upper\n")};
  const JobRecord record = registry.wait(registry.submit(config));
  CHECK(record.state == JobState::kFailed);
  CHECK(record.error_stage == "ingestion");
  CHECK_THROWS_AS(registry.result_json(record.id), JobNotReadyError);
}

TEST_CASE("job ids continue after a restart") {
  TempDir dir;
  std::string first;
  {
    JobRegistry registry(dir.path(), 1);
    first = registry.submit(tiny_config());
    registry.wait(first);
  }
  JobRegistry reopened(dir.path(), 1);
  CHECK(reopened.status(first).state == JobState::kDone);
  const std::string next = reopened.submit(tiny_config());
  CHECK(next > first);
  reopened.wait(next);
}

TEST_CASE("HTTP routes") {
  TempDir dir;
  JobRegistry registry(dir.path(), 1);
  ServiceOptions options;
  options.port = 0;
  options.data_dir = fs::path(fixture(""));
  options.allow_origin = "*";
  HttpService service(registry, options);
  const int port = service.bind();
  std::thread server([&] { service.listen(); });

  httplib::Client client("127.0.0.1", port);
  const std::string config = read_file(fixture("tiny_run.json"));

  auto cases = client.Get("/meta/cases");
  REQUIRE(cases);
  CHECK(cases->status == 200);
  CHECK(nlohmann::json::parse(cases->body).at("cases").size() == 4);
  CHECK(cases->get_header_value("Access-Control-Allow-Origin") == "*");

  auto created = client.Post("/jobs", config, "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  const auto body = nlohmann::json::parse(created->body);
  CHECK(body.at("schema_version") == 1);
  const std::string id = body.at("id");

  auto early = client.Get("/jobs/" + id + "/report");
  REQUIRE(early);
  CHECK((early->status == 409 || early->status == 200));

  registry.wait(id);
  auto status = client.Get("/jobs/" + id);
  REQUIRE(status);
  CHECK(status->status == 200);
  CHECK(nlohmann::json::parse(status->body).at("state") == "Done");

  auto report = client.Get("/jobs/" + id + "/report");
  REQUIRE(report);
  CHECK(report->status == 200);
  CHECK(nlohmann::json::parse(report->body).at("schema_version") == ReportBundle::kSchemaVersion);

  auto missing = client.Get("/jobs/job-424242");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  auto invalid = client.Post("/jobs", R"({"schema_version": 1, "scenario_count": 0})", "application/json");
  REQUIRE(invalid);
  CHECK(invalid->status == 400);
  CHECK(nlohmann::json::parse(invalid->body).at("error").contains("issues"));

  auto garbage = client.Post("/jobs", "not json", "application/json");
  REQUIRE(garbage);
  CHECK(garbage->status == 400);

  auto listing = client.Get("/jobs");
  REQUIRE(listing);
  CHECK(listing->status == 200);

  service.stop();
  server.join();
}

TEST_CASE("a solution computed elsewhere becomes a report") {
  const RunConfig config = tiny_config();
  const PreparedRun prepared = prepare_run(config);
  const MilpModel model = build_extensive_form(prepared.instance, prepared.scenarios);
  std::ostringstream lp;
  export_model(model, ModelFormat::kLp, lp);
  std::istringstream lp_in(lp.str());
  const SolveResult external = branch_and_bound(read_lp(lp_in));
  REQUIRE(external.has_incumbent());

  std::ostringstream file;
  write_solution(file, model, external.incumbent);
  std::istringstream file_in(file.str());
  const ReportBundle report = report_from_solution(prepared, config, model, read_solution(file_in, model));
  CHECK(report.shortage.total == doctest::Approx(run(config).shortage.total).epsilon(1e-9));
  for (const auto& plan : report.plans) {
    CHECK(plan.solve.status == SolveStatus::kFeasibleTimeLimit);
    CHECK_FALSE(plan.solve.best_bound.has_value());
  }

  auto broken = external.incumbent;
  broken[model.column({VarKind::kY, 0, 1, 0})] += 5.0;
  CHECK_THROWS_AS(report_from_solution(prepared, config, model, broken), Error);
}

TEST_CASE("job state and progress never move backward") {
  TempDir dir;
  JobRegistry registry(dir.path(), 1);
  RunConfig config = tiny_config();
  config.scenario_count = 6;
  const std::string id = registry.submit(config);
  std::vector<JobRecord> seen;
  for (;;) {
    seen.push_back(registry.status(id));
    if (seen.back().state == JobState::kDone || seen.back().state == JobState::kFailed) break;
    std::this_thread::sleep_for(std::chrono::microseconds(200));
  }
  CHECK(seen.back().state == JobState::kDone);
  for (std::size_t i = 1; i < seen.size(); ++i) {
    CHECK(static_cast<int>(seen[i].state) >= static_cast<int>(seen[i - 1].state));
    CHECK(seen[i].scenarios_solved >= seen[i - 1].scenarios_solved);
  }
}

TEST_CASE("concurrent jobs match isolated runs") {
  TempDir dir;
  JobRegistry registry(dir.path(), 3);
  std::vector<std::pair<std::string, RunConfig>> jobs;
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    RunConfig config = tiny_config();
    config.seed = seed;
    config.scenario_count = 4;
    jobs.emplace_back(registry.submit(config), config);
  }
  for (const auto& [id, config] : jobs) {
    REQUIRE(registry.wait(id).state == JobState::kDone);
    CHECK(report_to_json(registry.result(id), false) == report_to_json(run(config), false));
  }
}
