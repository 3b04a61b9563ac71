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

#include "ventalloc/orchestrator/job_registry.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "ventalloc/orchestrator/pipeline.hpp"

namespace ventalloc {
namespace {

using nlohmann::json;

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t seconds = std::chrono::system_clock::to_time_t(now);
  const auto millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  std::tm tm{};
  gmtime_r(&seconds, &tm);
  char buffer[40];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%S", &tm);
  char out[48];
  std::snprintf(out, sizeof(out), "%s.%03dZ", buffer, static_cast<int>(millis));
  return out;
}

void write_atomically(const std::filesystem::path& path, const std::string& text) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cannot write " + tmp.string());
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

template <typename T>
json optional_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

std::optional<std::string> optional_string(const json& doc, const char* key) {
  if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
  return doc.at(key).get<std::string>();
}

constexpr int kJobRecordSchemaVersion = 1;

}  // namespace

std::string_view job_state_name(JobState state) {
  switch (state) {
    case JobState::kQueued: return "Queued";
    case JobState::kRunning: return "Running";
    case JobState::kDone: return "Done";
    case JobState::kFailed: return "Failed";
  }
  return "Unknown";
}

JobState job_state_from_name(std::string_view name) {
  for (auto s : {JobState::kQueued, JobState::kRunning, JobState::kDone, JobState::kFailed}) {
    if (job_state_name(s) == name) return s;
  }
  throw InputError("unknown job state '" + std::string(name) + "'");
}

json job_record_to_json(const JobRecord& r) {
  return {{"schema_version", kJobRecordSchemaVersion},
          {"id", r.id},
          {"state", job_state_name(r.state)},
          {"progress", {{"solved", r.scenarios_solved}, {"total", r.scenarios_total}}},
          {"result", optional_json(r.result_path)},
          {"error", r.error_message ? json{{"stage", optional_json(r.error_stage)},
                                           {"message", *r.error_message}}
                                    : json(nullptr)},
          {"submitted_at", r.submitted_at},
          {"started_at", optional_json(r.started_at)},
          {"finished_at", optional_json(r.finished_at)}};
}

JobRecord job_record_from_json(const json& doc) {
  try {
    JobRecord r;
    r.id = doc.at("id").get<std::string>();
    r.state = job_state_from_name(doc.at("state").get<std::string>());
    r.scenarios_solved = doc.at("progress").at("solved").get<int>();
    r.scenarios_total = doc.at("progress").at("total").get<int>();
    r.result_path = optional_string(doc, "result");
    if (doc.contains("error") && !doc.at("error").is_null()) {
      r.error_stage = optional_string(doc.at("error"), "stage");
      r.error_message = doc.at("error").at("message").get<std::string>();
    }
    r.submitted_at = doc.at("submitted_at").get<std::string>();
    r.started_at = optional_string(doc, "started_at");
    r.finished_at = optional_string(doc, "finished_at");
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed job record: ") + e.what());
  }
}

JobRegistry::JobRegistry(std::filesystem::path run_dir, int workers) : run_dir_(std::move(run_dir)) {
  std::filesystem::create_directories(run_dir_);
  load_existing();
  for (int i = 0; i < std::max(1, workers); ++i) workers_.emplace_back([this] { worker_loop(); });
}

JobRegistry::~JobRegistry() { shutdown(); }

void JobRegistry::load_existing() {
  for (const auto& entry : std::filesystem::directory_iterator(run_dir_)) {
    const std::string name = entry.path().filename().string();
    long long number = 0;
    if (std::sscanf(name.c_str(), "job-%lld", &number) == 1) {
      next_number_ = std::max<std::int64_t>(next_number_, number + 1);
    }
    const auto status_file = entry.path() / "status.json";
    if (!std::filesystem::exists(status_file)) continue;
    try {
      JobRecord record = job_record_from_json(json::parse(read_file(status_file)));
      if (record.state == JobState::kQueued || record.state == JobState::kRunning) {
        record.state = JobState::kFailed;
        record.error_message = "interrupted by a service restart";
        record.finished_at = utc_now();
        persist(record);
      }
      records_[record.id] = record;
    } catch (const std::exception&) {
      // Unreadable leftovers are not ours to fix; skip them.
    }
  }
}

std::string JobRegistry::submit(const RunConfig& config) {
  validate_run_config(config);
  std::string id;
  {
    std::lock_guard lock(mutex_);
    if (stopping_) throw Error("job registry is shutting down");
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "job-%06lld", static_cast<long long>(next_number_++));
    id = buffer;
  }
  std::filesystem::create_directories(job_dir(id));
  RunConfig stored = config;
  json config_doc = run_config_to_json(stored);
  config_doc["base_dir"] = std::filesystem::absolute(config.base_dir).string();
  write_atomically(job_dir(id) / "config.json", config_doc.dump(2) + "\n");

  JobRecord record;
  record.id = id;
  record.scenarios_total = config.scenario_count;
  record.submitted_at = utc_now();
  persist(record);
  {
    std::lock_guard lock(mutex_);
    records_[id] = record;
    configs_[id] = config;
    queue_.push_back(id);
  }
  work_available_.notify_one();
  changed_.notify_all();
  return id;
}

JobRecord JobRegistry::status(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = records_.find(id);
  if (it == records_.end()) throw UnknownJobError("unknown job '" + id + "'");
  return it->second;
}

std::vector<JobRecord> JobRegistry::list() const {
  std::lock_guard lock(mutex_);
  std::vector<JobRecord> out;
  for (const auto& [id, record] : records_) out.push_back(record);
  return out;
}

std::string JobRegistry::result_json(const std::string& id) const {
  const JobRecord record = status(id);
  if (record.state != JobState::kDone) {
    throw JobNotReadyError("job '" + id + "' is " + std::string(job_state_name(record.state)) +
                           "; result not ready");
  }
  return read_file(run_dir_ / *record.result_path);
}

ReportBundle JobRegistry::result(const std::string& id) const {
  std::istringstream in(result_json(id));
  return parse_report(in);
}

JobRecord JobRegistry::wait(const std::string& id) const {
  std::unique_lock lock(mutex_);
  if (!records_.count(id)) throw UnknownJobError("unknown job '" + id + "'");
  changed_.wait(lock, [&] {
    const JobState s = records_.at(id).state;
    return s == JobState::kDone || s == JobState::kFailed;
  });
  return records_.at(id);
}

void JobRegistry::shutdown() {
  {
    std::lock_guard lock(mutex_);
    if (stopping_ && workers_.empty()) return;
    stopping_ = true;
  }
  work_available_.notify_all();
  for (auto& worker : workers_) {
    if (worker.joinable()) worker.join();
  }
  workers_.clear();
}

void JobRegistry::worker_loop() {
  for (;;) {
    std::string id;
    {
      std::unique_lock lock(mutex_);
      work_available_.wait(lock, [&] { return stopping_ || !queue_.empty(); });
      if (stopping_) return;
      id = queue_.front();
      queue_.pop_front();
    }
    execute(id);
  }
}

void JobRegistry::update(const std::string& id, const std::function<void(JobRecord&)>& change) {
  JobRecord snapshot;
  {
    std::lock_guard lock(mutex_);
    JobRecord& record = records_.at(id);
    change(record);
    snapshot = record;
  }
  persist(snapshot);
  changed_.notify_all();
}

void JobRegistry::persist(const JobRecord& record) const {
  write_atomically(job_dir(record.id) / "status.json", job_record_to_json(record).dump(2) + "\n");
}

void JobRegistry::execute(const std::string& id) {
  RunConfig config;
  {
    std::lock_guard lock(mutex_);
    config = configs_.at(id);
  }
  update(id, [](JobRecord& r) {
    r.state = JobState::kRunning;
    r.started_at = utc_now();
  });

  RunHooks hooks;
  hooks.log_file = (job_dir(id) / "run.log").string();
  hooks.on_progress = [this, &id](int solved, int total) {
    update(id, [&](JobRecord& r) {
      r.scenarios_total = total;
      r.scenarios_solved = std::max(r.scenarios_solved, solved);
    });
  };
  // The job owns its outputs; paths in the submitted config are not written.
  config.report_json_path.reset();
  config.flows_csv_path.reset();
  config.daily_csv_path.reset();
  config.scenarios_json_path.reset();
  try {
    const ReportBundle report = run(config, hooks);
    write_atomically(job_dir(id) / "report.json", emit_report(report, ReportFormat::kJson));
    write_atomically(job_dir(id) / "flows.csv", emit_report(report, ReportFormat::kCsv));
    update(id, [&](JobRecord& r) {
      r.state = JobState::kDone;
      r.result_path = id + "/report.json";
      r.finished_at = utc_now();
    });
  } catch (const StageError& e) {
    update(id, [&](JobRecord& r) {
      r.state = JobState::kFailed;
      r.error_stage = std::string(stage_name(e.stage()));
      r.error_message = e.detail();
      r.finished_at = utc_now();
    });
  } catch (const std::exception& e) {
    update(id, [&](JobRecord& r) {
      r.state = JobState::kFailed;
      r.error_message = e.what();
      r.finished_at = utc_now();
    });
  }
  {
    std::lock_guard lock(mutex_);
    configs_.erase(id);
  }
}

}  // namespace ventalloc
