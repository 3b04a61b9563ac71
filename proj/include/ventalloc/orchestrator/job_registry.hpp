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

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "ventalloc/common/error.hpp"
#include "ventalloc/orchestrator/run_config.hpp"
#include "ventalloc/report/report.hpp"

namespace ventalloc {

enum class JobState { kQueued, kRunning, kDone, kFailed };

std::string_view job_state_name(JobState state);  // "Queued", "Running", "Done", "Failed"
JobState job_state_from_name(std::string_view name);

struct JobRecord {
  std::string id;
  JobState state = JobState::kQueued;
  int scenarios_solved = 0;
  int scenarios_total = 0;
  // Run directory file holding the report once Done.
  std::optional<std::string> result_path;
  std::optional<std::string> error_stage;
  std::optional<std::string> error_message;
  // ISO-8601 UTC timestamps.
  std::string submitted_at;
  std::optional<std::string> started_at;
  std::optional<std::string> finished_at;

  bool operator==(const JobRecord&) const = default;
};

nlohmann::json job_record_to_json(const JobRecord& record);
JobRecord job_record_from_json(const nlohmann::json& doc);

class UnknownJobError : public Error {
 public:
  using Error::Error;
};

class JobNotReadyError : public Error {
 public:
  using Error::Error;
};

// Runs submitted configurations on a fixed pool of worker threads. Each job
// owns `<run_dir>/<id>/` holding config.json, status.json, run.log and, once
// Done, report.json. Records left by an earlier process are loaded at
// startup; jobs that were Queued or Running then are marked Failed.
class JobRegistry {
 public:
  JobRegistry(std::filesystem::path run_dir, int workers);
  ~JobRegistry();

  JobRegistry(const JobRegistry&) = delete;
  JobRegistry& operator=(const JobRegistry&) = delete;

  // Validates the config, persists it and queues the job. Throws
  // ValidationError or InputError for unusable configs.
  std::string submit(const RunConfig& config);

  // Throws UnknownJobError.
  JobRecord status(const std::string& id) const;
  std::vector<JobRecord> list() const;
  // Report JSON text. Throws UnknownJobError, or JobNotReadyError unless Done.
  std::string result_json(const std::string& id) const;
  ReportBundle result(const std::string& id) const;

  // Blocks until the job is Done or Failed and returns its record.
  JobRecord wait(const std::string& id) const;

  // Stops accepting work, lets running jobs finish and joins the workers.
  // Queued jobs stay Queued on disk.
  void shutdown();

  const std::filesystem::path& run_dir() const { return run_dir_; }

 private:
  void worker_loop();
  void execute(const std::string& id);
  void update(const std::string& id, const std::function<void(JobRecord&)>& change);
  void persist(const JobRecord& record) const;
  std::filesystem::path job_dir(const std::string& id) const { return run_dir_ / id; }
  void load_existing();

  std::filesystem::path run_dir_;
  mutable std::mutex mutex_;
  mutable std::condition_variable changed_;
  std::condition_variable work_available_;
  std::map<std::string, JobRecord> records_;
  std::map<std::string, RunConfig> configs_;
  std::deque<std::string> queue_;
  std::int64_t next_number_ = 1;
  bool stopping_ = false;
  std::vector<std::thread> workers_;
};

}  // namespace ventalloc
