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

#include <filesystem>
#include <memory>
#include <string>

#include "ventalloc/orchestrator/job_registry.hpp"

namespace ventalloc {

struct ServiceOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  // Relative input paths in submitted configs resolve against this.
  std::filesystem::path data_dir = ".";
  // Value of Access-Control-Allow-Origin; empty disables CORS headers.
  std::string allow_origin;
};

// JSON API over a JobRegistry:
//   POST /jobs              RunConfig -> {"id"}              201
//   GET  /jobs              every JobRecord
//   GET  /jobs/{id}         JobRecord                        404 if unknown
//   GET  /jobs/{id}/report  report JSON                      409 until Done
//   GET  /meta/cases        the four case presets
// Errors are {"schema_version", "error": {"kind", "message", "issues"?}}.
class HttpService {
 public:
  HttpService(JobRegistry& registry, ServiceOptions options);
  ~HttpService();

  // Binds the configured port (0 picks a free one) and returns the bound
  // port. Throws Error if binding fails.
  int bind();
  // Serves until stop(); call bind() first.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ventalloc
