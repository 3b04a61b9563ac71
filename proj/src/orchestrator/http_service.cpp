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

#include "ventalloc/orchestrator/http_service.hpp"

#include <httplib.h>

#include "json.hpp"
#include "ventalloc/scenario/scenario.hpp"

namespace ventalloc {
namespace {

using nlohmann::json;

constexpr int kApiSchemaVersion = 1;
constexpr const char* kJsonType = "application/json";

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(2) + "\n", kJsonType);
}

void send_error(httplib::Response& res, int status, const std::string& kind,
                const std::string& message, json issues = nullptr) {
  json error = {{"kind", kind}, {"message", message}};
  if (!issues.is_null()) error["issues"] = std::move(issues);
  send_json(res, status, {{"schema_version", kApiSchemaVersion}, {"error", error}});
}

json record_payload(const JobRecord& record) {
  json doc = job_record_to_json(record);
  doc["schema_version"] = kApiSchemaVersion;
  return doc;
}

}  // namespace

struct HttpService::Impl {
  JobRegistry& registry;
  ServiceOptions options;
  httplib::Server server;
  int bound_port = -1;

  Impl(JobRegistry& r, ServiceOptions o) : registry(r), options(std::move(o)) {}

  void install_routes() {
    if (!options.allow_origin.empty()) {
      server.set_default_headers({{"Access-Control-Allow-Origin", options.allow_origin},
                                  {"Access-Control-Allow-Headers", "Content-Type"},
                                  {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
      server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
        res.status = 204;
      });
    }

    server.Post("/jobs", [this](const httplib::Request& req, httplib::Response& res) {
      json body;
      try {
        body = json::parse(req.body);
      } catch (const json::parse_error& e) {
        send_error(res, 400, "InputError", std::string("body is not valid JSON: ") + e.what());
        return;
      }
      try {
        const RunConfig config = run_config_from_json(body, options.data_dir);
        const std::string id = registry.submit(config);
        send_json(res, 201, {{"schema_version", kApiSchemaVersion}, {"id", id}});
      } catch (const ValidationError& e) {
        json issues = json::array();
        for (const auto& issue : e.issues()) {
          issues.push_back(
              {{"field", issue.field}, {"location", issue.location}, {"message", issue.message}});
        }
        send_error(res, 400, "ValidationError", e.what(), issues);
      } catch (const InputError& e) {
        send_error(res, 400, "InputError", e.what());
      } catch (const std::exception& e) {
        send_error(res, 500, "Error", e.what());
      }
    });

    server.Get("/jobs", [this](const httplib::Request&, httplib::Response& res) {
      json jobs = json::array();
      for (const JobRecord& record : registry.list()) jobs.push_back(job_record_to_json(record));
      send_json(res, 200, {{"schema_version", kApiSchemaVersion}, {"jobs", jobs}});
    });

    server.Get(R"(/jobs/([A-Za-z0-9_-]+))", [this](const httplib::Request& req, httplib::Response& res) {
      try {
        send_json(res, 200, record_payload(registry.status(req.matches[1])));
      } catch (const UnknownJobError& e) {
        send_error(res, 404, "UnknownJob", e.what());
      }
    });

    server.Get(R"(/jobs/([A-Za-z0-9_-]+)/report)",
               [this](const httplib::Request& req, httplib::Response& res) {
                 try {
                   res.status = 200;
                   res.set_content(registry.result_json(req.matches[1]), kJsonType);
                 } catch (const UnknownJobError& e) {
                   send_error(res, 404, "UnknownJob", e.what());
                 } catch (const JobNotReadyError& e) {
                   send_error(res, 409, "NotReady", e.what());
                 } catch (const std::exception& e) {
                   send_error(res, 500, "Error", e.what());
                 }
               });

    server.Get("/meta/cases", [](const httplib::Request&, httplib::Response& res) {
      json cases = json::array();
      for (const CaseSpec& spec : case_presets()) cases.push_back(case_to_json(spec));
      send_json(res, 200, {{"schema_version", kApiSchemaVersion}, {"cases", cases}});
    });
  }
};

HttpService::HttpService(JobRegistry& registry, ServiceOptions options)
    : impl_(std::make_unique<Impl>(registry, std::move(options))) {
  impl_->install_routes();
}

HttpService::~HttpService() { stop(); }

int HttpService::bind() {
  if (impl_->options.port == 0) {
    impl_->bound_port = impl_->server.bind_to_any_port(impl_->options.host);
  } else if (impl_->server.bind_to_port(impl_->options.host, impl_->options.port)) {
    impl_->bound_port = impl_->options.port;
  }
  if (impl_->bound_port <= 0) {
    throw Error("cannot bind " + impl_->options.host + ":" + std::to_string(impl_->options.port));
  }
  return impl_->bound_port;
}

void HttpService::listen() { impl_->server.listen_after_bind(); }

void HttpService::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace ventalloc
