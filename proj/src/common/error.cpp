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

#include "ventalloc/common/error.hpp"

namespace ventalloc {
namespace {

std::string describe(const std::vector<ValidationIssue>& issues) {
  std::string out = "validation failed (" + std::to_string(issues.size()) + " issue" +
                    (issues.size() == 1 ? "" : "s") + ")";
  for (const auto& issue : issues) {
    out += "\n  " + issue.field;
    if (!issue.location.empty()) out += " [" + issue.location + "]";
    out += ": " + issue.message;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : Error(describe(issues)), issues_(std::move(issues)) {}

}  // namespace ventalloc
