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

#include <stdexcept>
#include <string>
#include <vector>

namespace ventalloc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or missing input (files, CSV rows, JSON documents).
class InputError : public Error {
 public:
  using Error::Error;
};

// One failed invariant. `location` names the region and/or period involved,
// or is empty for instance-wide fields.
struct ValidationIssue {
  std::string field;
  std::string location;
  std::string message;
};

// Carries every violation found, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<ValidationIssue> issues);
  const std::vector<ValidationIssue>& issues() const { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

// Instance and scenario set describe different regions or horizons.
class ShapeMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace ventalloc
