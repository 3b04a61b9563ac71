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

#include <chrono>
#include <compare>
#include <string>
#include <string_view>

namespace ventalloc {

// Calendar day. Only used for reporting and for aligning forecast rows with
// planning periods; the optimization itself works on integer period indices.
class Date {
 public:
  Date() = default;
  explicit Date(std::chrono::sys_days day) : day_(day) {}
  Date(int year, unsigned month, unsigned day);

  // Parses `YYYY-MM-DD`. Throws InputError on anything else.
  static Date parse_iso(std::string_view text);

  std::string to_iso() const;
  Date plus_days(int days) const { return Date(day_ + std::chrono::days(days)); }
  int days_since(const Date& other) const {
    return static_cast<int>((day_ - other.day_).count());
  }
  std::chrono::sys_days sys_days() const { return day_; }

  auto operator<=>(const Date&) const = default;

 private:
  std::chrono::sys_days day_{};
};

}  // namespace ventalloc
