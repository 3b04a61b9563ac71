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

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ventalloc {

// x: central -> region shipments, z: region -> central returns, y: region
// inventory, s: central inventory, e: shortage, g: sharing indicator.
enum class VarKind { kX, kZ, kY, kS, kE, kG };

char kind_letter(VarKind kind);
std::optional<VarKind> kind_from_letter(char letter);

// Identifies one decision variable. `region` is absent exactly for s.
// y and s take periods 0..T; the others 1..T.
struct VariableKey {
  VarKind kind = VarKind::kX;
  std::optional<int> region;
  int period = 1;
  int scenario = 0;

  auto operator<=>(const VariableKey&) const = default;
};

std::string describe(const VariableKey& key);

class DirectoryError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Bijection between VariableKey and column index over the grid
// (kind, region, period) x scenarios. Each scenario owns a contiguous block:
// y (N*(T+1)), s (T+1), then x, z, e, g (N*T each).
class VariableDirectory {
 public:
  VariableDirectory() = default;
  VariableDirectory(int num_regions, int num_periods, std::vector<int> scenarios);

  int num_regions() const { return num_regions_; }
  int num_periods() const { return num_periods_; }
  const std::vector<int>& scenarios() const { return scenarios_; }
  int block_size() const;
  int num_columns() const { return block_size() * static_cast<int>(scenarios_.size()); }

  // Throws DirectoryError for keys outside the grid or of the wrong shape.
  int lookup(const VariableKey& key) const;
  VariableKey key_of(int column) const;

  bool operator==(const VariableDirectory&) const = default;

 private:
  int block_of(int scenario) const;

  int num_regions_ = 0;
  int num_periods_ = 0;
  std::vector<int> scenarios_;
};

}  // namespace ventalloc
