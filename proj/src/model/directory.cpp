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

#include "ventalloc/model/directory.hpp"

#include <algorithm>

namespace ventalloc {

char kind_letter(VarKind kind) {
  switch (kind) {
    case VarKind::kX: return 'x';
    case VarKind::kZ: return 'z';
    case VarKind::kY: return 'y';
    case VarKind::kS: return 's';
    case VarKind::kE: return 'e';
    case VarKind::kG: return 'g';
  }
  return '?';
}

std::optional<VarKind> kind_from_letter(char letter) {
  switch (letter) {
    case 'x': return VarKind::kX;
    case 'z': return VarKind::kZ;
    case 'y': return VarKind::kY;
    case 's': return VarKind::kS;
    case 'e': return VarKind::kE;
    case 'g': return VarKind::kG;
    default: return std::nullopt;
  }
}

std::string describe(const VariableKey& key) {
  std::string out(1, kind_letter(key.kind));
  out += "[";
  if (key.region) out += "n=" + std::to_string(*key.region) + ",";
  out += "t=" + std::to_string(key.period) + ",w=" + std::to_string(key.scenario) + "]";
  return out;
}

VariableDirectory::VariableDirectory(int num_regions, int num_periods, std::vector<int> scenarios)
    : num_regions_(num_regions), num_periods_(num_periods), scenarios_(std::move(scenarios)) {}

int VariableDirectory::block_size() const {
  return num_regions_ * (num_periods_ + 1) + (num_periods_ + 1) + 4 * num_regions_ * num_periods_;
}

int VariableDirectory::block_of(int scenario) const {
  auto it = std::find(scenarios_.begin(), scenarios_.end(), scenario);
  if (it == scenarios_.end()) {
    throw DirectoryError("scenario " + std::to_string(scenario) + " not in this model");
  }
  return static_cast<int>(it - scenarios_.begin());
}

int VariableDirectory::lookup(const VariableKey& key) const {
  const int base = block_of(key.scenario) * block_size();
  const int N = num_regions_;
  const int T = num_periods_;
  if (key.kind == VarKind::kS) {
    if (key.region) throw DirectoryError("s takes no region: " + describe(key));
    if (key.period < 0 || key.period > T) throw DirectoryError("period out of grid: " + describe(key));
    return base + N * (T + 1) + key.period;
  }
  if (!key.region) throw DirectoryError("region required: " + describe(key));
  const int n = *key.region;
  if (n < 0 || n >= N) throw DirectoryError("region out of grid: " + describe(key));
  if (key.kind == VarKind::kY) {
    if (key.period < 0 || key.period > T) throw DirectoryError("period out of grid: " + describe(key));
    return base + n * (T + 1) + key.period;
  }
  if (key.period < 1 || key.period > T) throw DirectoryError("period out of grid: " + describe(key));
  int slot = 0;
  switch (key.kind) {
    case VarKind::kX: slot = 0; break;
    case VarKind::kZ: slot = 1; break;
    case VarKind::kE: slot = 2; break;
    case VarKind::kG: slot = 3; break;
    default: break;
  }
  return base + N * (T + 1) + (T + 1) + slot * N * T + n * T + (key.period - 1);
}

VariableKey VariableDirectory::key_of(int column) const {
  if (column < 0 || column >= num_columns()) {
    throw DirectoryError("column " + std::to_string(column) + " outside the directory");
  }
  const int N = num_regions_;
  const int T = num_periods_;
  VariableKey key;
  key.scenario = scenarios_[static_cast<std::size_t>(column / block_size())];
  int offset = column % block_size();
  if (offset < N * (T + 1)) {
    key.kind = VarKind::kY;
    key.region = offset / (T + 1);
    key.period = offset % (T + 1);
    return key;
  }
  offset -= N * (T + 1);
  if (offset < T + 1) {
    key.kind = VarKind::kS;
    key.period = offset;
    return key;
  }
  offset -= T + 1;
  static constexpr VarKind kSlots[] = {VarKind::kX, VarKind::kZ, VarKind::kE, VarKind::kG};
  key.kind = kSlots[offset / (N * T)];
  offset %= N * T;
  key.region = offset / T;
  key.period = offset % T + 1;
  return key;
}

}  // namespace ventalloc
