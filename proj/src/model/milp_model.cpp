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

#include "ventalloc/model/milp_model.hpp"

#include <stdexcept>

namespace ventalloc {

namespace {
constexpr std::pair<RowKind, std::string_view> kRowKindNames[] = {
    {RowKind::kRegionBalance, "region_balance"},
    {RowKind::kCentralBalance, "central_balance"},
    {RowKind::kSafetyActivation, "safety_activation"},
    {RowKind::kSafetyCap, "safety_cap"},
    {RowKind::kOutflowIndicator, "outflow_indicator"},
    {RowKind::kCentralOutflowCap, "central_outflow_cap"},
    {RowKind::kRegionInitial, "region_initial"},
    {RowKind::kCentralInitial, "central_initial"},
    {RowKind::kShortage, "shortage"},
};
}  // namespace

std::string_view row_kind_name(RowKind kind) {
  for (const auto& [k, name] : kRowKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<RowKind> row_kind_from_name(std::string_view name) {
  for (const auto& [k, n] : kRowKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

int MilpModel::add_column(Column column) {
  if (!column.name.empty()) name_index_.clear();
  columns_.push_back(std::move(column));
  return num_columns() - 1;
}

int MilpModel::add_row(Row row) {
  if (row.columns.size() != row.coefficients.size()) {
    throw std::invalid_argument("row '" + row.name + "': columns/coefficients size mismatch");
  }
  for (int c : row.columns) {
    if (c < 0 || c >= num_columns()) {
      throw std::out_of_range("row '" + row.name + "' references missing column " +
                              std::to_string(c));
    }
  }
  rows_.push_back(std::move(row));
  return num_rows() - 1;
}

int MilpModel::num_binaries() const {
  int count = 0;
  for (const auto& c : columns_) count += c.binary ? 1 : 0;
  return count;
}

std::vector<int> MilpModel::binary_columns() const {
  std::vector<int> out;
  for (int j = 0; j < num_columns(); ++j) {
    if (columns_[j].binary) out.push_back(j);
  }
  return out;
}

double MilpModel::objective_value(std::span<const double> values) const {
  double total = 0.0;
  for (int j = 0; j < num_columns(); ++j) total += columns_[j].objective * values[j];
  return total;
}

double MilpModel::row_activity(int row, std::span<const double> values) const {
  const Row& r = rows_.at(row);
  double total = 0.0;
  for (std::size_t k = 0; k < r.columns.size(); ++k) total += r.coefficients[k] * values[r.columns[k]];
  return total;
}

std::optional<int> MilpModel::column_by_name(const std::string& name) const {
  if (name_index_.empty()) {
    for (int j = 0; j < num_columns(); ++j) name_index_.emplace(columns_[j].name, j);
  }
  auto it = name_index_.find(name);
  if (it == name_index_.end()) return std::nullopt;
  return it->second;
}

int MilpModel::column(const VariableKey& key) const {
  if (!directory_) throw std::logic_error("model has no variable directory");
  return directory_->lookup(key);
}

}  // namespace ventalloc
