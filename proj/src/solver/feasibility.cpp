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

#include "ventalloc/solver/feasibility.hpp"

#include <cmath>
#include <sstream>

#include "ventalloc/common/error.hpp"

namespace ventalloc {

std::string Violation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kRow: out << "row " << name; break;
    case Kind::kColumnBound: out << "bound of " << name; break;
    case Kind::kIntegrality: out << "integrality of " << name; break;
  }
  if (row_tag) {
    out << " [" << row_kind_name(row_tag->kind);
    if (row_tag->region) out << " region " << *row_tag->region;
    out << " period " << row_tag->period << " scenario " << row_tag->scenario << "]";
  }
  if (column_key) out << " [" << ventalloc::describe(*column_key) << "]";
  out << " violated by " << amount;
  return out.str();
}

std::vector<Violation> check_feasibility(const MilpModel& model, std::span<const double> assignment,
                                         double tol) {
  if (static_cast<int>(assignment.size()) != model.num_columns()) {
    throw ShapeMismatchError("assignment has " + std::to_string(assignment.size()) +
                             " values for " + std::to_string(model.num_columns()) + " columns");
  }
  std::vector<Violation> out;
  const auto& dir = model.directory();
  auto column_violation = [&](Violation::Kind kind, int j, double amount) {
    Violation v;
    v.kind = kind;
    v.index = j;
    v.name = model.columns()[j].name;
    v.amount = amount;
    if (dir && j < dir->num_columns()) v.column_key = dir->key_of(j);
    out.push_back(std::move(v));
  };

  for (int i = 0; i < model.num_rows(); ++i) {
    const Row& row = model.rows()[i];
    const double activity = model.row_activity(i, assignment);
    double miss = 0.0;
    switch (row.sense) {
      case Sense::kLessEqual: miss = activity - row.rhs; break;
      case Sense::kGreaterEqual: miss = row.rhs - activity; break;
      case Sense::kEqual: miss = std::abs(activity - row.rhs); break;
    }
    if (miss > tol) {
      Violation v;
      v.kind = Violation::Kind::kRow;
      v.index = i;
      v.name = row.name;
      v.amount = miss;
      v.row_tag = row.tag;
      out.push_back(std::move(v));
    }
  }
  for (int j = 0; j < model.num_columns(); ++j) {
    const Column& col = model.columns()[j];
    const double value = assignment[j];
    if (value < col.lower - tol) {
      column_violation(Violation::Kind::kColumnBound, j, col.lower - value);
    } else if (value > col.upper + tol) {
      column_violation(Violation::Kind::kColumnBound, j, value - col.upper);
    }
    if (col.binary) {
      const double distance = std::min(std::abs(value), std::abs(value - 1.0));
      if (distance > tol) column_violation(Violation::Kind::kIntegrality, j, distance);
    }
  }
  return out;
}

}  // namespace ventalloc
