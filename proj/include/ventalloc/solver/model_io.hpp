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

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "ventalloc/model/milp_model.hpp"

namespace ventalloc {

enum class ModelFormat { kLp, kMps };

// Writes a minimization model in CPLEX LP format or free MPS. The supported
// subset is: linear objective, <= / = / >= rows, column bounds and binary
// columns. Numbers are written with 17 significant digits.
void export_model(const MilpModel& model, ModelFormat format, std::ostream& out);
std::string export_model(const MilpModel& model, ModelFormat format);

// Readers for the same subset. The result carries column and row names but
// no directory or row tags. Throws InputError with a line number on anything
// outside the subset.
MilpModel read_lp(std::istream& in);
MilpModel read_mps(std::istream& in);
MilpModel import_model(std::istream& in, ModelFormat format);

// Solution files from external solvers: one `name value` pair per line;
// blank lines and lines starting with '#' are skipped. Columns the file does
// not mention are zero. Throws InputError for unknown names.
std::vector<double> read_solution(std::istream& in, const MilpModel& model);
void write_solution(std::ostream& out, const MilpModel& model, const std::vector<double>& values);

}  // namespace ventalloc
