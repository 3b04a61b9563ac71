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

#include <sstream>

#include "doctest.h"
#include "test_support.hpp"
#include "ventalloc/common/error.hpp"
#include "ventalloc/model/builder.hpp"
#include "ventalloc/model/names.hpp"
#include "ventalloc/solver/branch_and_bound.hpp"
#include "ventalloc/solver/model_io.hpp"

using namespace ventalloc;
using ventalloc::testing::scenarios_for;
using ventalloc::testing::small_instance;

namespace {

MilpModel sample_model() {
  const PlanningInstance inst = small_instance({4, 1}, 3, {1, 2}, 0.5, 1.0);
  return build_extensive_form(
      inst, scenarios_for(inst, {{2.0, 3.5, 1.0, 0.25}, {0.0, 6.0, 2.0, 1.0}}, {1.0, 2.0}));
}

// Order-insensitive comparison of rows by name.
void check_same_model(const MilpModel& a, const MilpModel& b) {
  REQUIRE(a.num_columns() == b.num_columns());
  REQUIRE(a.num_rows() == b.num_rows());
  for (int c = 0; c < a.num_columns(); ++c) {
    const Column& x = a.columns()[c];
    const Column& y = b.columns()[c];
    CHECK(x.name == y.name);
    CHECK(x.objective == y.objective);
    CHECK(x.binary == y.binary);
    CHECK(x.lower == y.lower);
    CHECK(x.upper == y.upper);
  }
  std::map<std::string, const Row*> rows;
  for (const auto& row : b.rows()) rows[row.name] = &row;
  for (const auto& row : a.rows()) {
    REQUIRE(rows.count(row.name) == 1);
    const Row& other = *rows[row.name];
    CHECK(row.sense == other.sense);
    CHECK(row.rhs == other.rhs);
    std::map<int, double> lhs, rhs;
    for (std::size_t k = 0; k < row.columns.size(); ++k) lhs[row.columns[k]] += row.coefficients[k];
    for (std::size_t k = 0; k < other.columns.size(); ++k) rhs[other.columns[k]] += other.coefficients[k];
    CHECK(lhs == rhs);
  }
}

}  // namespace

TEST_CASE("LP and MPS exports round trip") {
  const MilpModel model = sample_model();
  for (ModelFormat format : {ModelFormat::kLp, ModelFormat::kMps}) {
    std::istringstream in(export_model(model, format));
    const MilpModel back = import_model(in, format);
    check_same_model(model, back);
    CHECK(branch_and_bound(back).objective == doctest::Approx(branch_and_bound(model).objective));
  }
}

TEST_CASE("1x1x1 export declares exactly one binary") {
  const PlanningInstance inst = small_instance({5}, 0, {0}, 0.5);
  const MilpModel model = build_extensive_form(inst, scenarios_for(inst, {{8.0}}));
  const std::string lp = export_model(model, ModelFormat::kLp);
  const auto binaries = lp.find("Binaries");
  REQUIRE(binaries != std::string::npos);
  std::istringstream section(lp.substr(binaries + 8, lp.find("End") - binaries - 8));
  std::vector<std::string> names;
  for (std::string token; section >> token;) names.push_back(token);
  CHECK(names == std::vector<std::string>{"g(R0,1,0)"});

  const std::string mps = export_model(model, ModelFormat::kMps);
  CHECK(mps.find("MARKER") != std::string::npos);
  std::istringstream in(mps);
  CHECK(read_mps(in).num_binaries() == 1);
}

TEST_CASE("exported names decode to variable keys") {
  const MilpModel model = sample_model();
  std::istringstream in(export_model(model, ModelFormat::kLp));
  const MilpModel back = read_lp(in);
  for (int c = 0; c < back.num_columns(); ++c) {
    const auto key = decode_column_name(back.columns()[c].name, model.region_ids());
    REQUIRE(key.has_value());
    CHECK(model.column(*key) == c);
  }
}

TEST_CASE("solution files round trip") {
  const MilpModel model = sample_model();
  const SolveResult r = branch_and_bound(model);
  REQUIRE(r.has_incumbent());
  std::ostringstream out;
  write_solution(out, model, r.incumbent);
  CHECK(out.str().rfind("# Objective value = ", 0) == 0);
  std::istringstream in(out.str());
  CHECK(read_solution(in, model) == r.incumbent);

  std::istringstream partial("# comment\n\ne(R0,1,0) 2.5\n");
  const auto values = read_solution(partial, model);
  CHECK(values[model.column({VarKind::kE, 0, 1, 0})] == 2.5);
  CHECK(std::count(values.begin(), values.end(), 0.0) == model.num_columns() - 1);

  std::istringstream unknown("w(R9,1,0) 1\n");
  CHECK_THROWS_AS(read_solution(unknown, model), InputError);
}

TEST_CASE("readers reject unsupported input with a line number") {
  std::istringstream maximize("Maximize\n obj: x\nSubject To\n c: x <= 1\nEnd\n");
  CHECK_THROWS_AS(read_lp(maximize), InputError);
  std::istringstream generals("Minimize\n obj: x\nSubject To\n c: x <= 1\nGenerals\n x\nEnd\n");
  CHECK_THROWS_AS(read_lp(generals), InputError);
  std::istringstream bad_mps("NAME m\nROWS\n N obj\nCOLUMNS\n x obj one two\nENDATA\n");
  CHECK_THROWS_WITH_AS(read_mps(bad_mps), doctest::Contains("line"), InputError);
}

TEST_CASE("hand-written LP file parses") {
  std::istringstream in(
      "\\ comment\nMinimize\n obj: 2 a + 3 b\nSubject To\n c1: a + b >= 1\n c2: -a + b <= 0.5\n"
      "Bounds\n a <= 4\n -1 <= b <= 1\nBinaries\nEnd\n");
  const MilpModel model = read_lp(in);
  REQUIRE(model.num_columns() == 2);
  CHECK(model.columns()[1].lower == -1.0);
  CHECK(model.columns()[0].upper == 4.0);
  const SolveResult r = solve_lp_relaxation(model);
  CHECK(r.objective == doctest::Approx(1.0));
  CHECK(r.incumbent[1] == doctest::Approx(-1.0));
}
