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

#include "ventalloc/solver/bounded_simplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ventalloc {
namespace {

enum class VarState : std::uint8_t { kBasic, kAtLower, kAtUpper, kFree };

// Working state of one solve. Variables 0..n-1 are structural columns,
// n..n+m-1 the row logicals. `tableau` holds B^-1 [A | -I] row-major.
class Tableau {
 public:
  Tableau(int m, int n, std::span<const double> matrix, std::span<const double> cost,
          std::vector<double> lower, std::vector<double> upper, const LpOptions& options)
      : m_(m),
        n_(n),
        width_(n + m),
        matrix_(matrix),
        cost_(cost),
        lower_(std::move(lower)),
        upper_(std::move(upper)),
        options_(options),
        tableau_(static_cast<std::size_t>(m) * (n + m), 0.0),
        basis_(m),
        state_(n + m),
        value_(n + m, 0.0) {
    for (int i = 0; i < m_; ++i) {
      double* row = row_ptr(i);
      for (int j = 0; j < n_; ++j) row[j] = -matrix_[static_cast<std::size_t>(i) * n_ + j];
      row[n_ + i] = 1.0;
      basis_[i] = n_ + i;
      state_[n_ + i] = VarState::kBasic;
    }
    for (int j = 0; j < n_; ++j) {
      if (std::isfinite(lower_[j])) {
        state_[j] = VarState::kAtLower;
        value_[j] = lower_[j];
      } else if (std::isfinite(upper_[j])) {
        state_[j] = VarState::kAtUpper;
        value_[j] = upper_[j];
      } else {
        state_[j] = VarState::kFree;
        value_[j] = 0.0;
      }
    }
    recompute_basic_values();
  }

  LpSolution run() {
    LpSolution out;
    int degenerate_run = 0;
    bool bland = false;
    int since_refactor = 0;
    int verify_rounds = 0;
    std::vector<double> basic_cost(m_);
    std::vector<double> reduced(width_);

    for (std::int64_t iter = 0;; ++iter) {
      if (iter >= options_.iteration_limit) {
        throw NumericalError("simplex iteration limit " + std::to_string(options_.iteration_limit) +
                             " reached; last pivot " + last_pivot_);
      }
      if (options_.deadline && (iter & 63) == 0 &&
          std::chrono::steady_clock::now() > *options_.deadline) {
        out.status = LpStatus::kTimeLimit;
        out.iterations = iter;
        return out;
      }
      if (since_refactor >= options_.refactor_interval) {
        refactor();
        since_refactor = 0;
      }

      const bool phase_one = price_phase(basic_cost);
      compute_reduced_costs(phase_one, basic_cost, reduced);
      const auto [entering, direction] = choose_entering(reduced, bland);
      if (entering < 0) {
        // Confirm against a fresh factorization before trusting the verdict.
        if (since_refactor > 0 && verify_rounds < 3) {
          refactor();
          since_refactor = 0;
          ++verify_rounds;
          continue;
        }
        out.iterations = iter;
        if (phase_one) {
          out.status = LpStatus::kInfeasible;
          return out;
        }
        out.status = LpStatus::kOptimal;
        out.values.assign(value_.begin(), value_.begin() + n_);
        for (int j = 0; j < n_; ++j) out.objective += cost_[j] * out.values[j];
        return out;
      }

      const auto step = ratio_test(entering, direction, bland);
      if (!step.bounded) {
        if (phase_one) {
          throw NumericalError("phase 1 ray without a blocking variable at column " +
                               std::to_string(entering));
        }
        out.status = LpStatus::kUnbounded;
        out.iterations = iter;
        return out;
      }
      apply_step(entering, direction, step);
      if (step.leaving_row >= 0) ++since_refactor;

      if (step.theta <= 1e-12) {
        if (++degenerate_run > options_.degenerate_switch) bland = true;
      } else {
        degenerate_run = 0;
        bland = false;
      }
    }
  }

 private:
  struct Step {
    bool bounded = false;
    double theta = 0.0;
    int leaving_row = -1;  // -1: the entering variable flips bounds
    bool leave_at_upper = false;
  };

  double* row_ptr(int i) { return tableau_.data() + static_cast<std::size_t>(i) * width_; }
  const double* row_ptr(int i) const {
    return tableau_.data() + static_cast<std::size_t>(i) * width_;
  }

  double column_entry(int i, int var) const {
    if (var < n_) return matrix_[static_cast<std::size_t>(i) * n_ + var];
    return var - n_ == i ? -1.0 : 0.0;
  }

  bool below(int var) const { return value_[var] < lower_[var] - options_.feasibility_tol; }
  bool above(int var) const { return value_[var] > upper_[var] + options_.feasibility_tol; }

  // Fills the cost of each basic variable for the current phase and reports
  // whether this is a phase-1 iteration.
  bool price_phase(std::vector<double>& basic_cost) const {
    bool phase_one = false;
    for (int i = 0; i < m_; ++i) {
      const int var = basis_[i];
      if (below(var)) {
        basic_cost[i] = -1.0;
        phase_one = true;
      } else if (above(var)) {
        basic_cost[i] = 1.0;
        phase_one = true;
      } else {
        basic_cost[i] = 0.0;
      }
    }
    if (!phase_one) {
      for (int i = 0; i < m_; ++i) basic_cost[i] = basis_[i] < n_ ? cost_[basis_[i]] : 0.0;
    }
    return phase_one;
  }

  void compute_reduced_costs(bool phase_one, const std::vector<double>& basic_cost,
                             std::vector<double>& reduced) const {
    for (int j = 0; j < width_; ++j) reduced[j] = (!phase_one && j < n_) ? cost_[j] : 0.0;
    for (int i = 0; i < m_; ++i) {
      const double cb = basic_cost[i];
      if (cb == 0.0) continue;
      const double* row = row_ptr(i);
      for (int j = 0; j < width_; ++j) reduced[j] -= cb * row[j];
    }
  }

  std::pair<int, int> choose_entering(const std::vector<double>& reduced, bool bland) const {
    int best = -1;
    int best_direction = 0;
    double best_score = 0.0;
    for (int j = 0; j < width_; ++j) {
      const VarState s = state_[j];
      if (s == VarState::kBasic || lower_[j] == upper_[j]) continue;
      const double d = reduced[j];
      int direction = 0;
      if (d < -options_.optimality_tol && (s == VarState::kAtLower || s == VarState::kFree)) {
        direction = 1;
      } else if (d > options_.optimality_tol && (s == VarState::kAtUpper || s == VarState::kFree)) {
        direction = -1;
      }
      if (direction == 0) continue;
      if (bland) return {j, direction};
      if (std::abs(d) > best_score) {
        best_score = std::abs(d);
        best = j;
        best_direction = direction;
      }
    }
    return {best, best_direction};
  }

  // Harris two-pass ratio test. The rate of change of basic i per unit step
  // is -direction * T[i][entering].
  Step ratio_test(int entering, int direction, bool bland) const {
    const double tol = options_.feasibility_tol;
    double relaxed_limit = kInfinity;
    for (int pass = 0; pass < 2; ++pass) {
      Step best;
      double best_pivot = 0.0;
      for (int i = 0; i < m_; ++i) {
        const double entry = row_ptr(i)[entering];
        if (std::abs(entry) <= options_.pivot_tol) continue;
        const double rate = -direction * entry;
        const int var = basis_[i];
        const double x = value_[var];
        double limit = kInfinity;
        double relaxed = kInfinity;
        bool at_upper = false;
        if (below(var)) {
          if (rate > 0.0) {
            limit = (lower_[var] - x) / rate;
            relaxed = (lower_[var] - x + tol) / rate;
          }
        } else if (above(var)) {
          if (rate < 0.0) {
            limit = (x - upper_[var]) / -rate;
            relaxed = (x - upper_[var] + tol) / -rate;
            at_upper = true;
          }
        } else if (rate < 0.0 && std::isfinite(lower_[var])) {
          limit = std::max(0.0, (x - lower_[var]) / -rate);
          relaxed = (x - lower_[var] + tol) / -rate;
        } else if (rate > 0.0 && std::isfinite(upper_[var])) {
          limit = std::max(0.0, (upper_[var] - x) / rate);
          relaxed = (upper_[var] - x + tol) / rate;
          at_upper = true;
        }
        if (!std::isfinite(limit)) continue;
        if (pass == 0) {
          relaxed_limit = std::min(relaxed_limit, bland ? limit : relaxed);
          continue;
        }
        if (limit > relaxed_limit) continue;
        bool take = false;
        if (best.leaving_row < 0) {
          take = true;
        } else if (bland) {
          take = limit < best.theta || (limit == best.theta && var < basis_[best.leaving_row]);
        } else {
          take = std::abs(entry) > best_pivot;
        }
        if (take) {
          best.bounded = true;
          best.theta = limit;
          best.leaving_row = i;
          best.leave_at_upper = at_upper;
          best_pivot = std::abs(entry);
        }
      }
      if (pass == 1) {
        const double flip = upper_[entering] - lower_[entering];
        if (std::isfinite(flip) && (best.leaving_row < 0 || flip <= best.theta)) {
          return Step{true, flip, -1, false};
        }
        return best;
      }
    }
    return {};
  }

  void apply_step(int entering, int direction, const Step& step) {
    const double delta = direction * step.theta;
    if (delta != 0.0) {
      value_[entering] += delta;
      for (int i = 0; i < m_; ++i) {
        const double entry = row_ptr(i)[entering];
        if (entry != 0.0) value_[basis_[i]] -= entry * delta;
      }
    }
    if (step.leaving_row < 0) {
      if (direction > 0) {
        state_[entering] = VarState::kAtUpper;
        value_[entering] = upper_[entering];
      } else {
        state_[entering] = VarState::kAtLower;
        value_[entering] = lower_[entering];
      }
      return;
    }
    const int r = step.leaving_row;
    const int leaving = basis_[r];
    state_[leaving] = step.leave_at_upper ? VarState::kAtUpper : VarState::kAtLower;
    value_[leaving] = step.leave_at_upper ? upper_[leaving] : lower_[leaving];
    pivot(r, entering);
  }

  void pivot(int r, int entering) {
    double* pivot_row = row_ptr(r);
    const double p = pivot_row[entering];
    last_pivot_ = "(row " + std::to_string(r) + ", column " + std::to_string(entering) +
                  ", value " + std::to_string(p) + ")";
    if (std::abs(p) <= options_.pivot_tol * 1e-3) {
      throw NumericalError("pivot element too small " + last_pivot_);
    }
    const double inv = 1.0 / p;
    for (int j = 0; j < width_; ++j) pivot_row[j] *= inv;
    pivot_row[entering] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* row = row_ptr(i);
      const double factor = row[entering];
      if (factor == 0.0) continue;
      for (int j = 0; j < width_; ++j) row[j] -= factor * pivot_row[j];
      row[entering] = 0.0;
    }
    basis_[r] = entering;
    state_[entering] = VarState::kBasic;
  }

  // x_B = -sum over nonbasic j of T[:, j] x_j.
  void recompute_basic_values() {
    for (int i = 0; i < m_; ++i) {
      const double* row = row_ptr(i);
      double total = 0.0;
      for (int j = 0; j < width_; ++j) {
        if (state_[j] != VarState::kBasic && value_[j] != 0.0) total -= row[j] * value_[j];
      }
      value_[basis_[i]] = total;
    }
  }

  // Rebuilds B^-1 [A | -I] from the original matrix by Gauss-Jordan
  // elimination with partial pivoting over the basic columns.
  void refactor() {
    for (int i = 0; i < m_; ++i) {
      double* row = row_ptr(i);
      for (int j = 0; j < width_; ++j) row[j] = column_entry(i, j);
    }
    std::vector<int> order = basis_;
    std::vector<double> scratch(width_);
    for (int k = 0; k < m_; ++k) {
      const int var = order[k];
      int pivot_row = -1;
      double best = 0.0;
      for (int i = k; i < m_; ++i) {
        const double v = std::abs(row_ptr(i)[var]);
        if (v > best) {
          best = v;
          pivot_row = i;
        }
      }
      if (pivot_row < 0 || best < 1e-11) {
        throw NumericalError("singular basis during refactorization at basic variable " +
                             std::to_string(var) + " (position " + std::to_string(k) +
                             "); last pivot " + last_pivot_);
      }
      if (pivot_row != k) {
        std::copy_n(row_ptr(k), width_, scratch.begin());
        std::copy_n(row_ptr(pivot_row), width_, row_ptr(k));
        std::copy_n(scratch.begin(), width_, row_ptr(pivot_row));
      }
      double* prow = row_ptr(k);
      const double inv = 1.0 / prow[var];
      for (int j = 0; j < width_; ++j) prow[j] *= inv;
      prow[var] = 1.0;
      for (int i = 0; i < m_; ++i) {
        if (i == k) continue;
        double* row = row_ptr(i);
        const double factor = row[var];
        if (factor == 0.0) continue;
        for (int j = 0; j < width_; ++j) row[j] -= factor * prow[j];
        row[var] = 0.0;
      }
    }
    basis_ = order;
    recompute_basic_values();
  }

  int m_;
  int n_;
  int width_;
  std::span<const double> matrix_;
  std::span<const double> cost_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  const LpOptions& options_;
  std::vector<double> tableau_;
  std::vector<int> basis_;
  std::vector<VarState> state_;
  std::vector<double> value_;
  std::string last_pivot_ = "(none)";
};

}  // namespace

BoundedSimplex::BoundedSimplex(const MilpModel& model)
    : m_(model.num_rows()), n_(model.num_columns()) {
  const std::int64_t entries = static_cast<std::int64_t>(m_) * (static_cast<std::int64_t>(n_) + m_);
  if (entries > kMaxTableauEntries) {
    throw Error("model with " + std::to_string(m_) + " rows and " + std::to_string(n_) +
                " columns exceeds the built-in dense simplex capacity; export it "
                "and use an external solver");
  }
  matrix_.assign(static_cast<std::size_t>(m_) * n_, 0.0);
  row_lower_.resize(m_);
  row_upper_.resize(m_);
  for (int i = 0; i < m_; ++i) {
    const Row& row = model.rows()[i];
    for (std::size_t k = 0; k < row.columns.size(); ++k) {
      matrix_[static_cast<std::size_t>(i) * n_ + row.columns[k]] += row.coefficients[k];
    }
    row_lower_[i] = row.sense == Sense::kLessEqual ? -kInfinity : row.rhs;
    row_upper_[i] = row.sense == Sense::kGreaterEqual ? kInfinity : row.rhs;
  }
  cost_.resize(n_);
  col_lower_.resize(n_);
  col_upper_.resize(n_);
  for (int j = 0; j < n_; ++j) {
    const Column& c = model.columns()[j];
    cost_[j] = c.objective;
    col_lower_[j] = c.lower;
    col_upper_[j] = c.upper;
  }
}

LpSolution BoundedSimplex::solve(const LpOptions& options) const {
  return solve(col_lower_, col_upper_, options);
}

LpSolution BoundedSimplex::solve(std::span<const double> lower, std::span<const double> upper,
                                 const LpOptions& options) const {
  for (int j = 0; j < n_; ++j) {
    if (lower[j] > upper[j] + options.feasibility_tol) {
      LpSolution out;
      out.status = LpStatus::kInfeasible;
      return out;
    }
  }
  std::vector<double> lo(n_ + m_);
  std::vector<double> hi(n_ + m_);
  std::copy(lower.begin(), lower.end(), lo.begin());
  std::copy(upper.begin(), upper.end(), hi.begin());
  std::copy(row_lower_.begin(), row_lower_.end(), lo.begin() + n_);
  std::copy(row_upper_.begin(), row_upper_.end(), hi.begin() + n_);
  Tableau tableau(m_, n_, matrix_, cost_, std::move(lo), std::move(hi), options);
  return tableau.run();
}

}  // namespace ventalloc
