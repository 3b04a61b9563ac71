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

#include "ventalloc/solver/branch_and_bound.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <memory>
#include <queue>

#include "ventalloc/common/error.hpp"

namespace ventalloc {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Fixing of every binary column: -1 free, 0 or 1 fixed.
using Fixing = std::vector<std::int8_t>;

struct Node {
  double bound = 0.0;
  int depth = 0;
  std::int64_t id = 0;
  std::shared_ptr<const Fixing> fixing;
};

struct NodeOrder {
  // Inverted so that the smallest bound pops first.
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.id > b.id;
  }
};

class Search {
 public:
  Search(const MilpModel& model, const SolveLimits& limits)
      : model_(model),
        limits_(limits),
        simplex_(model),
        binaries_(model.binary_columns()),
        start_(Clock::now()),
        deadline_(start_ + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(limits.time_limit_seconds))) {
    lp_options_.deadline = deadline_;
    for (const auto& c : model.columns()) {
      base_lower_.push_back(c.lower);
      base_upper_.push_back(c.upper);
    }
  }

  SolveResult run() {
    SolveResult result;
    Fixing root_fixing(binaries_.size(), -1);
    const LpSolution root = solve_node(root_fixing);
    result.node_count = 1;
    if (root.status == LpStatus::kTimeLimit) return finish(result, false);
    if (root.status == LpStatus::kInfeasible) {
      result.status = SolveStatus::kInfeasible;
      return finish(result, true);
    }
    if (root.status == LpStatus::kUnbounded) {
      result.status = SolveStatus::kUnbounded;
      return finish(result, true);
    }

    if (const int branch = pick_branch(root.values); branch < 0) {
      consider_incumbent(root.values);
    } else {
      Fixing rounded(binaries_.size());
      for (std::size_t k = 0; k < binaries_.size(); ++k) {
        rounded[k] = root.values[binaries_[k]] >= 0.5 ? 1 : 0;
      }
      const LpSolution heuristic = solve_node(rounded);
      if (heuristic.status == LpStatus::kOptimal) {
        consider_incumbent(heuristic.values);
      }
      push(root.objective, 0, std::make_shared<const Fixing>(root_fixing), root.values);
    }

    bool interrupted = false;
    while (!open_.empty()) {
      if (Clock::now() > deadline_ ||
          (limits_.node_limit && node_count_ >= *limits_.node_limit)) {
        interrupted = true;
        break;
      }
      if (gap_closed(open_.top().bound)) break;
      Node node = open_.top();
      open_.pop();
      const auto values = std::move(pending_values_.at(node.id));
      pending_values_.erase(node.id);
      const int branch = pick_branch(values);
      if (branch < 0) continue;  // became integral after an incumbent re-solve
      for (std::int8_t side : {std::int8_t{0}, std::int8_t{1}}) {
        auto child = std::make_shared<Fixing>(*node.fixing);
        (*child)[branch] = side;
        const LpSolution lp = solve_node(*child);
        ++node_count_;
        if (lp.status == LpStatus::kTimeLimit) {
          interrupted = true;
          break;
        }
        if (lp.status != LpStatus::kOptimal) continue;
        if (has_incumbent_ && lp.objective >= incumbent_objective_ - prune_margin()) continue;
        if (pick_branch(lp.values) < 0) {
          consider_incumbent(lp.values);
        } else {
          push(lp.objective, node.depth + 1, std::move(child), lp.values);
        }
      }
      if (interrupted) break;
    }
    result.node_count += node_count_;
    return finish(result, !interrupted);
  }

 private:
  LpSolution solve_node(const Fixing& fixing) {
    std::vector<double> lower = base_lower_;
    std::vector<double> upper = base_upper_;
    for (std::size_t k = 0; k < binaries_.size(); ++k) {
      const int col = binaries_[k];
      lower[col] = std::max(lower[col], 0.0);
      upper[col] = std::min(upper[col], 1.0);
      if (fixing[k] >= 0) lower[col] = upper[col] = fixing[k];
    }
    LpSolution lp = simplex_.solve(lower, upper, lp_options_);
    iterations_ += lp.iterations;
    return lp;
  }

  // Index into binaries_ of the most fractional binary, or -1 if integral.
  int pick_branch(const std::vector<double>& values) const {
    int best = -1;
    double best_distance = 0.5 + 1.0;
    for (std::size_t k = 0; k < binaries_.size(); ++k) {
      const double v = values[binaries_[k]];
      const double frac = v - std::floor(v);
      if (frac <= kIntegralityTol || frac >= 1.0 - kIntegralityTol) continue;
      const double distance = std::abs(frac - 0.5);
      if (distance < best_distance) {
        best_distance = distance;
        best = static_cast<int>(k);
      }
    }
    return best;
  }

  // Re-solves with binaries fixed to their rounded values so the incumbent
  // satisfies the big-M rows exactly, then keeps it if it improves.
  void consider_incumbent(const std::vector<double>& values) {
    Fixing exact(binaries_.size());
    for (std::size_t k = 0; k < binaries_.size(); ++k) {
      exact[k] = values[binaries_[k]] >= 0.5 ? 1 : 0;
    }
    const LpSolution polished = solve_node(exact);
    if (polished.status != LpStatus::kOptimal) return;
    if (has_incumbent_ && polished.objective >= incumbent_objective_) return;
    has_incumbent_ = true;
    incumbent_objective_ = polished.objective;
    incumbent_ = polished.values;
    for (std::size_t k = 0; k < binaries_.size(); ++k) incumbent_[binaries_[k]] = exact[k];
  }

  void push(double bound, int depth, std::shared_ptr<const Fixing> fixing,
            const std::vector<double>& values) {
    const std::int64_t id = next_id_++;
    pending_values_.emplace(id, values);
    open_.push(Node{bound, depth, id, std::move(fixing)});
  }

  double gap_tolerance(double incumbent) const {
    return std::max(limits_.absolute_gap, limits_.relative_gap * std::abs(incumbent));
  }

  double prune_margin() const { return gap_tolerance(incumbent_objective_); }

  bool gap_closed(double best_open_bound) const {
    return has_incumbent_ &&
           incumbent_objective_ - best_open_bound <= gap_tolerance(incumbent_objective_);
  }

  SolveResult finish(SolveResult result, bool completed) {
    result.simplex_iterations = iterations_;
    result.wall_time_seconds = seconds_since(start_);
    if (result.status == SolveStatus::kInfeasible || result.status == SolveStatus::kUnbounded) {
      return result;
    }
    double open_bound = open_.empty() ? kInfinity : open_.top().bound;
    if (has_incumbent_) {
      result.incumbent = incumbent_;
      result.objective = incumbent_objective_;
      result.best_bound = std::min(open_bound, incumbent_objective_);
      if (completed) {
        result.status = SolveStatus::kOptimal;
      } else {
        result.status = gap_closed(open_bound) ? SolveStatus::kOptimal
                                               : SolveStatus::kFeasibleTimeLimit;
      }
    } else if (completed) {
      result.status = SolveStatus::kInfeasible;
    } else {
      result.status = SolveStatus::kNoSolution;
      result.best_bound = open_bound;
    }
    return result;
  }

  const MilpModel& model_;
  const SolveLimits& limits_;
  BoundedSimplex simplex_;
  std::vector<int> binaries_;
  Clock::time_point start_;
  Clock::time_point deadline_;
  LpOptions lp_options_;
  std::vector<double> base_lower_;
  std::vector<double> base_upper_;

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open_;
  std::map<std::int64_t, std::vector<double>> pending_values_;
  std::int64_t next_id_ = 0;
  std::int64_t node_count_ = 0;
  std::int64_t iterations_ = 0;
  bool has_incumbent_ = false;
  double incumbent_objective_ = kInfinity;
  std::vector<double> incumbent_;
};

}  // namespace

std::string_view status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "Optimal";
    case SolveStatus::kFeasibleTimeLimit: return "FeasibleTimeLimit";
    case SolveStatus::kInfeasible: return "Infeasible";
    case SolveStatus::kUnbounded: return "Unbounded";
    case SolveStatus::kNoSolution: return "NoSolution";
  }
  return "Unknown";
}

SolveStatus status_from_name(std::string_view name) {
  for (auto s : {SolveStatus::kOptimal, SolveStatus::kFeasibleTimeLimit, SolveStatus::kInfeasible,
                 SolveStatus::kUnbounded, SolveStatus::kNoSolution}) {
    if (status_name(s) == name) return s;
  }
  throw Error("unknown solve status '" + std::string(name) + "'");
}

SolveResult solve_lp_relaxation(const MilpModel& model, const LpOptions& options) {
  const auto start = Clock::now();
  BoundedSimplex simplex(model);
  const LpSolution lp = simplex.solve(options);
  SolveResult result;
  result.simplex_iterations = lp.iterations;
  result.node_count = 1;
  switch (lp.status) {
    case LpStatus::kOptimal:
      result.status = SolveStatus::kOptimal;
      result.incumbent = lp.values;
      result.objective = lp.objective;
      result.best_bound = lp.objective;
      break;
    case LpStatus::kInfeasible: result.status = SolveStatus::kInfeasible; break;
    case LpStatus::kUnbounded: result.status = SolveStatus::kUnbounded; break;
    case LpStatus::kTimeLimit: result.status = SolveStatus::kNoSolution; break;
  }
  result.wall_time_seconds = seconds_since(start);
  return result;
}

SolveResult branch_and_bound(const MilpModel& model, const SolveLimits& limits) {
  Search search(model, limits);
  return search.run();
}

}  // namespace ventalloc
