// Copyright 2026 The Choquet Toolkit Authors
//
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

#include <limits>
#include <optional>
#include <vector>

namespace choquet {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  std::vector<double> coeffs;  // dense, one entry per variable
  Relation relation = Relation::LessEqual;
  double rhs = 0.0;
};

// A linear program over dense rows. Variables carry individual bounds; use
// LinearProgram::kInfinity (or its negation) for unbounded sides. The
// objective is minimized unless `maximize` is set.
struct LinearProgram {
  static constexpr double kInfinity = std::numeric_limits<double>::infinity();

  int num_vars = 0;
  bool maximize = false;
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<LinearConstraint> constraints;

  // Appends a variable and returns its index.
  int add_variable(double lo, double hi, double cost = 0.0);
  void add_constraint(std::vector<double> coeffs, Relation relation, double rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;    // size num_vars when status == Optimal
  double objective = 0.0;   // value of the original objective at x
  long pivots = 0;
};

struct SimplexOptions {
  double feasibility_tolerance = 1e-7;  // phase-1 residual treated as zero
  double pivot_tolerance = 1e-10;       // entries below this never pivot
  long max_pivots = 1'000'000;          // combined cap; exceeding it throws resource_error
};

// Two-phase primal simplex on a dense tableau, smallest-index anti-cycling
// rule in both phases. The run is deterministic: identical inputs produce
// bit-identical solutions. Throws resource_error when the pivot cap is hit
// and std::invalid_argument on malformed programs.
LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options = {});

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

// Tightest range of variable `var` over the feasible region: minimizes and
// then maximizes that coordinate, ignoring the program's own objective.
// Returns nullopt when the program is infeasible; an unbounded direction
// yields an infinite endpoint.
std::optional<Interval> probe_bounds(const LinearProgram& lp, int var,
                                     const SimplexOptions& options = {});

// Same sweep for an arbitrary linear functional of the variables. The two
// optional out-parameters receive the minimizing and maximizing points when
// the corresponding end is finite.
std::optional<Interval> probe_objective(const LinearProgram& lp,
                                        const std::vector<double>& coeffs,
                                        const SimplexOptions& options = {},
                                        std::vector<double>* argmin = nullptr,
                                        std::vector<double>* argmax = nullptr);

}  // namespace choquet
