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

#include "choquet/lp.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "choquet/errors.hpp"

namespace choquet {

int LinearProgram::add_variable(double lo, double hi, double cost) {
  objective.push_back(cost);
  lower.push_back(lo);
  upper.push_back(hi);
  for (LinearConstraint& c : constraints) c.coeffs.push_back(0.0);
  return num_vars++;
}

void LinearProgram::add_constraint(std::vector<double> coeffs, Relation relation, double rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars) {
    throw std::invalid_argument("constraint has " + std::to_string(coeffs.size()) +
                                " coefficients for " + std::to_string(num_vars) + " variables");
  }
  constraints.push_back({std::move(coeffs), relation, rhs});
}

namespace {

constexpr double kInf = LinearProgram::kInfinity;

void check_program(const LinearProgram& lp) {
  const auto n = static_cast<std::size_t>(lp.num_vars);
  if (lp.num_vars <= 0) throw std::invalid_argument("linear program has no variables");
  if (lp.objective.size() != n || lp.lower.size() != n || lp.upper.size() != n) {
    throw std::invalid_argument("objective/bound vectors do not match the variable count");
  }
  for (double c : lp.objective) {
    if (!std::isfinite(c)) throw std::invalid_argument("objective coefficient is not finite");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (std::isnan(lp.lower[j]) || std::isnan(lp.upper[j]) || lp.lower[j] == kInf ||
        lp.upper[j] == -kInf) {
      throw std::invalid_argument("variable " + std::to_string(j) + " has malformed bounds");
    }
  }
  for (const LinearConstraint& c : lp.constraints) {
    if (c.coeffs.size() != n) {
      throw std::invalid_argument("constraint row does not match the variable count");
    }
    for (double a : c.coeffs) {
      if (!std::isfinite(a)) throw std::invalid_argument("constraint coefficient is not finite");
    }
    if (!std::isfinite(c.rhs)) throw std::invalid_argument("constraint rhs is not finite");
  }
}

// The solver works on shifted non-negative columns. Each original variable
// becomes one column (shifted by its finite lower bound, or reflected around
// a finite upper bound) or a positive/negative pair when free both ways.
struct ColumnPlan {
  int var = -1;       // original variable
  double sign = 1.0;  // x contribution per unit of the column
};

struct Tableau {
  std::vector<std::vector<double>> rows;  // each sized cols + 1; last entry is rhs
  std::vector<int> basis;                 // basic column per row
  int cols = 0;
};

// One simplex pivot with exact 0/1 placement in the pivot column to limit
// numeric drift.
void pivot(Tableau& t, std::vector<double>& z, int r, int q) {
  std::vector<double>& prow = t.rows[r];
  const double p = prow[q];
  for (double& v : prow) v /= p;
  prow[q] = 1.0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (static_cast<int>(i) == r) continue;
    std::vector<double>& row = t.rows[i];
    const double f = row[q];
    if (f == 0.0) continue;
    for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * prow[j];
    row[q] = 0.0;
  }
  const double f = z[q];
  if (f != 0.0) {
    for (std::size_t j = 0; j < z.size(); ++j) z[j] -= f * prow[j];
    z[q] = 0.0;
  }
  t.basis[r] = q;
}

// Reduced-cost row for the cost vector `cost` under the current basis.
std::vector<double> reduced_costs(const Tableau& t, const std::vector<double>& cost) {
  std::vector<double> z(static_cast<std::size_t>(t.cols) + 1, 0.0);
  for (int j = 0; j < t.cols; ++j) z[j] = cost[j];
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const double cb = cost[t.basis[r]];
    if (cb == 0.0) continue;
    for (std::size_t j = 0; j < z.size(); ++j) z[j] -= cb * t.rows[r][j];
  }
  return z;
}

enum class IterateResult { Optimal, Unbounded };

// Minimizes with the smallest-index entering/leaving rule, which cannot
// cycle. Columns flagged in `banned` never enter the basis.
IterateResult iterate(Tableau& t, std::vector<double>& z, const std::vector<bool>& banned,
                      const SimplexOptions& options, long& pivots) {
  while (true) {
    int entering = -1;
    for (int j = 0; j < t.cols; ++j) {
      if (banned[j]) continue;
      if (z[j] < -options.pivot_tolerance) {
        entering = j;
        break;
      }
    }
    if (entering < 0) return IterateResult::Optimal;

    int leaving = -1;
    double best_ratio = 0.0;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      const double a = t.rows[r][entering];
      if (a <= options.pivot_tolerance) continue;
      const double ratio = t.rows[r].back() / a;
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[r] < t.basis[leaving])) {
        leaving = static_cast<int>(r);
        best_ratio = ratio;
      }
    }
    if (leaving < 0) return IterateResult::Unbounded;

    if (++pivots > options.max_pivots) {
      throw resource_error("simplex exceeded the pivot cap of " +
                           std::to_string(options.max_pivots));
    }
    pivot(t, z, leaving, entering);
  }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options) {
  check_program(lp);

  LpSolution result;
  for (int j = 0; j < lp.num_vars; ++j) {
    if (lp.lower[j] > lp.upper[j]) return result;  // empty box: infeasible
  }

  // --- Column plan: shift every variable into "column(s) >= 0" form. ---
  std::vector<ColumnPlan> plan;
  std::vector<double> offset(lp.num_vars, 0.0);
  std::vector<std::pair<int, int>> var_cols(lp.num_vars, {-1, -1});
  std::vector<double> bound_row_rhs;  // explicit "column <= range" rows
  std::vector<int> bound_row_col;
  for (int j = 0; j < lp.num_vars; ++j) {
    const bool lo_finite = lp.lower[j] > -kInf;
    const bool hi_finite = lp.upper[j] < kInf;
    if (lo_finite) {
      offset[j] = lp.lower[j];
      var_cols[j].first = static_cast<int>(plan.size());
      plan.push_back({j, 1.0});
      if (hi_finite) {
        bound_row_col.push_back(var_cols[j].first);
        bound_row_rhs.push_back(lp.upper[j] - lp.lower[j]);
      }
    } else if (hi_finite) {
      offset[j] = lp.upper[j];
      var_cols[j].first = static_cast<int>(plan.size());
      plan.push_back({j, -1.0});
    } else {
      var_cols[j].first = static_cast<int>(plan.size());
      plan.push_back({j, 1.0});
      var_cols[j].second = static_cast<int>(plan.size());
      plan.push_back({j, -1.0});
    }
  }
  const int structural = static_cast<int>(plan.size());

  // --- Rows over structural columns, rhs made non-negative. ---
  struct Row {
    std::vector<double> coeffs;
    Relation relation;
    double rhs;
  };
  std::vector<Row> rows;
  rows.reserve(lp.constraints.size() + bound_row_rhs.size());
  for (const LinearConstraint& c : lp.constraints) {
    Row row{std::vector<double>(structural, 0.0), c.relation, c.rhs};
    for (int j = 0; j < lp.num_vars; ++j) {
      const double a = c.coeffs[j];
      if (a == 0.0) continue;
      row.rhs -= a * offset[j];
      row.coeffs[var_cols[j].first] += a * plan[var_cols[j].first].sign;
      if (var_cols[j].second >= 0) {
        row.coeffs[var_cols[j].second] += a * plan[var_cols[j].second].sign;
      }
    }
    rows.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < bound_row_rhs.size(); ++k) {
    Row row{std::vector<double>(structural, 0.0), Relation::LessEqual, bound_row_rhs[k]};
    row.coeffs[bound_row_col[k]] = 1.0;
    rows.push_back(std::move(row));
  }
  for (Row& row : rows) {
    if (row.rhs < 0.0) {
      for (double& a : row.coeffs) a = -a;
      row.rhs = -row.rhs;
      if (row.relation == Relation::LessEqual) {
        row.relation = Relation::GreaterEqual;
      } else if (row.relation == Relation::GreaterEqual) {
        row.relation = Relation::LessEqual;
      }
    }
    // ">= 0" is the same set as "<= 0" on the negated row; the latter takes a
    // plain slack as its initial basic column instead of an artificial one.
    if (row.relation == Relation::GreaterEqual && row.rhs == 0.0) {
      for (double& a : row.coeffs) a = -a;
      row.relation = Relation::LessEqual;
    }
  }

  // --- Attach slack / surplus / artificial columns. ---
  const int m = static_cast<int>(rows.size());
  int aux = 0;
  for (const Row& row : rows) {
    switch (row.relation) {
      case Relation::LessEqual: aux += 1; break;
      case Relation::GreaterEqual: aux += 2; break;
      case Relation::Equal: aux += 1; break;
    }
  }
  Tableau t;
  t.cols = structural + aux;
  t.basis.assign(m, -1);
  t.rows.assign(m, std::vector<double>(static_cast<std::size_t>(t.cols) + 1, 0.0));
  std::vector<bool> artificial(t.cols, false);
  int next_col = structural;
  for (int r = 0; r < m; ++r) {
    std::vector<double>& out = t.rows[r];
    for (int j = 0; j < structural; ++j) out[j] = rows[r].coeffs[j];
    out.back() = rows[r].rhs;
    switch (rows[r].relation) {
      case Relation::LessEqual:
        out[next_col] = 1.0;
        t.basis[r] = next_col++;
        break;
      case Relation::GreaterEqual:
        out[next_col] = -1.0;  // surplus
        ++next_col;
        out[next_col] = 1.0;  // artificial
        artificial[next_col] = true;
        t.basis[r] = next_col++;
        break;
      case Relation::Equal:
        out[next_col] = 1.0;
        artificial[next_col] = true;
        t.basis[r] = next_col++;
        break;
    }
  }

  const std::vector<bool> no_ban(t.cols, false);
  long pivots = 0;

  // --- Phase 1: drive the artificial columns to zero. ---
  bool has_artificial = false;
  for (int j = 0; j < t.cols; ++j) has_artificial = has_artificial || artificial[j];
  if (has_artificial) {
    std::vector<double> cost1(t.cols, 0.0);
    for (int j = 0; j < t.cols; ++j) {
      if (artificial[j]) cost1[j] = 1.0;
    }
    std::vector<double> z = reduced_costs(t, cost1);
    if (iterate(t, z, no_ban, options, pivots) == IterateResult::Unbounded) {
      throw internal_consistency_error(
          "phase-1 objective is bounded below by zero, yet the iteration reported an "
          "unbounded ray");
    }
    const double infeasibility = -z.back();  // z rhs carries minus the objective
    if (infeasibility > options.feasibility_tolerance) {
      result.pivots = pivots;
      return result;  // Infeasible
    }
    // Pivot leftover artificial columns out of the basis where possible;
    // rows that offer no pivot are redundant and stay inert.
    for (int r = 0; r < m; ++r) {
      if (!artificial[t.basis[r]]) continue;
      for (int j = 0; j < structural; ++j) {
        if (std::abs(t.rows[r][j]) > options.pivot_tolerance) {
          pivot(t, z, r, j);
          break;
        }
      }
    }
  }

  // --- Phase 2: the real objective (negated when maximizing). ---
  std::vector<double> cost2(t.cols, 0.0);
  for (int j = 0; j < structural; ++j) {
    const double c = lp.objective[plan[j].var] * plan[j].sign;
    cost2[j] = lp.maximize ? -c : c;
  }
  std::vector<double> z = reduced_costs(t, cost2);
  const IterateResult outcome = iterate(t, z, artificial, options, pivots);
  result.pivots = pivots;
  if (outcome == IterateResult::Unbounded) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  // --- Read the solution back through the column plan. ---
  std::vector<double> column_value(t.cols, 0.0);
  for (int r = 0; r < m; ++r) column_value[t.basis[r]] = t.rows[r].back();
  result.x.assign(lp.num_vars, 0.0);
  for (int j = 0; j < structural; ++j) {
    result.x[plan[j].var] += plan[j].sign * column_value[j];
  }
  for (int j = 0; j < lp.num_vars; ++j) result.x[j] += offset[j];
  result.objective = 0.0;
  for (int j = 0; j < lp.num_vars; ++j) result.objective += lp.objective[j] * result.x[j];
  result.status = LpStatus::Optimal;
  return result;
}

std::optional<Interval> probe_bounds(const LinearProgram& lp, int var,
                                     const SimplexOptions& options) {
  if (var < 0 || var >= lp.num_vars) {
    throw std::invalid_argument("probe variable " + std::to_string(var) + " is out of range");
  }
  std::vector<double> coeffs(lp.num_vars, 0.0);
  coeffs[var] = 1.0;
  return probe_objective(lp, coeffs, options);
}

std::optional<Interval> probe_objective(const LinearProgram& lp, const std::vector<double>& coeffs,
                                        const SimplexOptions& options, std::vector<double>* argmin,
                                        std::vector<double>* argmax) {
  if (static_cast<int>(coeffs.size()) != lp.num_vars) {
    throw std::invalid_argument("probe functional has " + std::to_string(coeffs.size()) +
                                " coefficients for " + std::to_string(lp.num_vars) +
                                " variables");
  }
  LinearProgram probe = lp;
  probe.objective = coeffs;

  probe.maximize = false;
  const LpSolution low = solve_lp(probe, options);
  if (low.status == LpStatus::Infeasible) return std::nullopt;

  probe.maximize = true;
  const LpSolution high = solve_lp(probe, options);
  if (high.status == LpStatus::Infeasible) return std::nullopt;

  Interval interval;
  interval.lower = low.status == LpStatus::Unbounded ? -kInf : low.objective;
  interval.upper = high.status == LpStatus::Unbounded ? kInf : high.objective;
  if (argmin != nullptr && low.status == LpStatus::Optimal) *argmin = low.x;
  if (argmax != nullptr && high.status == LpStatus::Optimal) *argmax = high.x;
  return interval;
}

}  // namespace choquet
