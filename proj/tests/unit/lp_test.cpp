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
#include <limits>

#include <doctest.h>

#include "choquet/random.hpp"
#include "oracles.hpp"

namespace choquet {
namespace {

// Random boxed program with up to three variables; always bounded, so the
// vertex-enumeration oracle applies.
LinearProgram random_boxed_program(Rng& rng, int max_vars = 3) {
  LinearProgram lp;
  const int vars = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(max_vars)));
  for (int v = 0; v < vars; ++v) {
    const double lo = rng.uniform() * 2.0 - 1.0;
    lp.add_variable(lo, lo + 0.2 + rng.uniform() * 2.0, rng.uniform() * 4.0 - 2.0);
  }
  lp.maximize = rng.index(2) == 0;
  const int rows = static_cast<int>(rng.index(5));
  for (int r = 0; r < rows; ++r) {
    std::vector<double> coeffs(vars);
    for (double& c : coeffs) c = rng.uniform() * 4.0 - 2.0;
    const Relation relation = rng.index(2) == 0 ? Relation::LessEqual : Relation::GreaterEqual;
    lp.add_constraint(coeffs, relation, rng.uniform() * 2.0 - 1.0);
  }
  return lp;
}

TEST_CASE("hand programs solve to their known optima") {
  // max x0 + x1 subject to x0 + 2x1 <= 4, 3x0 + x1 <= 6, box [0,10]^2.
  LinearProgram lp;
  lp.add_variable(0.0, 10.0, 1.0);
  lp.add_variable(0.0, 10.0, 1.0);
  lp.maximize = true;
  lp.add_constraint({1.0, 2.0}, Relation::LessEqual, 4.0);
  lp.add_constraint({3.0, 1.0}, Relation::LessEqual, 6.0);
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(2.8).epsilon(1e-9));
  CHECK(sol.x[0] == doctest::Approx(1.6).epsilon(1e-9));
  CHECK(sol.x[1] == doctest::Approx(1.2).epsilon(1e-9));
}

TEST_CASE("equality rows and free objectives") {
  // min x0 - x1 with x0 + x1 = 1 on the unit box: optimum at (0, 1).
  LinearProgram lp;
  lp.add_variable(0.0, 1.0, 1.0);
  lp.add_variable(0.0, 1.0, -1.0);
  lp.add_constraint({1.0, 1.0}, Relation::Equal, 1.0);
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(sol.x[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(sol.x[1] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("infeasible and unbounded programs are classified") {
  LinearProgram infeasible;
  infeasible.add_variable(0.0, 1.0, 1.0);
  infeasible.add_constraint({1.0}, Relation::GreaterEqual, 2.0);
  CHECK(solve_lp(infeasible).status == LpStatus::Infeasible);

  LinearProgram unbounded;
  unbounded.add_variable(0.0, LinearProgram::kInfinity, 1.0);
  unbounded.maximize = true;
  CHECK(solve_lp(unbounded).status == LpStatus::Unbounded);
}

TEST_CASE("solver agrees with vertex enumeration on random boxed programs") {
  Rng rng(1601);
  int optimal_seen = 0;
  int infeasible_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const LinearProgram lp = random_boxed_program(rng);
    const LpSolution sol = solve_lp(lp);
    const auto reference = testing::solve_by_vertices(lp);
    if (reference) {
      ++optimal_seen;
      REQUIRE(sol.status == LpStatus::Optimal);
      CHECK(sol.objective == doctest::Approx(reference->objective).epsilon(1e-6));
    } else {
      ++infeasible_seen;
      CHECK(sol.status == LpStatus::Infeasible);
    }
  }
  // The generator must exercise both outcomes for the comparison to matter.
  CHECK(optimal_seen > 50);
  CHECK(infeasible_seen > 5);
}

TEST_CASE("identical inputs give bit-identical solutions") {
  Rng rng(1709);
  for (int trial = 0; trial < 30; ++trial) {
    const LinearProgram lp = random_boxed_program(rng);
    const LpSolution first = solve_lp(lp);
    const LpSolution second = solve_lp(lp);
    CHECK(first.status == second.status);
    CHECK(first.pivots == second.pivots);
    REQUIRE(first.x.size() == second.x.size());
    for (std::size_t v = 0; v < first.x.size(); ++v) {
      CHECK(first.x[v] == second.x[v]);  // exact, not approximate
    }
    CHECK(first.objective == second.objective);
  }
}

TEST_CASE("probe_bounds brackets a variable over the feasible region") {
  // x0 in [0.25, 0.75] after intersecting x0 + x1 = 1 with x1 in [0.25, 0.75].
  LinearProgram lp;
  lp.add_variable(0.0, 1.0);
  lp.add_variable(0.25, 0.75);
  lp.add_constraint({1.0, 1.0}, Relation::Equal, 1.0);
  const auto range = probe_bounds(lp, 0);
  REQUIRE(range.has_value());
  CHECK(range->lower == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(range->upper == doctest::Approx(0.75).epsilon(1e-9));

  LinearProgram empty;
  empty.add_variable(0.0, 1.0);
  empty.add_constraint({1.0}, Relation::GreaterEqual, 2.0);
  CHECK_FALSE(probe_bounds(empty, 0).has_value());
}

TEST_CASE("probe_objective returns attaining points at both ends") {
  LinearProgram lp;
  lp.add_variable(0.0, 1.0);
  lp.add_variable(0.0, 1.0);
  lp.add_constraint({1.0, 1.0}, Relation::LessEqual, 1.5);
  std::vector<double> argmin;
  std::vector<double> argmax;
  const auto range = probe_objective(lp, {1.0, 2.0}, {}, &argmin, &argmax);
  REQUIRE(range.has_value());
  CHECK(range->lower == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(range->upper == doctest::Approx(2.5).epsilon(1e-9));
  CHECK(argmin[0] + 2.0 * argmin[1] == doctest::Approx(range->lower).epsilon(1e-9));
  CHECK(argmax[0] + 2.0 * argmax[1] == doctest::Approx(range->upper).epsilon(1e-9));
}

TEST_CASE("probing agrees with vertex enumeration") {
  Rng rng(1801);
  for (int trial = 0; trial < 60; ++trial) {
    LinearProgram lp = random_boxed_program(rng);
    const int var = static_cast<int>(rng.index(static_cast<std::size_t>(lp.num_vars)));
    const auto range = probe_bounds(lp, var);

    LinearProgram min_side = lp;
    min_side.maximize = false;
    min_side.objective.assign(lp.num_vars, 0.0);
    min_side.objective[var] = 1.0;
    const auto reference_min = testing::solve_by_vertices(min_side);
    LinearProgram max_side = min_side;
    max_side.maximize = true;
    const auto reference_max = testing::solve_by_vertices(max_side);

    if (!range) {
      CHECK_FALSE(reference_min.has_value());
      continue;
    }
    REQUIRE(reference_min.has_value());
    REQUIRE(reference_max.has_value());
    CHECK(range->lower == doctest::Approx(reference_min->objective).epsilon(1e-6));
    CHECK(range->upper == doctest::Approx(reference_max->objective).epsilon(1e-6));
  }
}

TEST_CASE("malformed programs are rejected") {
  LinearProgram lp;
  lp.add_variable(0.0, 1.0);
  CHECK_THROWS_AS(lp.add_constraint({1.0, 2.0}, Relation::LessEqual, 1.0),
                  std::invalid_argument);
  LinearProgram crossed;
  crossed.add_variable(1.0, 0.0);  // lower above upper: an empty box
  CHECK(solve_lp(crossed).status == LpStatus::Infeasible);

  LinearProgram nan_bound;
  nan_bound.add_variable(std::numeric_limits<double>::quiet_NaN(), 1.0);
  CHECK_THROWS_AS(solve_lp(nan_bound), std::invalid_argument);
}

}  // namespace
}  // namespace choquet
