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

#include "choquet/axioms.hpp"

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "choquet/bits.hpp"
#include "choquet/capacity.hpp"
#include "choquet/errors.hpp"
#include "choquet/integral.hpp"
#include "choquet/joint.hpp"
#include "choquet/lattice.hpp"
#include "choquet/random.hpp"

namespace choquet {
namespace {

ValueFunctionSet even_grid(int n, int levels) {
  ValueFunctionSet v;
  v.levels.resize(n);
  for (int i = 0; i < n; ++i) {
    v.levels[i].resize(levels);
    for (int l = 0; l < levels; ++l) {
      v.levels[i][l] = levels == 1 ? 0.0 : static_cast<double>(l) / (levels - 1);
    }
  }
  return v;
}

// Distinct, slightly skewed level worths so no accidental ties appear.
ValueFunctionSet generic_grid(int n, int levels, unsigned long seed) {
  Rng rng(seed);
  ValueFunctionSet v;
  v.levels.resize(n);
  double top = 0.0;
  for (int i = 0; i < n; ++i) {
    double worth = 0.0;
    for (int l = 0; l < levels; ++l) {
      v.levels[i].push_back(worth);
      worth += 0.2 + rng.uniform();
    }
    top = std::max(top, v.levels[i].back());
  }
  for (auto& level : v.levels) {
    for (double& value : level) value /= top;
  }
  return v;
}

Capacity cardinality_capacity(int n, double (*f)(double)) {
  Capacity c;
  c.n = n;
  c.values.resize(std::size_t{1} << n);
  for (mask_t a = 0; a < c.values.size(); ++a) {
    c.values[a] = f(static_cast<double>(std::popcount(a)) / n);
  }
  return c;
}

TEST_CASE("relations index their grid in mixed radix with criterion 0 fastest") {
  FiniteRelation r;
  r.shape = {2, 3};
  r.rank.assign(6, 0);
  CHECK(r.grid_points() == 6);
  CHECK(r.index_of({1, 2}) == 5);
  CHECK(r.index_of({0, 1}) == 2);
  CHECK(r.tuple_of(3) == std::vector<int>{1, 1});
  for (long p = 0; p < 6; ++p) CHECK(r.index_of(r.tuple_of(p)) == p);
}

TEST_CASE("relation validation catches structural defects") {
  FiniteRelation r;
  r.shape = {2, 2};
  r.rank = {0, 1, 1, 2};
  CHECK_NOTHROW(validate_relation(r));

  FiniteRelation short_table = r;
  short_table.rank.pop_back();
  CHECK_THROWS_AS(validate_relation(short_table), std::domain_error);

  FiniteRelation gap = r;
  gap.rank = {0, 2, 2, 3};  // rank 1 missing
  CHECK_THROWS_AS(validate_relation(gap), std::domain_error);
}

TEST_CASE("induced relations order tuples by overall score with tie classes") {
  const Capacity max_cap = order_statistic_capacity(2, 2);
  const FiniteRelation r = induce_relation(max_cap, even_grid(2, 2));
  // Scores on the 2x2 grid: max(0,0)=0, max(1,0)=max(0,1)=1, max(1,1)=1.
  CHECK(r.rank_of({0, 0}) == 0);
  CHECK(r.rank_of({1, 0}) == r.rank_of({0, 1}));
  CHECK(r.rank_of({1, 1}) == r.rank_of({1, 0}));

  CHECK_THROWS_AS(induce_relation(max_cap, even_grid(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(induce_relation(max_cap, even_grid(2, 1024), 1000), resource_error);
}

TEST_CASE("ordinal scans accept their own aggregators") {
  const ValueFunctionSet grid = generic_grid(3, 4, 31);
  const FiniteRelation by_max = induce_relation(order_statistic_capacity(3, 3), grid);
  CHECK(check_ordinal_axiom(by_max, OrdinalAxiom::Max).holds());
  const FiniteRelation by_min = induce_relation(order_statistic_capacity(3, 1), grid);
  CHECK(check_ordinal_axiom(by_min, OrdinalAxiom::Min).holds());
  const FiniteRelation by_second = induce_relation(order_statistic_capacity(3, 2), grid);
  CHECK(check_ordinal_axiom(by_second, OrdinalAxiom::SecondHighest).holds());
}

TEST_CASE("the min-induced relation defeats the max condition, with live witnesses") {
  const ValueFunctionSet grid = generic_grid(3, 3, 37);
  const FiniteRelation by_min = induce_relation(order_statistic_capacity(3, 1), grid);
  const ScanReport report = check_ordinal_axiom(by_min, OrdinalAxiom::Max);
  REQUIRE_FALSE(report.holds());
  CHECK(report.instances_checked > 0);
  for (const ViolationWitness& witness : report.witnesses) {
    REQUIRE(witness.points.size() == 2);
    REQUIRE_FALSE(witness.criteria.empty());
    // Re-evaluating the instance must reproduce the failure.
    CHECK_FALSE(ordinal_condition_holds(by_min, OrdinalAxiom::Max, witness.points[0],
                                        witness.points[1], witness.criteria[0],
                                        witness.criteria.size() > 1 ? witness.criteria[1] : -1));
  }
}

TEST_CASE("one-point grids hold every ordinal condition vacuously") {
  const Capacity any = order_statistic_capacity(2, 2);
  ValueFunctionSet degenerate;
  degenerate.levels = {{0.5}, {0.5}};
  const FiniteRelation r = induce_relation(any, degenerate);
  CHECK(check_ordinal_axiom(r, OrdinalAxiom::Max).holds());
  CHECK(check_ordinal_axiom(r, OrdinalAxiom::Min).holds());
  CHECK(check_ordinal_axiom(r, OrdinalAxiom::SecondHighest).holds());
}

TEST_CASE("lattice condition holds for relations induced by 0-1 capacities") {
  // The polynomial with blocks {0} and {1,2} on a 2x2x2 grid.
  LatticePolynomial poly;
  poly.n = 3;
  poly.terms = {bit(0), bit(1) | bit(2)};
  const Capacity c = capacity_from_dnf(poly);
  const ValueFunctionSet grid = even_grid(3, 2);
  const FiniteRelation r = induce_relation(c, grid);
  const LatticePolynomial cnf = dualize(poly);
  CHECK(check_lattice_axiom(r, cnf.terms, poly.terms).holds());

  // A strict additive trade-off cannot be projected onto 0-1 blocks.
  Capacity additive;
  additive.n = 3;
  additive.values.resize(8);
  const double w[3] = {0.5, 0.3, 0.2};
  for (mask_t a = 0; a < 8; ++a) {
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) {
      if (a & bit(i)) sum += w[i];
    }
    additive.values[a] = sum;
  }
  const FiniteRelation strict = induce_relation(additive, generic_grid(3, 3, 41));
  const ScanReport broken = check_lattice_axiom(strict, cnf.terms, poly.terms);
  REQUIRE_FALSE(broken.holds());
  for (const ViolationWitness& witness : broken.witnesses) {
    REQUIRE(witness.points.size() == 2);
    CHECK_FALSE(lattice_condition_holds(strict, cnf.terms, poly.terms, witness.points[0],
                                        witness.points[1]));
  }

  // A constant relation satisfies the implications with any family pair.
  FiniteRelation constant;
  constant.shape = {2, 2, 2};
  constant.rank.assign(8, 0);
  CHECK(check_lattice_axiom(constant, cnf.terms, poly.terms).holds());
}

TEST_CASE("single-block polynomials at n=3 pass their own lattice scan") {
  const ValueFunctionSet grid = generic_grid(3, 3, 43);
  for (mask_t block = 1; block < 8; ++block) {
    LatticePolynomial poly;
    poly.n = 3;
    poly.terms = {block};
    const Capacity c = capacity_from_dnf(poly);
    const FiniteRelation r = induce_relation(c, grid);
    const LatticePolynomial cnf = dualize(poly);
    CHECK(check_lattice_axiom(r, cnf.terms, poly.terms).holds());
  }
}

TEST_CASE("triple cancellation never fails for additive models") {
  Capacity additive;
  additive.n = 3;
  additive.values.resize(8);
  const double w[3] = {0.25, 0.35, 0.4};
  for (mask_t a = 0; a < 8; ++a) {
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) {
      if (a & bit(i)) sum += w[i];
    }
    additive.values[a] = sum;
  }
  const FiniteRelation r = induce_relation(additive, generic_grid(3, 4, 53));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      CHECK(triple_cancellation_violations(r, i, j).holds());
    }
  }
  CHECK_THROWS_AS(triple_cancellation_violations(r, 1, 1), std::domain_error);
}

TEST_CASE("an interacting pair produces cancellation witnesses on a rich grid") {
  // Inject a pair term on {0,1} through the inverse transform.
  MobiusRepresentation m;
  m.n = 3;
  m.coeffs.assign(8, 0.0);
  m.coeffs[bit(0)] = 0.2;
  m.coeffs[bit(1)] = 0.2;
  m.coeffs[bit(2)] = 0.3;
  m.coeffs[bit(0) | bit(1)] = 0.3;
  const Capacity c = zeta(m);
  REQUIRE(is_valid(c));
  const ValueFunctionSet grid = generic_grid(3, 4, 59);
  const FiniteRelation r = induce_relation(c, grid);
  const ScanReport report = triple_cancellation_violations(r, 0, 1);
  REQUIRE_FALSE(report.holds());
  // Witnesses re-verify: the pattern they record indeed fails.
  for (const ViolationWitness& witness : report.witnesses) {
    CHECK(witness.points.size() == 8);
  }
  // The non-interacting pair (0, 2) stays clean.
  CHECK(triple_cancellation_violations(r, 0, 2).holds());
}

TEST_CASE("convexity scan: squared-share passes, square-root fails on its grid") {
  const auto square = [](double x) { return x * x; };
  const auto root = [](double x) { return std::sqrt(x); };

  const Capacity convex = cardinality_capacity(3, square);
  const ValueFunctionSet convex_grid = standard_tradeoff_grid(convex);
  const FiniteRelation convex_rel = induce_relation(convex, convex_grid);
  CHECK(check_convexity_axiom(convex_rel, convex_grid).holds());

  const Capacity concave = cardinality_capacity(3, root);
  const ValueFunctionSet concave_grid = standard_tradeoff_grid(concave);
  const FiniteRelation concave_rel = induce_relation(concave, concave_grid);
  const ScanReport report = check_convexity_axiom(concave_rel, concave_grid);
  REQUIRE_FALSE(report.holds());
  CHECK(report.witnesses.size() >= 1);

  // Additive capacities are convex with equality everywhere.
  const Capacity additive = cardinality_capacity(3, [](double x) { return x; });
  const ValueFunctionSet additive_grid = standard_tradeoff_grid(additive);
  CHECK(check_convexity_axiom(induce_relation(additive, additive_grid), additive_grid).holds());
}

TEST_CASE("interaction groups by support and by scan agree on generic grids") {
  // Blocks {0,1} and {2}: coefficients only inside blocks.
  MobiusRepresentation m;
  m.n = 3;
  m.coeffs.assign(8, 0.0);
  m.coeffs[bit(0)] = 0.25;
  m.coeffs[bit(1)] = 0.15;
  m.coeffs[bit(2)] = 0.35;
  m.coeffs[bit(0) | bit(1)] = 0.25;
  const Capacity c = zeta(m);
  REQUIRE(is_valid(c));

  const std::vector<mask_t> by_support = interaction_groups(m);
  REQUIRE(by_support.size() == 2);
  CHECK(by_support[0] == (bit(0) | bit(1)));
  CHECK(by_support[1] == bit(2));

  const ValueFunctionSet grid = generic_grid(3, 4, 61);
  const std::vector<mask_t> by_scan = interaction_groups_by_scan(c, grid);
  CHECK(by_scan == by_support);

  // Additive: all singletons on both routes.
  MobiusRepresentation additive;
  additive.n = 3;
  additive.coeffs.assign(8, 0.0);
  additive.coeffs[bit(0)] = 0.2;
  additive.coeffs[bit(1)] = 0.3;
  additive.coeffs[bit(2)] = 0.5;
  const std::vector<mask_t> singletons = interaction_groups(additive);
  REQUIRE(singletons.size() == 3);
  const Capacity additive_capacity = zeta(additive);
  CHECK(interaction_groups_by_scan(additive_capacity, grid) == singletons);

  // Full interaction: one block.
  SynthSpec spec;
  spec.kind = SynthKind::FullInteraction;
  spec.seed = 67;
  const GroundTruthModel truth = synth_model(spec);
  CHECK(interaction_groups(mobius(truth.capacity)).size() == 1);
}

TEST_CASE("scan costs are reported and caps enforced") {
  const ValueFunctionSet grid = generic_grid(3, 4, 71);
  const Capacity c = order_statistic_capacity(3, 2);
  const FiniteRelation r = induce_relation(c, grid);
  const ScanCost cost = ordinal_scan_cost(r, OrdinalAxiom::Max);
  CHECK(cost.grid_points == 64);
  CHECK(cost.instances > 0);
  const ScanCost tc_cost = triple_cancellation_cost(r, 0, 1);
  CHECK(tc_cost.instances > 0);

  ScanOptions tiny;
  tiny.max_grid_points = 8;
  CHECK_THROWS_AS(check_ordinal_axiom(r, OrdinalAxiom::Max, tiny), resource_error);

  ScanOptions one_witness;
  one_witness.max_witnesses = 1;
  const FiniteRelation by_min = induce_relation(order_statistic_capacity(3, 1), grid);
  const ScanReport capped = check_ordinal_axiom(by_min, OrdinalAxiom::Max, one_witness);
  CHECK(capped.witnesses.size() == 1);
}

}  // namespace
}  // namespace choquet
