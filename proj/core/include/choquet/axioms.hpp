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

#include <string>
#include <vector>

#include "choquet/capacity.hpp"
#include "choquet/values.hpp"

namespace choquet {

// ---------------------------------------------------------------------------
// Finite preference relations on level grids
// ---------------------------------------------------------------------------

// Scores closer than this collapse into one indifference class when a
// relation is induced from numeric evaluations.
inline constexpr double kTieTolerance = 1e-12;

// A weak order over the full product grid of discrete levels. Points are
// level tuples addressed by a mixed-radix index with criterion 0 varying
// fastest; rank[p] is the dense indifference-class rank of point p, rank 0
// being the worst class. Higher rank always means strictly preferred.
struct FiniteRelation {
  std::vector<int> shape;  // levels per criterion, each >= 1
  std::vector<int> rank;   // size = product of shape; dense ranks from 0

  int criteria() const { return static_cast<int>(shape.size()); }
  long grid_points() const;

  // Mixed-radix conversions between tuples and point indices.
  long index_of(const std::vector<int>& tuple) const;
  std::vector<int> tuple_of(long index) const;

  // rank lookup for a tuple
  int rank_of(const std::vector<int>& tuple) const { return rank[index_of(tuple)]; }
};

// Structural check: shape sane, rank table full-size, ranks dense from 0.
// Throws std::domain_error naming the defect (a relation that is not a weak
// order cannot be expressed in this encoding at all).
void validate_relation(const FiniteRelation& relation);

// Builds the relation a capacity and value functions induce on their level
// grid: points are ordered by overall score, scores within kTieTolerance of
// each other grouped into one class. Throws std::invalid_argument on
// mismatched criterion counts and resource_error on grids larger than
// `max_grid_points`.
FiniteRelation induce_relation(const Capacity& capacity, const ValueFunctionSet& values,
                               long max_grid_points = 1'000'000);

// ---------------------------------------------------------------------------
// Scan bookkeeping
// ---------------------------------------------------------------------------

struct ScanOptions {
  // Upper bound on the grid size a scan may touch; larger inputs throw
  // resource_error before any work starts.
  long max_grid_points = 1'000'000;
  // Stop after this many witnesses (0 = collect every one).
  long max_witnesses = 16;
};

// Predicted effort for a scan, reported before running it.
struct ScanCost {
  long grid_points = 0;  // tuples in the underlying grid
  long instances = 0;    // axiom instances the scan will evaluate
};

// One concrete failure of an axiom: the grid points that instantiate the
// condition, in the documented order for that axiom, plus a rendering.
struct ViolationWitness {
  std::string axiom;
  std::vector<int> criteria;             // the criteria the instance binds
  std::vector<std::vector<int>> points;  // level tuples, axiom-specific order
  std::string detail;
};

struct ScanReport {
  ScanCost cost;
  long instances_checked = 0;
  std::vector<ViolationWitness> witnesses;

  bool holds() const { return witnesses.empty(); }
};

// ---------------------------------------------------------------------------
// Ordinal aggregation tests
// ---------------------------------------------------------------------------

// Necessary conditions satisfied by relations ranking tuples via the largest
// coordinate, the smallest, or the k-th largest.
enum class OrdinalAxiom {
  Max,           // some coordinate swap toward y never hurts x
  Min,           // some coordinate swap toward y never helps x
  SecondHighest, // two single swaps or one double swap never hurt x
};

// Instance predicates, usable to re-verify any witness by hand. Tuples must
// share the relation's shape. The two mixtures of an instance are
// (x_i, y_{-i}) — x's coordinate i, y elsewhere — and its mirror
// (y_i, x_{-i}).
//
// Max at (x, y, i): one of the two mixtures ranks at least as high as x.
// Min at (x, y, i): one of the two mixtures ranks no higher than x.
// SecondHighest at (x, y, i, j): (y_i, x_{-i}) or (y_j, x_{-j}) ranks at
// least as high as x, or the double mixture (x_i, x_j, y elsewhere) does.
// `j` is ignored by Max and Min.
bool ordinal_condition_holds(const FiniteRelation& relation, OrdinalAxiom axiom,
                             const std::vector<int>& x, const std::vector<int>& y, int i, int j);

ScanCost ordinal_scan_cost(const FiniteRelation& relation, OrdinalAxiom axiom);

// Exhaustive scan over every instance of the chosen condition. Reports each
// failing instance with points ordered {x, y} and the bound criteria {i} or
// {i, j}.
ScanReport check_ordinal_axiom(const FiniteRelation& relation, OrdinalAxiom axiom,
                               const ScanOptions& options = {});

// ---------------------------------------------------------------------------
// Lattice-polynomial test
// ---------------------------------------------------------------------------

// Condition for a relation to act as the dual pair of set families (terms =
// min-blocks of the disjunctive reading, clauses = max-blocks of the
// conjunctive one): for every ordered pair (w, x) with w >= x there is a
// clause K with w >= every point that agrees with x on K, and for every pair
// with x >= w a term M whose points dominating x's M-part all beat w.
bool lattice_condition_holds(const FiniteRelation& relation, const std::vector<mask_t>& clauses,
                             const std::vector<mask_t>& terms, const std::vector<int>& w,
                             const std::vector<int>& x);

ScanCost lattice_scan_cost(const FiniteRelation& relation, const std::vector<mask_t>& clauses,
                           const std::vector<mask_t>& terms);

// Scan over every ordered pair (w, x). Witness points are {w, x}; `criteria`
// is empty (the failing pair constrains every clause/term at once).
ScanReport check_lattice_axiom(const FiniteRelation& relation, const std::vector<mask_t>& clauses,
                               const std::vector<mask_t>& terms, const ScanOptions& options = {});

// ---------------------------------------------------------------------------
// Pairwise separability (triple cancellation)
// ---------------------------------------------------------------------------

// Level pattern of one instance on criteria (i, j) against a fixed rest z:
// the four i-levels a,b,c,d and the four j-levels p,q,r,s forming premises
// (ap >= bq), (br >= as), (cs >= dr) and conclusion (cp >= dq).
struct TriplePattern {
  int a = 0, b = 0, c = 0, d = 0;
  int p = 0, q = 0, r = 0, s = 0;
};

bool triple_cancellation_holds(const FiniteRelation& relation, int i, int j,
                               const TriplePattern& pattern, const std::vector<int>& z);

ScanCost triple_cancellation_cost(const FiniteRelation& relation, int i, int j);

// Scans all patterns and rest-tuples for the ordered pair (i, j). A witness
// indicates the two criteria cannot be separated additively; its points are
// {apz, bqz, brz, asz, csz, drz, cpz, dqz}. Throws std::domain_error when
// i == j or either index is out of range.
ScanReport triple_cancellation_violations(const FiniteRelation& relation, int i, int j,
                                          const ScanOptions& options = {});

// ---------------------------------------------------------------------------
// Convexity test
// ---------------------------------------------------------------------------

// One instance of the trade-off condition on criteria (i, j): i-levels
// a,b,c,d and j-levels p,q,r,s against rest z. With value functions f, the
// instance only binds when criterion j dominates i (f_j >= f_i) at the six
// premise points and i dominates j at the two conclusion points. Premises:
// ap ~ bq, ar ~ bs, cp ~ dq, plus d >= c on i alone and r >= s on j alone.
// Conclusion: cr >= ds.
struct TradeoffInstance {
  int a = 0, b = 0, c = 0, d = 0;
  int p = 0, q = 0, r = 0, s = 0;
};

bool convexity_condition_holds(const FiniteRelation& relation, const ValueFunctionSet& values,
                               int i, int j, const TradeoffInstance& instance,
                               const std::vector<int>& z);

ScanCost convexity_scan_cost(const FiniteRelation& relation, int i, int j);

// Scans the trade-off condition for one ordered pair, or for every ordered
// pair when `i < 0`. The relation must be the one induced by (capacity,
// values) on the same grid — the value functions decide where the condition
// binds. Witness points are {apz, bqz, arz, bsz, cpz, dqz, crz, dsz}.
ScanReport check_convexity_axiom(const FiniteRelation& relation, const ValueFunctionSet& values,
                                 int i = -1, int j = -1, const ScanOptions& options = {});

// Five-level grid tailored to expose non-convexity of the given capacity in
// the trade-off scan: the first two criteria receive levels whose indifference
// premises hold exactly for this capacity's symmetric restriction, the rest
// receive a generic spread. Convex capacities pass on every grid including
// this one; the classic square-root capacity fails on it.
ValueFunctionSet standard_tradeoff_grid(const Capacity& capacity);

// ---------------------------------------------------------------------------
// Interaction groups
// ---------------------------------------------------------------------------

// Partition of the criteria into connected components of the pairwise
// interaction graph, returned as ascending-sorted masks. Route one: edges are
// pairs covered by an interaction coefficient of magnitude above `tolerance`.
std::vector<mask_t> interaction_groups(const MobiusRepresentation& mobius,
                                       double tolerance = 1e-9);

// Route two: edges are pairs whose triple-cancellation scan on the induced
// relation finds a witness. Grids need enough levels to exhibit the
// interaction; coarse grids can miss edges route one sees.
std::vector<mask_t> interaction_groups_by_scan(const Capacity& capacity,
                                               const ValueFunctionSet& values,
                                               const ScanOptions& options = {});

}  // namespace choquet
