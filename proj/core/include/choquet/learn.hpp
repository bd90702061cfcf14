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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "choquet/capacity.hpp"
#include "choquet/integral.hpp"
#include "choquet/lp.hpp"

namespace choquet {

// ---------------------------------------------------------------------------
// Decision-maker statements
// ---------------------------------------------------------------------------

enum class PreferenceKind {
  StrictlyBetter,  // overall score of `better` exceeds `worse` by the margin
  IndifferentTo,   // overall scores within the margin of each other
};

struct PreferenceStatement {
  int better = 0;  // index into NumericDataset::alternatives
  int worse = 0;
  PreferenceKind kind = PreferenceKind::StrictlyBetter;
};

enum class ImportanceKind {
  MoreImportant,     // importance of i exceeds j by the margin
  EquallyImportant,  // importances within the margin of each other
};

struct ShapleyComparison {
  int i = 0;
  int j = 0;
  ImportanceKind kind = ImportanceKind::MoreImportant;
};

enum class InteractionKind {
  Complementary,  // pairwise interaction in [0, 1]
  Redundant,      // pairwise interaction in [-1, 0]
  StrongerThan,   // interaction of `pair` exceeds that of `other` by the margin
  SimilarTo,      // interactions of `pair` and `other` within the margin
};

struct InteractionStatement {
  std::pair<int, int> pair{0, 1};
  std::optional<std::pair<int, int>> other;  // required by the comparison kinds
  InteractionKind kind = InteractionKind::Complementary;
};

// Margins used when turning statements into inequalities.
struct Deltas {
  double shapley = 1e-3;
  double interaction = 1e-3;
  double learning_set = 1e-3;
};

// Everything a decision maker supplies about alternatives scored on a common
// numeric scale. `veto` criteria force v(A) = 0 whenever A misses them;
// `favour` criteria force v(A) = 1 whenever A contains them.
struct NumericDataset {
  int n = 0;
  std::vector<Profile> alternatives;
  std::vector<PreferenceStatement> preferences;
  std::vector<ShapleyComparison> shapley_comparisons;
  std::vector<InteractionStatement> interaction_statements;
  std::vector<int> veto;
  std::vector<int> favour;
  Deltas deltas;
};

// Throws std::invalid_argument naming the first malformed entry (bad index,
// ragged profile, pair with equal members, missing comparison target, a
// criterion listed as both veto and favour, non-positive margins, ...).
void validate_dataset(const NumericDataset& dataset);

// ---------------------------------------------------------------------------
// Identification setup
// ---------------------------------------------------------------------------

enum class IdentificationObjective {
  Feasibility,    // any capacity satisfying all statements outright
  MinTotalSlack,  // minimize the summed per-statement relaxations
  MaxMinSlack,    // maximize the margin shared by every soft statement
};

struct IdentificationConfig {
  IdentificationObjective objective = IdentificationObjective::MinTotalSlack;
  // 0 keeps the full model. A value in [1, n) switches to interaction
  // coefficients supported on coalitions of at most that size.
  int k_additive = 0;
  // Optional partition of the criteria. When present, the model is built on
  // interaction coefficients supported inside single blocks, so coalitions
  // straddling two blocks carry coefficient zero by construction.
  std::vector<mask_t> support_groups;
};

// Maps LP columns to model quantities. Two layouts exist: one column per
// capacity value v(A) for proper non-empty A, or one column per interaction
// coefficient m(B) on an admissible support.
struct Affine {
  std::vector<double> coeffs;
  double constant = 0.0;
};

struct VariableMap {
  enum class Mode { CapacityValues, MobiusCoefficients };

  Mode mode = Mode::CapacityValues;
  int n = 0;
  std::vector<mask_t> support;  // MobiusCoefficients: admissible sets, ascending
  std::vector<int> column_of;   // size 1 << n; -1 when not a column
  int num_vars = 0;

  Affine capacity_value(mask_t a) const;
  Affine shapley_value(int i) const;
  Affine pair_interaction(int i, int j) const;
  Affine overall_score(const Profile& profile) const;
  // Rebuilds the capacity encoded by an LP point (no validity guarantee).
  Capacity extract(const std::vector<double>& x) const;
};

VariableMap make_variable_map(int n, const IdentificationConfig& config);

// Row annotations for diagnostics; `statement` indexes the description list
// of the owning BuiltConstraints (-1 for structural rows).
struct RowInfo {
  std::string purpose;
  int statement = -1;
};

struct BuiltConstraints {
  LinearProgram lp;
  VariableMap map;
  std::vector<RowInfo> rows;
  std::vector<std::string> statement_descriptions;
  std::vector<int> statement_slack;  // per statement: slack column or -1
  int margin_var = -1;               // MaxMinSlack: shared margin column
};

// Assembles the identification program: structural rows (monotonicity and,
// in coefficient form, normalization) plus one row group per statement,
// wired for the configured objective. A veto together with a favour on a
// different criterion pins some v(A) to 0 and 1 at once; that contradiction
// is reported as std::domain_error before any solving happens.
BuiltConstraints build_constraints(const NumericDataset& dataset,
                                   const IdentificationConfig& config);

// ---------------------------------------------------------------------------
// Identification
// ---------------------------------------------------------------------------

enum class IdentificationStatus {
  FeasibleExact,       // all statements hold without relaxation
  InfeasibleMinSlack,  // no exact capacity; result is the best relaxation
};

struct StatementFit {
  std::string description;
  bool satisfied = false;
  // Distance to the binding inequality: positive means satisfied with room,
  // negative means violated by that amount.
  double margin = 0.0;
};

struct IdentificationResult {
  IdentificationStatus status = IdentificationStatus::InfeasibleMinSlack;
  Capacity capacity;
  MobiusRepresentation mobius;
  IndexReport index_report;    // importance and interaction of the result
  double total_slack = 0.0;    // LP relaxation total (MinTotalSlack runs)
  double margin = 0.0;         // achieved shared margin (MaxMinSlack runs)
  bool repaired = false;       // numeric cleanup was applied to the capacity
  std::vector<StatementFit> fits;
  long pivots = 0;
};

// Learns a capacity agreeing with the dataset under the configured objective.
// Feasibility falls back to MinTotalSlack when no exact capacity exists.
IdentificationResult identify(const NumericDataset& dataset, const IdentificationConfig& config);

// Evaluates every statement against a concrete capacity; a statement counts
// as satisfied when its margin is >= -tolerance.
std::vector<StatementFit> check_fit(const Capacity& capacity, const NumericDataset& dataset,
                                    double tolerance = 1e-6);

}  // namespace choquet
