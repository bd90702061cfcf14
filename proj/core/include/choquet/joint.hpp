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
#include "choquet/learn.hpp"
#include "choquet/random.hpp"
#include "choquet/values.hpp"

namespace choquet {

// ---------------------------------------------------------------------------
// Categorical data
// ---------------------------------------------------------------------------

// Preference data over alternatives described by named discrete levels. The
// numeric worth of each level is unknown and learned jointly with the
// capacity; level_labels[i] lists criterion i's levels from worst to best.
struct CategoricalDataset {
  int n = 0;
  std::vector<std::vector<std::string>> level_labels;
  std::vector<std::vector<int>> alternatives;  // per-criterion level indices
  std::vector<PreferenceStatement> preferences;
  Deltas deltas;
};

// Throws std::domain_error when a criterion lacks its level order and
// std::invalid_argument for malformed entries (bad indices, duplicate
// labels, non-positive margins).
void validate_categorical(const CategoricalDataset& dataset);

// ---------------------------------------------------------------------------
// Joint capacity + value-function learning
// ---------------------------------------------------------------------------

struct JointModel {
  Capacity capacity;
  ValueFunctionSet values;
};

struct JointLearnOptions {
  int restarts = 10;       // seeded multi-start; restart 0 is deterministic
  int max_iterations = 50; // alternating rounds per restart
  unsigned long seed = 0;
  // Model-shape controls forwarded to the capacity step.
  int k_additive = 0;
  std::vector<mask_t> support_groups;
};

// One accepted alternating round.
struct JointIterationStats {
  int iteration = 0;
  long violations = 0;
  double total_slack = 0.0;
};

struct JointLearnResult {
  JointModel model;
  long violations = 0;      // unsatisfied statements, full statement set
  double total_slack = 0.0; // summed violation magnitudes, full statement set
  int best_restart = 0;
  std::vector<StatementFit> fits;  // full statement set, best model
  std::vector<std::vector<JointIterationStats>> trace;  // accepted rounds per restart
  long pivots = 0;  // simplex work across every step and restart
};

// Alternating identification of a capacity and marginal value functions from
// categorical preferences. Each restart seeds value functions (restart 0:
// equally spaced), then loops a capacity step (linear identification on the
// current numeric profiles) and a value step (linear program on level values
// under the frozen per-alternative coordinate orderings), accepting rounds
// while (violations, total slack) improves lexicographically; violations
// never increase along accepted rounds. Restarts run independently — at most
// CHOQUET_THREADS at a time — and the best result wins by (violations, total
// slack, restart index). Strict statements are pruned to a transitive
// reduction for the internal programs whenever the strict preference graph is
// acyclic; reported violations always cover the full statement set. The
// scale is anchored by fixing each criterion's worst level at 0 and one
// rotating criterion's best level at 1.
JointLearnResult learn_joint(const CategoricalDataset& dataset,
                             const JointLearnOptions& options = {});

// ---------------------------------------------------------------------------
// Synthetic ground-truth models
// ---------------------------------------------------------------------------

enum class SynthKind {
  Additive,         // weighted sum; every interaction coefficient vanishes
  FullInteraction,  // random capacity carrying mass at every order
  Groups,           // independent blocks mixed additively across the partition
};

struct SynthSpec {
  int n = 3;
  int levels = 4;  // per criterion
  SynthKind kind = SynthKind::Additive;
  std::vector<mask_t> groups;  // Groups only: partition of the criteria
  unsigned long seed = 0;
};

struct GroundTruthModel {
  Capacity capacity;
  ValueFunctionSet values;
  std::vector<mask_t> groups;  // interaction blocks of the construction
  std::vector<std::vector<std::string>> level_labels;
};

// Strictly monotone random capacity: each value exceeds the largest subset by
// a fresh positive increment, then the whole table is renormalized.
Capacity random_capacity(int n, Rng& rng);

// Deterministic per spec.seed. Throws std::domain_error when the Groups kind
// receives a malformed partition and std::invalid_argument for bad sizes.
GroundTruthModel synth_model(const SynthSpec& spec);

// ---------------------------------------------------------------------------
// Sampling preferences from a ground truth
// ---------------------------------------------------------------------------

struct SampleSpec {
  enum class Mode {
    AllGridPairs,  // every unordered pair of full-grid tuples
    RandomPairs,   // all pairs among `count` uniformly drawn tuples
  };
  Mode mode = Mode::AllGridPairs;
  int count = 0;
  unsigned long seed = 0;
};

// Classifies each pair by the ground-truth overall scores: strictly-better
// when they differ by more than deltas.learning_set, indifferent otherwise.
// The numeric variant maps tuples through the true value functions; the
// categorical variant keeps level indices and labels.
NumericDataset sample_preferences(const GroundTruthModel& model, const SampleSpec& spec = {});
CategoricalDataset sample_categorical(const GroundTruthModel& model, const SampleSpec& spec = {});

// ---------------------------------------------------------------------------
// Identifiability experiment
// ---------------------------------------------------------------------------

struct CoefficientInterval {
  mask_t set = 0;
  Interval range;
};

struct IdentifiabilityReport {
  SynthSpec spec;
  long statements = 0;
  IdentificationResult identification;
  // Feasible range of every proper non-empty capacity value under the hard
  // statement constraints, plus the widest range among the pairs.
  std::vector<CoefficientInterval> intervals;
  double max_pair_width = 0.0;
  std::vector<mask_t> truth_groups;
  std::vector<mask_t> learned_groups;
  // Largest |pairwise interaction| across distinct truth blocks, measured at
  // every vertex the probes visited.
  double max_cross_group_interaction = 0.0;
};

// Synthesizes a model, samples preferences, identifies a capacity back, and
// probes how tightly the statements pin each coefficient. Group truths are
// identified on their own interaction support, so cross-block coefficients
// stay structurally zero.
IdentifiabilityReport identifiability_experiment(const SynthSpec& spec,
                                                 const SampleSpec& sample = {});

}  // namespace choquet
