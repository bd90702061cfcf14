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

#include "choquet/joint.hpp"

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "choquet/bits.hpp"
#include "choquet/capacity.hpp"
#include "choquet/integral.hpp"
#include "choquet/learn.hpp"
#include "choquet/values.hpp"

namespace choquet {
namespace {

TEST_CASE("synthetic models are valid and match their declared shape") {
  SynthSpec additive;
  additive.kind = SynthKind::Additive;
  additive.seed = 21;
  const GroundTruthModel a = synth_model(additive);
  CHECK(is_valid(a.capacity));
  CHECK_NOTHROW(validate_values(a.values));
  CHECK(is_k_additive(a.capacity, 1));
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      CHECK(std::fabs(interaction_index(a.capacity, bit(i) | bit(j))) <= 1e-9);
    }
  }

  SynthSpec grouped;
  grouped.kind = SynthKind::Groups;
  grouped.groups = {bit(0) | bit(1), bit(2)};
  grouped.seed = 22;
  const GroundTruthModel g = synth_model(grouped);
  CHECK(is_valid(g.capacity));
  CHECK(std::fabs(interaction_index(g.capacity, bit(0) | bit(2))) <= 1e-9);
  CHECK(std::fabs(interaction_index(g.capacity, bit(1) | bit(2))) <= 1e-9);

  SynthSpec full;
  full.kind = SynthKind::FullInteraction;
  full.seed = 42;
  CHECK(is_valid(synth_model(full).capacity));
}

TEST_CASE("sampling enumerates the full grid deterministically") {
  SynthSpec spec;
  spec.levels = 3;
  spec.kind = SynthKind::FullInteraction;
  spec.seed = 5;
  const GroundTruthModel truth = synth_model(spec);
  SampleSpec sample;
  sample.mode = SampleSpec::Mode::AllGridPairs;
  const NumericDataset first = sample_preferences(truth, sample);
  CHECK(first.alternatives.size() == 27);
  CHECK(first.preferences.size() == 27 * 26 / 2);  // every unordered pair
  const NumericDataset second = sample_preferences(truth, sample);
  CHECK(second.alternatives == first.alternatives);
  REQUIRE(second.preferences.size() == first.preferences.size());
  for (std::size_t s = 0; s < first.preferences.size(); ++s) {
    CHECK(second.preferences[s].better == first.preferences[s].better);
    CHECK(second.preferences[s].worse == first.preferences[s].worse);
    CHECK(second.preferences[s].kind == first.preferences[s].kind);
  }
}

TEST_CASE("sampling classifies ties as indifference") {
  // A constant value set scores every tuple identically, so all pairs tie.
  SynthSpec spec;
  spec.levels = 2;
  spec.kind = SynthKind::Additive;
  spec.seed = 9;
  GroundTruthModel truth = synth_model(spec);
  for (auto& level : truth.values.levels) {
    for (double& v : level) v = 0.5;
  }
  SampleSpec sample;
  const NumericDataset d = sample_preferences(truth, sample);
  REQUIRE_FALSE(d.preferences.empty());
  for (const PreferenceStatement& s : d.preferences) {
    CHECK(s.kind == PreferenceKind::IndifferentTo);
  }
}

TEST_CASE("categorical datasets validate their level references") {
  CategoricalDataset d;
  d.n = 2;
  d.level_labels = {{"low", "high"}, {"small", "big"}};
  d.alternatives = {{0, 1}, {1, 0}};
  d.preferences = {{0, 1, PreferenceKind::StrictlyBetter}};
  CHECK_NOTHROW(validate_categorical(d));

  CategoricalDataset bad = d;
  bad.alternatives[0][1] = 5;  // no such level
  CHECK_THROWS_AS(validate_categorical(bad), std::invalid_argument);

  bad = d;
  bad.preferences[0].worse = 9;  // no such alternative
  CHECK_THROWS_AS(validate_categorical(bad), std::invalid_argument);
}

TEST_CASE("joint learning recovers a zero-violation model on complete grids") {
  SynthSpec spec;
  spec.levels = 4;
  spec.kind = SynthKind::FullInteraction;
  spec.seed = 1003;
  const GroundTruthModel truth = synth_model(spec);
  SampleSpec sample;
  const CategoricalDataset d = sample_categorical(truth, sample);

  JointLearnOptions options;
  options.seed = 1003;
  const JointLearnResult result = learn_joint(d, options);
  CHECK(result.violations == 0);
  CHECK(result.total_slack <= 1e-9);
  CHECK(is_valid(result.model.capacity));
  CHECK_NOTHROW(validate_values(result.model.values));
  CHECK(result.best_restart >= 0);
  CHECK(result.best_restart < options.restarts);
  for (const StatementFit& fit : result.fits) CHECK(fit.satisfied);

  // Accepted rounds never increase the violation count within a restart.
  for (const auto& restart_trace : result.trace) {
    for (std::size_t t = 1; t < restart_trace.size(); ++t) {
      CHECK(restart_trace[t].violations <= restart_trace[t - 1].violations);
    }
  }
}

TEST_CASE("the learned model reproduces the training comparisons") {
  SynthSpec spec;
  spec.levels = 3;
  spec.kind = SynthKind::FullInteraction;
  spec.seed = 77;
  const GroundTruthModel truth = synth_model(spec);
  SampleSpec sample;
  const CategoricalDataset d = sample_categorical(truth, sample);
  JointLearnOptions options;
  options.seed = 77;
  const JointLearnResult result = learn_joint(d, options);
  REQUIRE(result.violations == 0);

  for (const PreferenceStatement& s : d.preferences) {
    const double better =
        choquet(result.model.capacity, result.model.values.apply(d.alternatives[s.better]));
    const double worse =
        choquet(result.model.capacity, result.model.values.apply(d.alternatives[s.worse]));
    if (s.kind == PreferenceKind::StrictlyBetter) {
      CHECK(better > worse);
    } else {
      CHECK(std::fabs(better - worse) <= d.deltas.learning_set + 1e-9);
    }
  }
}

TEST_CASE("option validation") {
  CategoricalDataset d;
  d.n = 2;
  d.level_labels = {{"a", "b"}, {"c", "d"}};
  d.alternatives = {{0, 0}, {1, 1}};
  d.preferences = {{1, 0, PreferenceKind::StrictlyBetter}};
  JointLearnOptions bad;
  bad.restarts = 0;
  CHECK_THROWS_AS(learn_joint(d, bad), std::invalid_argument);
  bad = JointLearnOptions{};
  bad.max_iterations = 0;
  CHECK_THROWS_AS(learn_joint(d, bad), std::invalid_argument);
}

TEST_CASE("identifiability experiment contrasts additive and interacting truths") {
  SynthSpec additive;
  additive.levels = 3;
  additive.kind = SynthKind::Additive;
  additive.seed = 7;
  SampleSpec sample;
  const IdentifiabilityReport wide = identifiability_experiment(additive, sample);
  CHECK(wide.identification.status == IdentificationStatus::FeasibleExact);
  CHECK(wide.statements == 351);
  CHECK(wide.max_pair_width >= 0.1);

  SynthSpec full = additive;
  full.kind = SynthKind::FullInteraction;
  const IdentifiabilityReport narrow = identifiability_experiment(full, sample);
  CHECK(narrow.identification.status == IdentificationStatus::FeasibleExact);
  CHECK(narrow.max_pair_width < wide.max_pair_width);

  SynthSpec grouped = additive;
  grouped.kind = SynthKind::Groups;
  grouped.groups = {bit(0) | bit(1), bit(2)};
  const IdentifiabilityReport blocks = identifiability_experiment(grouped, sample);
  CHECK(blocks.max_cross_group_interaction <= 1e-6);
  CHECK(blocks.truth_groups.size() == 2);
}

}  // namespace
}  // namespace choquet
