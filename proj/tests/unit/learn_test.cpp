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

#include "choquet/learn.hpp"

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "choquet/bits.hpp"
#include "choquet/capacity.hpp"
#include "choquet/integral.hpp"
#include "choquet/joint.hpp"
#include "choquet/random.hpp"

namespace choquet {
namespace {

// Complete pairwise statements sampled from a synthetic ground truth on its
// own grid; by construction the truth fits with zero violations.
NumericDataset synthetic_dataset(unsigned long seed, SynthKind kind = SynthKind::FullInteraction,
                                 int levels = 3) {
  SynthSpec spec;
  spec.n = 3;
  spec.levels = levels;
  spec.kind = kind;
  spec.seed = seed;
  if (kind == SynthKind::Groups) spec.groups = {bit(0) | bit(1), bit(2)};
  const GroundTruthModel truth = synth_model(spec);
  SampleSpec sample;
  sample.mode = SampleSpec::Mode::AllGridPairs;
  sample.seed = seed;
  return sample_preferences(truth, sample);
}

TEST_CASE("dataset validation flags out-of-range references and bad margins") {
  NumericDataset d;
  d.n = 2;
  d.alternatives = {{0.1, 0.2}, {0.3, 0.4}};
  d.preferences.push_back({0, 1, PreferenceKind::StrictlyBetter});
  CHECK_NOTHROW(validate_dataset(d));

  NumericDataset bad = d;
  bad.preferences.push_back({0, 5, PreferenceKind::StrictlyBetter});
  CHECK_THROWS_AS(validate_dataset(bad), std::invalid_argument);

  bad = d;
  bad.shapley_comparisons.push_back({1, 1, ImportanceKind::MoreImportant});
  CHECK_THROWS_AS(validate_dataset(bad), std::invalid_argument);

  bad = d;
  bad.interaction_statements.push_back(
      {{0, 1}, std::nullopt, InteractionKind::StrongerThan});  // missing the other pair
  CHECK_THROWS_AS(validate_dataset(bad), std::invalid_argument);

  bad = d;
  bad.deltas.shapley = 0.0;
  CHECK_THROWS_AS(validate_dataset(bad), std::invalid_argument);

  // Empty statement lists are legal.
  NumericDataset empty;
  empty.n = 3;
  CHECK_NOTHROW(validate_dataset(empty));
}

TEST_CASE("a hand-consistent preference set identifies exactly") {
  NumericDataset d;
  d.n = 2;
  d.alternatives = {{0.9, 0.1}, {0.1, 0.9}, {0.5, 0.5}, {0.2, 0.2}};
  d.preferences = {
      {0, 1, PreferenceKind::StrictlyBetter},   // weight criterion 0 higher
      {2, 3, PreferenceKind::StrictlyBetter},
  };
  const IdentificationResult result = identify(d, {});
  CHECK(result.status == IdentificationStatus::FeasibleExact);
  CHECK_FALSE(result.repaired);
  CHECK(result.total_slack == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(is_valid(result.capacity));
  for (const StatementFit& fit : result.fits) CHECK(fit.satisfied);
  CHECK(check_fit(result.capacity, d).size() == result.fits.size());
  for (const StatementFit& fit : check_fit(result.capacity, d)) CHECK(fit.satisfied);
}

TEST_CASE("synthetic complete data identifies exactly and fits with no violations") {
  for (unsigned long seed = 1; seed <= 5; ++seed) {
    const NumericDataset d = synthetic_dataset(seed);
    const IdentificationResult result = identify(d, {});
    REQUIRE(result.status == IdentificationStatus::FeasibleExact);
    CHECK(is_valid(result.capacity));
    for (const StatementFit& fit : check_fit(result.capacity, d)) CHECK(fit.satisfied);
  }
}

TEST_CASE("cyclic strict preferences are infeasible and repaired by least slack") {
  NumericDataset d;
  d.n = 2;
  d.alternatives = {{0.9, 0.1}, {0.5, 0.5}, {0.1, 0.9}};
  d.preferences = {
      {0, 1, PreferenceKind::StrictlyBetter},
      {1, 2, PreferenceKind::StrictlyBetter},
      {2, 0, PreferenceKind::StrictlyBetter},
  };
  const IdentificationResult result = identify(d, {});
  CHECK(result.status == IdentificationStatus::InfeasibleMinSlack);
  CHECK(result.total_slack > 0.0);
  CHECK(is_valid(result.capacity));  // the relaxation still returns a usable capacity
  bool any_unsatisfied = false;
  for (const StatementFit& fit : result.fits) any_unsatisfied |= !fit.satisfied;
  CHECK(any_unsatisfied);
}

TEST_CASE("interaction support caps suppress higher-order coefficients") {
  const NumericDataset d = synthetic_dataset(11);
  IdentificationConfig config;
  config.k_additive = 2;
  const IdentificationResult result = identify(d, config);
  REQUIRE(result.status == IdentificationStatus::FeasibleExact);
  const mask_t triple = full_mask(3);
  CHECK(std::fabs(result.mobius.coeffs[triple]) <= 1e-7);
  CHECK(is_k_additive(result.capacity, 2));
}

TEST_CASE("support groups force cross-group interactions to zero") {
  const NumericDataset d = synthetic_dataset(13, SynthKind::Groups);
  IdentificationConfig config;
  config.support_groups = {bit(0) | bit(1), bit(2)};
  const IdentificationResult result = identify(d, config);
  REQUIRE(result.status == IdentificationStatus::FeasibleExact);
  const MobiusRepresentation m = result.mobius;
  for (mask_t a = 1; a < m.coeffs.size(); ++a) {
    const bool inside_first = (a & ~(bit(0) | bit(1))) == 0;
    const bool inside_second = (a & ~bit(2)) == 0;
    if (!inside_first && !inside_second) {
      CHECK(std::fabs(m.coeffs[a]) <= 1e-9);
    }
  }
  CHECK(std::fabs(interaction_index(result.capacity, bit(0) | bit(2))) <= 1e-6);
  CHECK(std::fabs(interaction_index(result.capacity, bit(1) | bit(2))) <= 1e-6);
}

TEST_CASE("importance comparisons steer the learned Shapley values") {
  NumericDataset d;
  d.n = 3;
  d.shapley_comparisons.push_back({2, 0, ImportanceKind::MoreImportant});
  d.shapley_comparisons.push_back({0, 1, ImportanceKind::EquallyImportant});
  const IdentificationResult result = identify(d, {});
  REQUIRE(result.status == IdentificationStatus::FeasibleExact);
  const std::vector<double> phi = shapley(result.capacity);
  CHECK(phi[2] >= phi[0] + d.deltas.shapley - 1e-9);
  CHECK(std::fabs(phi[0] - phi[1]) <= d.deltas.shapley + 1e-9);
}

TEST_CASE("interaction statements steer the learned pair indices") {
  NumericDataset d;
  d.n = 3;
  d.interaction_statements.push_back({{0, 1}, std::nullopt, InteractionKind::Complementary});
  d.interaction_statements.push_back({{1, 2}, std::nullopt, InteractionKind::Redundant});
  const IdentificationResult result = identify(d, {});
  REQUIRE(result.status == IdentificationStatus::FeasibleExact);
  // Complementary pins the pair index to [0, 1], redundant to [-1, 0].
  CHECK(interaction_index(result.capacity, bit(0) | bit(1)) >= -1e-9);
  CHECK(interaction_index(result.capacity, bit(1) | bit(2)) <= 1e-9);
  for (const StatementFit& fit : result.fits) CHECK(fit.satisfied);

  NumericDataset comparison;
  comparison.n = 3;
  comparison.interaction_statements.push_back(
      {{0, 1}, std::make_optional(std::make_pair(0, 2)), InteractionKind::StrongerThan});
  const IdentificationResult stronger = identify(comparison, {});
  REQUIRE(stronger.status == IdentificationStatus::FeasibleExact);
  CHECK(interaction_index(stronger.capacity, bit(0) | bit(1)) >=
        interaction_index(stronger.capacity, bit(0) | bit(2)) + comparison.deltas.interaction -
            1e-9);
}

TEST_CASE("veto and favour statements pin the coalition endpoints") {
  NumericDataset with_veto;
  with_veto.n = 3;
  with_veto.veto = {0};
  const IdentificationResult vetoed = identify(with_veto, {});
  REQUIRE(vetoed.status == IdentificationStatus::FeasibleExact);
  // Every coalition missing criterion 0 carries no weight.
  CHECK(vetoed.capacity.values[bit(1)] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(vetoed.capacity.values[bit(2)] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(vetoed.capacity.values[bit(1) | bit(2)] == doctest::Approx(0.0).epsilon(1e-9));

  NumericDataset with_favour;
  with_favour.n = 3;
  with_favour.favour = {1};
  const IdentificationResult favoured = identify(with_favour, {});
  REQUIRE(favoured.status == IdentificationStatus::FeasibleExact);
  CHECK(favoured.capacity.values[bit(1)] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(favoured.capacity.values[bit(0) | bit(1)] == doctest::Approx(1.0).epsilon(1e-9));

  NumericDataset contradictory;
  contradictory.n = 3;
  contradictory.veto = {0};
  contradictory.favour = {1};
  CHECK_THROWS_AS(identify(contradictory, {}), std::domain_error);
}

TEST_CASE("the widest-margin objective keeps a safety buffer when room exists") {
  NumericDataset d;
  d.n = 2;
  d.alternatives = {{0.9, 0.1}, {0.1, 0.9}};
  d.preferences = {{0, 1, PreferenceKind::StrictlyBetter}};
  IdentificationConfig config;
  config.objective = IdentificationObjective::MaxMinSlack;
  const IdentificationResult result = identify(d, config);
  REQUIRE(result.status == IdentificationStatus::FeasibleExact);
  CHECK(result.margin > d.deltas.learning_set);
  for (const StatementFit& fit : result.fits) {
    CHECK(fit.satisfied);
    CHECK(fit.margin >= result.margin - 1e-9);
  }
}

TEST_CASE("variable maps give affine views that reproduce direct evaluation") {
  Rng rng(1901);
  const Capacity c = random_capacity(3, rng);
  const MobiusRepresentation m = mobius(c);

  IdentificationConfig plain;
  const VariableMap map = make_variable_map(3, plain);
  REQUIRE(map.mode == VariableMap::Mode::CapacityValues);

  // Load the capacity into map coordinates, then check every affine view.
  std::vector<double> x(map.num_vars, 0.0);
  for (mask_t a = 0; a < c.values.size(); ++a) {
    if (map.column_of[a] >= 0) x[map.column_of[a]] = c.values[a];
  }
  const auto evaluate = [&](const Affine& view) {
    double total = view.constant;
    for (int v = 0; v < map.num_vars; ++v) total += view.coeffs[v] * x[v];
    return total;
  };
  for (mask_t a = 0; a < c.values.size(); ++a) {
    CHECK(evaluate(map.capacity_value(a)) == doctest::Approx(c.values[a]).epsilon(1e-12));
  }
  const std::vector<double> phi = shapley(c);
  for (int i = 0; i < 3; ++i) {
    CHECK(evaluate(map.shapley_value(i)) == doctest::Approx(phi[i]).epsilon(1e-9));
  }
  CHECK(evaluate(map.pair_interaction(0, 2)) ==
        doctest::Approx(interaction_pair_mobius(m, 0, 2)).epsilon(1e-9));
  for (int trial = 0; trial < 10; ++trial) {
    Profile p(3);
    for (double& v : p) v = rng.uniform();
    CHECK(evaluate(map.overall_score(p)) == doctest::Approx(choquet(c, p)).epsilon(1e-9));
  }
  const Capacity rebuilt = map.extract(x);
  CHECK(rebuilt.values == c.values);

  SUBCASE("degenerate criterion counts are rejected") {
    CHECK_THROWS_AS(make_variable_map(1, plain), std::invalid_argument);
  }
}

}  // namespace
}  // namespace choquet
