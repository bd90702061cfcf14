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

#include "choquet/capacity.hpp"

#include <cmath>

#include <doctest.h>

#include "choquet/bits.hpp"
#include "choquet/errors.hpp"
#include "choquet/joint.hpp"  // random_capacity
#include "choquet/random.hpp"
#include "oracles.hpp"

namespace choquet {
namespace {

// The two-criterion worked example used across the suites:
// nu({0}) = 0.3, nu({1}) = 0.5, nu({0,1}) = 1.
Capacity hand_example() {
  Capacity c;
  c.n = 2;
  c.values = {0.0, 0.3, 0.5, 1.0};
  return c;
}

Capacity uniform_additive(int n) {
  Capacity c;
  c.n = n;
  c.values.resize(std::size_t{1} << n);
  for (mask_t a = 0; a < c.values.size(); ++a) {
    c.values[a] = static_cast<double>(std::popcount(a)) / n;
  }
  return c;
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

TEST_CASE("validation accepts the worked example and flags broken tables") {
  CHECK(validate(hand_example()).empty());
  CHECK(is_valid(hand_example()));

  Capacity bad_empty = hand_example();
  bad_empty.values[0] = 0.1;
  auto violations = validate(bad_empty);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == CapacityViolation::Kind::EmptySetNotZero);
  CHECK_FALSE(violations[0].describe().empty());

  Capacity bad_full = hand_example();
  bad_full.values[3] = 0.9;
  violations = validate(bad_full);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == CapacityViolation::Kind::FullSetNotOne);

  Capacity bad_monotone = hand_example();
  bad_monotone.values[1] = 0.6;
  bad_monotone.values[3] = 0.55;
  violations = validate(bad_monotone);
  REQUIRE_FALSE(violations.empty());
  bool found = false;
  for (const auto& v : violations) found |= v.kind == CapacityViolation::Kind::Monotonicity;
  CHECK(found);
  CHECK_THROWS_AS(require_valid(bad_monotone), validation_error);
}

TEST_CASE("validation tolerates tiny monotonicity slack") {
  Capacity c = hand_example();
  c.values[3] = 1.0;
  c.values[2] = 1.0 + 0.5e-12;  // within the allowance
  // full-set value stays exactly 1, the inner value dips just above it
  CHECK(validate(c).empty());
}

TEST_CASE("Moebius transform of the worked example is frozen") {
  const MobiusRepresentation m = mobius(hand_example());
  CHECK(m.coeffs[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(m.coeffs[1] == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(m.coeffs[2] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(m.coeffs[3] == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("fast transforms match the quadratic sums and invert each other") {
  Rng rng(101);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const Capacity c = random_capacity(n, rng);
      const MobiusRepresentation m = mobius(c);
      const std::vector<double> reference = testing::mobius_by_sums(c.values, n);
      for (std::size_t a = 0; a < reference.size(); ++a) {
        CHECK(m.coeffs[a] == doctest::Approx(reference[a]).epsilon(1e-9));
      }
      const Capacity back = zeta(m);
      for (std::size_t a = 0; a < c.values.size(); ++a) {
        CHECK(back.values[a] == doctest::Approx(c.values[a]).epsilon(1e-9));
      }
      const std::vector<double> forth = testing::zeta_by_sums(m.coeffs, n);
      for (std::size_t a = 0; a < forth.size(); ++a) {
        CHECK(forth[a] == doctest::Approx(c.values[a]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("Shapley values: frozen example, two forms, permutation sums, total one") {
  const Capacity example = hand_example();
  const std::vector<double> phi = shapley(example);
  CHECK(phi[0] == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(phi[1] == doctest::Approx(0.6).epsilon(1e-12));

  Rng rng(202);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const Capacity c = random_capacity(n, rng);
      const std::vector<double> direct = shapley(c);
      const std::vector<double> via_mobius = shapley_from_mobius(mobius(c));
      const std::vector<double> reference = testing::shapley_by_sums(c);
      double total = 0.0;
      for (int i = 0; i < n; ++i) {
        CHECK(direct[i] == doctest::Approx(via_mobius[i]).epsilon(1e-9));
        CHECK(direct[i] == doctest::Approx(reference[i]).epsilon(1e-9));
        total += direct[i];
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("interaction index: frozen example, two forms, singleton equals Shapley") {
  const Capacity example = hand_example();
  CHECK(interaction_index(example, bit(0) | bit(1)) == doctest::Approx(0.2).epsilon(1e-12));

  Rng rng(303);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const Capacity c = random_capacity(n, rng);
      const MobiusRepresentation m = mobius(c);
      const std::vector<double> phi = shapley(c);
      for (int i = 0; i < n; ++i) {
        CHECK(interaction_index(c, bit(i)) == doctest::Approx(phi[i]).epsilon(1e-9));
        for (int j = i + 1; j < n; ++j) {
          const double direct = interaction_index(c, bit(i) | bit(j));
          CHECK(direct == doctest::Approx(interaction_pair_mobius(m, i, j)).epsilon(1e-9));
          CHECK(direct ==
                doctest::Approx(testing::pair_interaction_by_sums(c, i, j)).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("index report covers every criterion and unordered pair") {
  Rng rng(404);
  const Capacity c = random_capacity(4, rng);
  const IndexReport report = indices(c);
  CHECK(report.shapley.size() == 4);
  CHECK(report.pairwise.size() == 6);
  for (const auto& pair : report.pairwise) {
    CHECK(pair.i < pair.j);
    CHECK(pair.value ==
          doctest::Approx(interaction_index(c, bit(pair.i) | bit(pair.j))).epsilon(1e-12));
  }
}

TEST_CASE("additive capacities degenerate as expected") {
  const Capacity c = uniform_additive(4);
  CHECK(is_k_additive(c, 1));
  const std::vector<double> phi = shapley(c);
  for (int i = 0; i < 4; ++i) {
    CHECK(phi[i] == doctest::Approx(c.values[bit(i)]).epsilon(1e-9));
    for (int j = i + 1; j < 4; ++j) {
      CHECK(interaction_index(c, bit(i) | bit(j)) == doctest::Approx(0.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("k-additivity detects the exact interaction order") {
  Capacity c = uniform_additive(4);
  CHECK(is_k_additive(c, 1));
  CHECK(is_k_additive(c, 2));  // higher caps stay true

  // Inject a genuine pair term via the inverse transform.
  MobiusRepresentation m = mobius(c);
  m.coeffs[bit(0) | bit(1)] += 0.1;
  m.coeffs[bit(0)] -= 0.05;
  m.coeffs[bit(1)] -= 0.05;
  const Capacity pairwise = zeta(m);
  CHECK_FALSE(is_k_additive(pairwise, 1));
  CHECK(is_k_additive(pairwise, 2));
}

TEST_CASE("convexity: both criteria agree with the pairwise oracle") {
  Rng rng(505);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const Capacity c = random_capacity(n, rng);
      const bool verdict = is_convex(c);  // throws if the two routes disagree
      CHECK(verdict == is_supermodular(c));
      CHECK(verdict == mobius_convexity_criterion(mobius(c)));
      CHECK(verdict == testing::supermodular_by_pairs(c));
    }
  }
}

TEST_CASE("convexity accepts the squared-share family and rejects the root") {
  const auto square = [](double x) { return x * x; };
  const auto root = [](double x) { return std::sqrt(x); };
  for (int n = 2; n <= 5; ++n) {
    CHECK(is_convex(cardinality_capacity(n, square)));
    CHECK_FALSE(is_convex(cardinality_capacity(n, root)));
  }
}

TEST_CASE("zero-one detection matches exhaustive enumeration counts") {
  // Frozen counts: the nonconstant monotone 0-1 set functions.
  const std::size_t expected[] = {0, 1, 4, 18, 166};
  for (int n = 2; n <= 4; ++n) {
    const std::vector<Capacity> all = testing::all_zero_one_capacities(n);
    CHECK(all.size() == expected[n]);
    for (const Capacity& c : all) {
      CHECK(is_zero_one(c));
      CHECK(is_valid(c));
    }
  }
  Rng rng(606);
  CHECK_FALSE(is_zero_one(random_capacity(3, rng)));
}

TEST_CASE("random capacities from the library generator are valid") {
  Rng rng(707);
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      CHECK(validate(random_capacity(n, rng)).empty());
    }
  }
}

}  // namespace
}  // namespace choquet
