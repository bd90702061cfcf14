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

#include "choquet/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include <doctest.h>

#include "choquet/bits.hpp"
#include "choquet/capacity.hpp"
#include "choquet/integral.hpp"
#include "choquet/random.hpp"
#include "oracles.hpp"

namespace choquet {
namespace {

Capacity min_capacity(int n) { return order_statistic_capacity(n, 1); }
Capacity max_capacity(int n) { return order_statistic_capacity(n, n); }

Profile random_profile(int n, Rng& rng) {
  Profile p(n);
  for (double& v : p) v = rng.uniform();
  return p;
}

TEST_CASE("antichain detection") {
  CHECK(is_antichain({bit(0), bit(1) | bit(2)}));
  CHECK_FALSE(is_antichain({bit(0), bit(0) | bit(1)}));
  CHECK(is_antichain({}));
}

TEST_CASE("minimum and maximum capacities extract to the expected polynomials") {
  const LatticePolynomial min_poly = extract_dnf(min_capacity(3));
  REQUIRE(min_poly.terms.size() == 1);
  CHECK(min_poly.terms[0] == full_mask(3));
  CHECK(render_dnf(min_poly) == "(x0 & x1 & x2)");

  const LatticePolynomial max_poly = extract_dnf(max_capacity(3));
  REQUIRE(max_poly.terms.size() == 3);
  CHECK(render_dnf(max_poly) == "(x0) | (x1) | (x2)");

  const LatticePolynomial min_dual = dualize(min_poly);
  CHECK(render_cnf(min_dual) == "(x0) & (x1) & (x2)");
}

TEST_CASE("rendering matches the documented shapes") {
  LatticePolynomial poly;
  poly.n = 3;
  poly.terms = {bit(0), bit(1) | bit(2)};
  CHECK(render_dnf(poly) == "(x0) | (x1 & x2)");
  LatticePolynomial clauses;
  clauses.n = 3;
  clauses.terms = {bit(0) | bit(1), bit(0) | bit(2)};
  CHECK(render_cnf(clauses) == "(x0 | x1) & (x0 | x2)");
}

TEST_CASE("polynomial evaluation: hand values") {
  LatticePolynomial poly;
  poly.n = 3;
  poly.terms = {bit(0), bit(1) | bit(2)};
  CHECK(eval_dnf(poly, {0.1, 0.7, 0.4}) == 0.4);
  LatticePolynomial projection;
  projection.n = 3;
  projection.terms = {bit(1)};
  CHECK(eval_dnf(projection, {0.3, 0.9, 0.2}) == 0.9);
}

TEST_CASE("extraction rejects non-binary capacities") {
  Capacity c;
  c.n = 2;
  c.values = {0.0, 0.3, 0.5, 1.0};
  CHECK_THROWS_AS(extract_dnf(c), std::invalid_argument);
}

TEST_CASE("every n=4 0-1 capacity round-trips through its polynomial") {
  Rng rng(1409);
  for (const Capacity& c : testing::all_zero_one_capacities(4)) {
    const LatticePolynomial dnf = extract_dnf(c);
    CHECK(is_antichain(dnf.terms));
    const Capacity back = capacity_from_dnf(dnf);
    CHECK(back.values == c.values);
    for (int trial = 0; trial < 5; ++trial) {
      const Profile p = random_profile(4, rng);
      const double direct = choquet(c, p);
      CHECK(eval_dnf(dnf, p) == direct);
      CHECK(eval_cnf(dualize(dnf), p) == direct);
    }
  }
}

TEST_CASE("dualization is an involution on antichains") {
  Rng rng(1511);
  for (const Capacity& c : testing::all_zero_one_capacities(3)) {
    const LatticePolynomial dnf = extract_dnf(c);
    const LatticePolynomial twice = dualize(dualize(dnf));
    CHECK(twice.terms == dnf.terms);
  }
  // Random antichain families on four criteria.
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<mask_t> family;
    for (int draws = 0; draws < 3; ++draws) {
      const mask_t candidate = static_cast<mask_t>(1 + rng.index(15));
      bool comparable = false;
      for (const mask_t present : family) {
        comparable |= (present & candidate) == present || (present & candidate) == candidate;
      }
      if (!comparable) family.push_back(candidate);
    }
    if (family.empty()) continue;
    std::sort(family.begin(), family.end());
    LatticePolynomial poly;
    poly.n = 4;
    poly.terms = family;
    const LatticePolynomial twice = dualize(dualize(poly));
    CHECK(twice.terms == poly.terms);
  }
}

TEST_CASE("antichain families induce capacities whose extraction returns the family") {
  const std::vector<std::vector<mask_t>> families = {
      {bit(0)},
      {bit(0), bit(1) | bit(2)},
      {bit(0) | bit(1), bit(1) | bit(2), bit(0) | bit(2)},
      {full_mask(3)},
  };
  for (const std::vector<mask_t>& family : families) {
    LatticePolynomial poly;
    poly.n = 3;
    poly.terms = family;
    const Capacity induced = capacity_from_dnf(poly);
    CHECK(is_zero_one(induced));
    LatticePolynomial extracted = extract_dnf(induced);
    std::vector<mask_t> sorted_family = family;
    std::sort(sorted_family.begin(), sorted_family.end());
    std::sort(extracted.terms.begin(), extracted.terms.end());
    CHECK(extracted.terms == sorted_family);
  }
}

}  // namespace
}  // namespace choquet
