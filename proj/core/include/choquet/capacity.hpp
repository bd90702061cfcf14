// Copyright 2026 The Choquet Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "choquet/bits.hpp"
#include "choquet/errors.hpp"

namespace choquet {

// Numeric policy shared across the library.
inline constexpr double kEqualityTol = 1e-9;       // |a - b| below this counts as equal
inline constexpr double kMonotonicitySlack = 1e-12;  // slack allowed when validating monotonicity

// A monotone normalized set function ("capacity") on 2 <= n <= 20 criteria,
// stored densely: values[mask] is the weight of the subset encoded by mask.
// Instances are plain values; all operations on them are free functions and
// touch no shared state, so they are safe to use from concurrent threads.
struct Capacity {
  int n = 0;
  std::vector<double> values;  // size 1 << n, values[0] == 0, values.back() == 1

  double at(mask_t set) const { return values[set]; }
  mask_t full() const { return full_mask(n); }
};

// Coefficients of the same set function in its additive decomposition over
// subsets; coeffs[mask] is the weight attached to that subset.  The empty
// set's coefficient is always 0 for a capacity.
struct MobiusRepresentation {
  int n = 0;
  std::vector<double> coeffs;  // size 1 << n

  double at(mask_t set) const { return coeffs[set]; }
};

// One defect found by validate().
struct CapacityViolation {
  enum class Kind {
    EmptySetNotZero,  // values[{}] != 0
    FullSetNotOne,    // values[N] != 1
    Monotonicity,     // subset weighs more than a superset
  };
  Kind kind = Kind::Monotonicity;
  mask_t subset = 0;       // meaningful for Monotonicity
  mask_t superset = 0;     // meaningful for Monotonicity
  double subset_value = 0;
  double superset_value = 0;

  std::string describe() const;
};

// Importance and pairwise-interaction summary of a capacity.
struct IndexReport {
  struct PairInteraction {
    int i = 0, j = 0;
    double value = 0;
  };
  std::vector<double> shapley;            // size n, sums to 1
  std::vector<PairInteraction> pairwise;  // all i < j, in lexicographic order
};

// --- validation -------------------------------------------------------------

// Lists every violation of normalization and monotonicity.  Monotonicity is
// checked over all subset pairs (A, B) with A a proper subset of B; a pair is
// reported when values[A] > values[B] + kMonotonicitySlack.  For n > 14 the
// full pair enumeration is intractable, so only covering pairs (B = A + one
// element) are enumerated there; the "empty result iff valid" contract is
// unaffected since covering-pair monotonicity implies the rest.
// Throws std::invalid_argument when values.size() != 2^n or n is out of range.
std::vector<CapacityViolation> validate(const Capacity& capacity);

// Fast validity predicate (covering pairs only; same accept set as validate).
bool is_valid(const Capacity& capacity);

// Throws validation_error describing the first defect when invalid.
void require_valid(const Capacity& capacity);

// --- transforms -------------------------------------------------------------

// Raw in-place transforms over a dense table of 2^n reals.  No validation;
// these are the n * 2^n building blocks the typed wrappers sit on.
void mobius_transform_inplace(std::vector<double>& table, int n);
void zeta_transform_inplace(std::vector<double>& table, int n);

// Alternating-sum transform of a valid capacity.  Throws validation_error on
// invalid input.
MobiusRepresentation mobius(const Capacity& capacity);

// Inverse transform.  Reconstructs the set function; deliberately does not
// check monotonicity (learning code legitimately builds transient
// non-monotone tables), only the shape of the input.
Capacity zeta(const MobiusRepresentation& m);

// --- importance and interaction ---------------------------------------------

// Weighted-marginal importance of each criterion; entries sum to 1.
std::vector<double> shapley(const Capacity& capacity);

// Same quantity computed from the additive decomposition: the coefficient of
// every set containing i, split evenly across the set's members.
std::vector<double> shapley_from_mobius(const MobiusRepresentation& m);

// Signed interaction of the (nonempty) coalition T, in [-1, 1] for pairs.
// Singleton T coincides with the corresponding shapley() entry.
// Throws std::invalid_argument when T is empty or out of range.
double interaction_index(const Capacity& capacity, mask_t t);

// Pairwise interaction from the additive decomposition.
double interaction_pair_mobius(const MobiusRepresentation& m, int i, int j);

// Shapley vector plus all pairwise interactions of a valid capacity.
IndexReport indices(const Capacity& capacity);

// --- structure predicates ----------------------------------------------------

// True iff the capacity is supermodular:
//   values[A|B] + values[A&B] >= values[A] + values[B]  (within kEqualityTol)
// for every pair of subsets.  The verdict is double-checked against the
// equivalent sign condition on partial sums of the additive decomposition
// (sum of coeffs over {i,j} <= B <= A nonnegative for every pair {i,j} and
// every A containing it); a disagreement between the two routes throws
// internal_consistency_error instead of being resolved silently.
bool is_convex(const Capacity& capacity);

// The two routes individually, exposed so tests can cross-examine them.
bool is_supermodular(const Capacity& capacity);
bool mobius_convexity_criterion(const MobiusRepresentation& m);

// True iff every decomposition coefficient on sets larger than k is zero
// (|coefficient| <= 1e-9).  Requires 1 <= k <= n.
bool is_k_additive(const Capacity& capacity, int k);

// True iff every value is 0 or 1 within kEqualityTol.
bool is_zero_one(const Capacity& capacity);

}  // namespace choquet
