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
#include "choquet/integral.hpp"

namespace choquet {

// A lattice polynomial over n criteria in normal form: an antichain of
// non-empty coalitions, sorted by increasing mask value. The same structure
// serves two readings:
//   * disjunctive: max over terms of the min score inside each term;
//   * conjunctive: min over clauses of the max score inside each clause.
// Which reading applies is chosen at evaluation/rendering time.
struct LatticePolynomial {
  int n = 0;
  std::vector<mask_t> terms;
};

// True when no set in `sets` contains another (duplicates count as
// containment). The empty family is an antichain.
bool is_antichain(const std::vector<mask_t>& sets);

// Minimal winning coalitions of a 0-1 capacity: the inclusion-minimal sets A
// with v(A) = 1. The result is the disjunctive normal form of the capacity's
// Choquet integral. Throws validation_error if the capacity is invalid and
// std::invalid_argument if it takes values other than 0 and 1.
LatticePolynomial extract_dnf(const Capacity& capacity);

// Minimal transversals: the inclusion-minimal sets meeting every term of
// `poly`. Swaps the disjunctive and conjunctive readings of the same
// function; applying it twice returns the input. Found by exhaustive scan
// over all coalitions, so intended for small n.
LatticePolynomial dualize(const LatticePolynomial& poly);

// The 0-1 capacity whose winning coalitions are the supersets of the terms:
// v(A) = 1 iff A contains some term. Inverse of extract_dnf.
Capacity capacity_from_dnf(const LatticePolynomial& poly);

// Disjunctive evaluation: max over terms of min_{i in term} profile[i].
// Exact (pure selection, no arithmetic).
double eval_dnf(const LatticePolynomial& poly, const Profile& profile);

// Conjunctive evaluation: min over clauses of max_{i in clause} profile[i].
double eval_cnf(const LatticePolynomial& poly, const Profile& profile);

// Text forms with criteria named x0, x1, ...:
//   render_dnf({{0},{1,2}})      -> "(x0) | (x1 & x2)"
//   render_cnf({{0,1},{0,2}})    -> "(x0 | x1) & (x0 | x2)"
std::string render_dnf(const LatticePolynomial& poly);
std::string render_cnf(const LatticePolynomial& poly);

}  // namespace choquet
