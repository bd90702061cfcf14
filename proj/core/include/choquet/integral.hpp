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

#include <vector>

#include "choquet/capacity.hpp"

namespace choquet {

// A profile assigns one real score per criterion; profile[i] is the score of
// criterion i. Scores may be any reals (negative values are fine).
using Profile = std::vector<double>;

// Choquet integral of `profile` with respect to `capacity`, computed from the
// sorted scores: criteria are ranked by increasing score (ties broken by
// criterion index, so the result is deterministic) and each score is weighted
// by the capacity drop of the set of criteria at or above it.
//
// Throws std::invalid_argument if profile.size() != capacity.n. The capacity
// is not re-validated here; call require_valid() upstream if needed.
double choquet(const Capacity& capacity, const Profile& profile);

// Choquet integral evaluated from interaction coefficients: the sum over
// coalitions A of m(A) * min_{i in A} profile[i]. Agrees with choquet() on
// every profile when `m` is the transform of the same capacity.
double choquet_mobius(const MobiusRepresentation& m, const Profile& profile);

// Per-coalition weights c such that, for every capacity v on n criteria,
// choquet(v, profile) == sum_A c[A] * v(A). c[A] is the increment between
// consecutive sorted scores whose upper set equals A (zero for all other
// coalitions), plus the smallest score contributed at A = full set. Useful
// for assembling linear constraints in which the capacity is the unknown.
//
// The returned vector has size 1 << n; entry 0 (empty set) is always 0.
std::vector<double> choquet_coefficients(int n, const Profile& profile);

// The 0-1 capacity whose Choquet integral returns the k-th smallest score
// (k = 1 gives the minimum, k = n the maximum): v(A) = 1 iff |A| >= n-k+1.
// Throws std::invalid_argument unless 1 <= k <= n.
Capacity order_statistic_capacity(int n, int k);

}  // namespace choquet
