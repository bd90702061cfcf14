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

#include "choquet/integral.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "choquet/bits.hpp"

namespace choquet {
namespace {

void check_profile(int n, const Profile& profile) {
  if (static_cast<int>(profile.size()) != n) {
    throw std::invalid_argument("profile has " + std::to_string(profile.size()) +
                                " scores but the capacity is over " + std::to_string(n) +
                                " criteria");
  }
}

// Criterion indices sorted by increasing score, ties by index. A stable sort
// on the identity permutation gives exactly that ordering.
std::vector<int> ascending_order(const Profile& profile) {
  std::vector<int> order(profile.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return profile[a] < profile[b]; });
  return order;
}

}  // namespace

double choquet(const Capacity& capacity, const Profile& profile) {
  check_profile(capacity.n, profile);
  const std::vector<int> order = ascending_order(profile);

  // Walk the criteria from worst to best score. `upper` holds the criteria
  // whose scores are still ahead of the current position; its capacity drops
  // as criteria are consumed, and each score picks up the drop as its weight.
  double total = 0.0;
  mask_t upper = full_mask(capacity.n);
  for (int k = 0; k < capacity.n; ++k) {
    const mask_t next = upper ^ bit(order[k]);
    total += profile[order[k]] * (capacity.at(upper) - capacity.at(next));
    upper = next;
  }
  return total;
}

double choquet_mobius(const MobiusRepresentation& m, const Profile& profile) {
  check_profile(m.n, profile);
  const mask_t full = full_mask(m.n);
  double total = 0.0;
  for (mask_t a = 1; a <= full; ++a) {
    const double coeff = m.coeffs[a];
    if (coeff == 0.0) continue;
    double lowest = profile[std::countr_zero(a)];
    for (mask_t rest = a & (a - 1); rest != 0; rest &= rest - 1) {
      lowest = std::min(lowest, profile[std::countr_zero(rest)]);
    }
    total += coeff * lowest;
  }
  return total;
}

std::vector<double> choquet_coefficients(int n, const Profile& profile) {
  check_profile(n, profile);
  const std::vector<int> order = ascending_order(profile);

  // Decompose the integral as: smallest score times v(full set), plus each
  // increment between consecutive sorted scores times the capacity of the
  // criteria from that rank upward. Collecting terms per coalition yields the
  // weights; coalitions that are not an upper set of the ordering get 0.
  std::vector<double> weights(std::size_t{1} << n, 0.0);
  mask_t upper = full_mask(n);
  weights[upper] = profile[order[0]];
  for (int k = 1; k < n; ++k) {
    upper ^= bit(order[k - 1]);
    weights[upper] += profile[order[k]] - profile[order[k - 1]];
  }
  return weights;
}

Capacity order_statistic_capacity(int n, int k) {
  if (n < 2 || n > kMaxCriteria) {
    throw std::invalid_argument("criterion count must be between 2 and " +
                                std::to_string(kMaxCriteria) + ", got " + std::to_string(n));
  }
  if (k < 1 || k > n) {
    throw std::invalid_argument("order statistic rank must be between 1 and " +
                                std::to_string(n) + ", got " + std::to_string(k));
  }
  Capacity capacity;
  capacity.n = n;
  capacity.values.assign(std::size_t{1} << n, 0.0);
  const int threshold = n - k + 1;
  const mask_t full = full_mask(n);
  for (mask_t a = 1; a <= full; ++a) {
    if (set_size(a) >= threshold) capacity.values[a] = 1.0;
  }
  return capacity;
}

}  // namespace choquet
