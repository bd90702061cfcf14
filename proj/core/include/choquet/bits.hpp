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

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace choquet {

// Subsets of the criteria set {0, ..., n-1} are encoded as bitmasks:
// bit i set <=> criterion i belongs to the subset.
using mask_t = std::uint32_t;

inline constexpr int kMaxCriteria = 20;

inline constexpr mask_t bit(int i) { return mask_t{1} << i; }

inline constexpr mask_t full_mask(int n) { return (mask_t{1} << n) - 1; }

inline constexpr bool contains(mask_t set, int i) { return (set >> i) & 1u; }

inline int set_size(mask_t set) { return std::popcount(set); }

// All members of `set`, in increasing order.
inline std::vector<int> set_members(mask_t set) {
  std::vector<int> out;
  for (mask_t rest = set; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

inline mask_t mask_from_members(const std::vector<int>& members) {
  mask_t m = 0;
  for (int i : members) m |= bit(i);
  return m;
}

// Renders a subset as "{0,2,5}" ("{}" for the empty set).
inline std::string set_to_string(mask_t set) {
  std::string out = "{";
  bool first = true;
  for (int i : set_members(set)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  out += "}";
  return out;
}

// Visits every subset of `set` (including `set` itself and the empty set).
// The callback order is decreasing in the bitmask value.
template <typename Fn>
void for_each_subset(mask_t set, Fn&& fn) {
  mask_t sub = set;
  while (true) {
    fn(sub);
    if (sub == 0) break;
    sub = (sub - 1) & set;
  }
}

// Pascal's triangle with every entry exactly representable in a double
// (n stays far below the 2^53 threshold for n <= kMaxCriteria + 1).
class BinomialTable {
 public:
  explicit BinomialTable(int n) : n_(n), c_(static_cast<std::size_t>(n + 1) * (n + 1), 0.0) {
    for (int i = 0; i <= n; ++i) {
      at(i, 0) = 1.0;
      for (int j = 1; j <= i; ++j) at(i, j) = at(i - 1, j - 1) + (j <= i - 1 ? at(i - 1, j) : 0.0);
    }
  }
  double operator()(int i, int j) const {
    if (j < 0 || j > i) return 0.0;
    return c_[static_cast<std::size_t>(i) * (n_ + 1) + j];
  }

 private:
  double& at(int i, int j) { return c_[static_cast<std::size_t>(i) * (n_ + 1) + j]; }
  int n_;
  std::vector<double> c_;
};

}  // namespace choquet
