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

#include "choquet/values.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "choquet/bits.hpp"

namespace choquet {

Profile ValueFunctionSet::apply(const std::vector<int>& tuple) const {
  if (tuple.size() != levels.size()) {
    throw std::invalid_argument("level tuple has " + std::to_string(tuple.size()) +
                                " entries for " + std::to_string(levels.size()) + " criteria");
  }
  Profile profile(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (tuple[i] < 0 || static_cast<std::size_t>(tuple[i]) >= levels[i].size()) {
      throw std::invalid_argument("level " + std::to_string(tuple[i]) +
                                  " is out of range for criterion " + std::to_string(i));
    }
    profile[i] = levels[i][tuple[i]];
  }
  return profile;
}

void validate_values(const ValueFunctionSet& values) {
  const int n = values.criteria();
  if (n < 2 || n > kMaxCriteria) {
    throw std::invalid_argument("criterion count must be between 2 and " +
                                std::to_string(kMaxCriteria) + ", got " + std::to_string(n));
  }
  double lowest = std::numeric_limits<double>::infinity();
  double highest = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const std::vector<double>& f = values.levels[i];
    if (f.empty()) {
      throw std::invalid_argument("criterion " + std::to_string(i) + " has no levels");
    }
    for (std::size_t l = 0; l < f.size(); ++l) {
      if (!std::isfinite(f[l])) {
        throw std::invalid_argument("criterion " + std::to_string(i) + " has a non-finite value " +
                                    "at level " + std::to_string(l));
      }
      if (l > 0 && f[l] < f[l - 1]) {
        throw std::invalid_argument("criterion " + std::to_string(i) +
                                    " has decreasing values between levels " +
                                    std::to_string(l - 1) + " and " + std::to_string(l));
      }
      lowest = std::min(lowest, f[l]);
      highest = std::max(highest, f[l]);
    }
  }
  if (lowest != 0.0 || highest != 1.0) {
    throw std::invalid_argument(
        "value functions must span the anchored scale: smallest value 0 and largest 1, got [" +
        std::to_string(lowest) + ", " + std::to_string(highest) + "]");
  }
}

bool is_valid_values(const ValueFunctionSet& values) {
  try {
    validate_values(values);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace choquet
