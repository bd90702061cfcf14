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

#include "choquet/integral.hpp"

namespace choquet {

// Per-criterion marginal value functions on ordered discrete levels. Entry
// levels[i][l] is the numeric worth of level l of criterion i, so a tuple of
// level indices maps to the profile (levels[0][t0], ..., levels[n-1][t_{n-1}]).
struct ValueFunctionSet {
  std::vector<std::vector<double>> levels;

  int criteria() const { return static_cast<int>(levels.size()); }
  int level_count(int i) const { return static_cast<int>(levels[i].size()); }

  // Maps one level tuple to its numeric profile. The tuple must have one
  // entry per criterion, each within that criterion's level range.
  Profile apply(const std::vector<int>& tuple) const;
};

// Structural check: at least two criteria, every criterion has at least one
// level, values are finite and nondecreasing along each criterion's level
// order, the smallest value across the set is 0 and the largest is 1 (the
// common scale is anchored). Throws std::invalid_argument otherwise.
void validate_values(const ValueFunctionSet& values);
bool is_valid_values(const ValueFunctionSet& values);

}  // namespace choquet
