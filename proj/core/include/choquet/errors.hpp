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

#include <stdexcept>
#include <string>

namespace choquet {

// Thrown when two algebraically equivalent computation routes disagree.
// This always indicates a defect in this library, never a data problem,
// and is deliberately distinct from the input-validation exceptions.
class internal_consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Thrown when a computation would exceed its configured resource cap
// (pivot limits, scan-size limits).  The work is aborted, never trimmed
// to a partial answer.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by operations that require a valid capacity (monotone and
// normalized) when handed one that is not.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace choquet
