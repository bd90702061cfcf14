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

#include "choquet/axioms.hpp"
#include "choquet/capacity.hpp"
#include "choquet/joint.hpp"
#include "choquet/lattice.hpp"
#include "choquet/learn.hpp"
#include "choquet/values.hpp"

namespace choquet {

// Payload of a values file: per-criterion level labels paired with the
// numeric worth of each level, in the declared level order.
struct LabeledValues {
  std::vector<std::vector<std::string>> level_labels;
  ValueFunctionSet values;
};

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

// Reads a whole text file; throws std::invalid_argument naming the path when
// it cannot be opened.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// ---------------------------------------------------------------------------
// Document writers
// ---------------------------------------------------------------------------
// Every writer emits one line of structured text. Numbers are printed with
// round-trip precision, so writing and re-parsing reproduces the exact
// doubles; given identical inputs the output is byte-identical.

// Fields `n` and `nu`; one record per non-empty subset ({"set": [indices],
// "value": v}) in increasing bitmask order; the empty set is implied.
std::string capacity_to_text(const Capacity& capacity);
std::string dataset_to_text(const NumericDataset& dataset);
std::string categorical_to_text(const CategoricalDataset& dataset);
std::string values_to_text(const LabeledValues& values);
std::string model_to_text(const GroundTruthModel& model);

// ---------------------------------------------------------------------------
// Document parsers
// ---------------------------------------------------------------------------
// Inverses of the writers. Structural errors throw std::invalid_argument
// with a one-line message naming the source and the offending field; the
// shape is checked, deeper semantic validity (monotonicity and the like) is
// left to the dedicated validators so defective objects can still be loaded
// for diagnosis.

Capacity parse_capacity(const std::string& text, const std::string& source = "capacity");
NumericDataset parse_dataset(const std::string& text, const std::string& source = "dataset");
CategoricalDataset parse_categorical(const std::string& text,
                                     const std::string& source = "dataset");
LabeledValues parse_values(const std::string& text, const std::string& source = "values");
GroundTruthModel parse_model(const std::string& text, const std::string& source = "model");

// Grid file: field `levels`, one ascending list of reals per criterion. The
// level numbers double as their own worth, giving a ready-made value set for
// relation scans.
ValueFunctionSet parse_grid(const std::string& text, const std::string& source = "grid");

// ---------------------------------------------------------------------------
// Result records
// ---------------------------------------------------------------------------
// One-line structured records for command results — the stable machine
// contract. Any capacity embedded in a record uses the capacity document
// shape above and re-parses bit-identically.

std::string evaluation_record(double score);
std::string index_record(const IndexReport& report);
std::string check_record(const std::vector<CapacityViolation>& violations, bool convex);
std::string lattice_record(const LatticePolynomial& dnf, const LatticePolynomial& cnf);
std::string identification_record(const IdentificationResult& result);
std::string joint_record(const JointLearnResult& result,
                         const std::vector<std::vector<std::string>>& level_labels);
std::string scan_record(const std::string& axiom, const ScanReport& report);
std::string identifiability_record(const IdentifiabilityReport& report);

}  // namespace choquet
