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

#include "choquet/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "choquet/bits.hpp"

namespace choquet {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& source, const std::string& message) {
  throw std::invalid_argument(source + ": " + message);
}

json parse_root(const std::string& text, const std::string& source) {
  json root = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (root.is_discarded()) fail(source, "not a well-formed document");
  if (!root.is_object()) fail(source, "top level must be an object");
  return root;
}

const json& require_field(const json& object, const char* field, const std::string& source) {
  const auto it = object.find(field);
  if (it == object.end()) fail(source, std::string("missing field \"") + field + "\"");
  return *it;
}

int get_int(const json& value, const char* field, const std::string& source) {
  if (!value.is_number_integer()) fail(source, std::string("field \"") + field + "\" must be an integer");
  return value.get<int>();
}

double get_double(const json& value, const char* field, const std::string& source) {
  if (!value.is_number()) fail(source, std::string("field \"") + field + "\" must be a number");
  return value.get<double>();
}

std::string get_string(const json& value, const char* field, const std::string& source) {
  if (!value.is_string()) fail(source, std::string("field \"") + field + "\" must be a string");
  return value.get<std::string>();
}

const json& get_array(const json& value, const char* field, const std::string& source) {
  if (!value.is_array()) fail(source, std::string("field \"") + field + "\" must be a list");
  return value;
}

// --- shared fragments -------------------------------------------------------

json capacity_json(const Capacity& capacity) {
  json nu = json::array();
  for (mask_t a = 1; a < static_cast<mask_t>(capacity.values.size()); ++a) {
    nu.push_back(json{{"set", set_members(a)}, {"value", capacity.values[a]}});
  }
  return json{{"n", capacity.n}, {"nu", std::move(nu)}};
}

Capacity capacity_from_json(const json& object, const std::string& source) {
  Capacity capacity;
  capacity.n = get_int(require_field(object, "n", source), "n", source);
  if (capacity.n < 1 || capacity.n > kMaxCriteria) {
    fail(source, "field \"n\" must be between 1 and " + std::to_string(kMaxCriteria));
  }
  const mask_t full = full_mask(capacity.n);
  capacity.values.assign(std::size_t{1} << capacity.n, 0.0);
  std::vector<bool> seen(capacity.values.size(), false);
  const json& nu = get_array(require_field(object, "nu", source), "nu", source);
  for (const json& record : nu) {
    if (!record.is_object()) fail(source, "every \"nu\" entry must be an object");
    const json& set = get_array(require_field(record, "set", source), "set", source);
    mask_t mask = 0;
    for (const json& member : set) {
      const int i = get_int(member, "set", source);
      if (i < 0 || i >= capacity.n) {
        fail(source, "field \"set\" holds criterion " + std::to_string(i) +
                         ", valid range is 0.." + std::to_string(capacity.n - 1));
      }
      if (mask & bit(i)) fail(source, "field \"set\" repeats criterion " + std::to_string(i));
      mask |= bit(i);
    }
    const double value = get_double(require_field(record, "value", source), "value", source);
    if (mask == 0 && value != 0.0) fail(source, "the empty set must carry value 0");
    if (seen[mask]) fail(source, "field \"nu\" lists one subset twice");
    seen[mask] = true;
    capacity.values[mask] = value;
  }
  for (mask_t a = 1; a <= full; ++a) {
    if (!seen[a]) fail(source, "field \"nu\" is missing a subset (" + std::to_string(a) + " of " +
                                   std::to_string(full) + " by bitmask)");
  }
  return capacity;
}

const char* kind_name(PreferenceKind kind) {
  return kind == PreferenceKind::StrictlyBetter ? "strict" : "indifferent";
}

PreferenceKind preference_kind(const std::string& name, const std::string& source) {
  if (name == "strict") return PreferenceKind::StrictlyBetter;
  if (name == "indifferent") return PreferenceKind::IndifferentTo;
  fail(source, "field \"kind\" must be \"strict\" or \"indifferent\", got \"" + name + "\"");
}

json preferences_json(const std::vector<PreferenceStatement>& preferences) {
  json list = json::array();
  for (const PreferenceStatement& s : preferences) {
    list.push_back(json{{"better", s.better}, {"worse", s.worse}, {"kind", kind_name(s.kind)}});
  }
  return list;
}

std::vector<PreferenceStatement> preferences_from_json(const json& list,
                                                       const std::string& source) {
  std::vector<PreferenceStatement> preferences;
  for (const json& record : list) {
    if (!record.is_object()) fail(source, "every \"preferences\" entry must be an object");
    PreferenceStatement s;
    s.better = get_int(require_field(record, "better", source), "better", source);
    s.worse = get_int(require_field(record, "worse", source), "worse", source);
    s.kind = preference_kind(get_string(require_field(record, "kind", source), "kind", source),
                             source);
    preferences.push_back(s);
  }
  return preferences;
}

json deltas_json(const Deltas& deltas) {
  return json{{"shapley", deltas.shapley},
              {"interaction", deltas.interaction},
              {"learning_set", deltas.learning_set}};
}

Deltas deltas_from_json(const json& object, const std::string& source) {
  if (!object.is_object()) fail(source, "field \"deltas\" must be an object");
  Deltas deltas;
  if (const auto it = object.find("shapley"); it != object.end()) {
    deltas.shapley = get_double(*it, "deltas.shapley", source);
  }
  if (const auto it = object.find("interaction"); it != object.end()) {
    deltas.interaction = get_double(*it, "deltas.interaction", source);
  }
  if (const auto it = object.find("learning_set"); it != object.end()) {
    deltas.learning_set = get_double(*it, "deltas.learning_set", source);
  }
  return deltas;
}

std::pair<int, int> pair_from_json(const json& value, const char* field,
                                   const std::string& source) {
  if (!value.is_array() || value.size() != 2) {
    fail(source, std::string("field \"") + field + "\" must be a pair of criteria");
  }
  return {get_int(value[0], field, source), get_int(value[1], field, source)};
}

json values_json(const std::vector<std::vector<std::string>>& labels,
                 const ValueFunctionSet& values) {
  json list = json::array();
  for (std::size_t i = 0; i < values.levels.size(); ++i) {
    json criterion = json::array();
    for (std::size_t l = 0; l < values.levels[i].size(); ++l) {
      const std::string label =
          i < labels.size() && l < labels[i].size() ? labels[i][l] : "L" + std::to_string(l);
      criterion.push_back(json{{"level", label}, {"value", values.levels[i][l]}});
    }
    list.push_back(std::move(criterion));
  }
  return list;
}

LabeledValues values_from_json(const json& list, const std::string& source) {
  LabeledValues parsed;
  for (const json& criterion : list) {
    if (!criterion.is_array()) fail(source, "field \"values\" must hold one list per criterion");
    std::vector<std::string> labels;
    std::vector<double> worth;
    for (const json& record : criterion) {
      if (!record.is_object()) fail(source, "every level entry must be an object");
      const json& level = require_field(record, "level", source);
      // Level names are usually strings; plain numbers are accepted and keep
      // their canonical spelling as the label.
      if (level.is_string()) {
        labels.push_back(level.get<std::string>());
      } else if (level.is_number()) {
        labels.push_back(level.dump());
      } else {
        fail(source, "field \"level\" must be a string or a number");
      }
      worth.push_back(get_double(require_field(record, "value", source), "value", source));
    }
    parsed.level_labels.push_back(std::move(labels));
    parsed.values.levels.push_back(std::move(worth));
  }
  return parsed;
}

json groups_json(const std::vector<mask_t>& groups) {
  json list = json::array();
  for (const mask_t group : groups) list.push_back(set_members(group));
  return list;
}

std::vector<mask_t> groups_from_json(const json& list, const std::string& source) {
  std::vector<mask_t> groups;
  for (const json& group : list) {
    if (!group.is_array()) fail(source, "field \"groups\" must hold lists of criteria");
    mask_t mask = 0;
    for (const json& member : group) {
      const int i = get_int(member, "groups", source);
      if (i < 0 || i >= kMaxCriteria) fail(source, "field \"groups\" holds an invalid criterion");
      mask |= bit(i);
    }
    groups.push_back(mask);
  }
  return groups;
}

}  // namespace

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::invalid_argument(path + ": cannot open file for writing");
  out << content;
  if (!out) throw std::invalid_argument(path + ": write failed");
}

// ---------------------------------------------------------------------------
// Document writers
// ---------------------------------------------------------------------------

std::string capacity_to_text(const Capacity& capacity) { return capacity_json(capacity).dump(); }

std::string dataset_to_text(const NumericDataset& dataset) {
  json root{{"n", dataset.n}, {"alternatives", dataset.alternatives},
            {"preferences", preferences_json(dataset.preferences)},
            {"deltas", deltas_json(dataset.deltas)}};
  if (!dataset.shapley_comparisons.empty()) {
    json list = json::array();
    for (const ShapleyComparison& s : dataset.shapley_comparisons) {
      list.push_back(json{
          {"i", s.i},
          {"j", s.j},
          {"kind",
           s.kind == ImportanceKind::MoreImportant ? "more-important" : "equally-important"}});
    }
    root["shapley_comparisons"] = std::move(list);
  }
  if (!dataset.interaction_statements.empty()) {
    json list = json::array();
    for (const InteractionStatement& s : dataset.interaction_statements) {
      json record{{"pair", json::array({s.pair.first, s.pair.second})}};
      switch (s.kind) {
        case InteractionKind::Complementary: record["kind"] = "complementary"; break;
        case InteractionKind::Redundant: record["kind"] = "redundant"; break;
        case InteractionKind::StrongerThan: record["kind"] = "stronger-than"; break;
        case InteractionKind::SimilarTo: record["kind"] = "similar-to"; break;
      }
      if (s.other) record["other"] = json::array({s.other->first, s.other->second});
      list.push_back(std::move(record));
    }
    root["interaction_statements"] = std::move(list);
  }
  if (!dataset.veto.empty()) root["veto"] = dataset.veto;
  if (!dataset.favour.empty()) root["favour"] = dataset.favour;
  return root.dump();
}

std::string categorical_to_text(const CategoricalDataset& dataset) {
  json alternatives = json::array();
  for (const std::vector<int>& tuple : dataset.alternatives) {
    json labels = json::array();
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      labels.push_back(dataset.level_labels[i][tuple[i]]);
    }
    alternatives.push_back(std::move(labels));
  }
  return json{{"n", dataset.n},
              {"levels", dataset.level_labels},
              {"alternatives", std::move(alternatives)},
              {"preferences", preferences_json(dataset.preferences)},
              {"deltas", deltas_json(dataset.deltas)}}
      .dump();
}

std::string values_to_text(const LabeledValues& values) {
  return json{{"values", values_json(values.level_labels, values.values)}}.dump();
}

std::string model_to_text(const GroundTruthModel& model) {
  return json{{"capacity", capacity_json(model.capacity)},
              {"values", values_json(model.level_labels, model.values)},
              {"groups", groups_json(model.groups)}}
      .dump();
}

// ---------------------------------------------------------------------------
// Document parsers
// ---------------------------------------------------------------------------

Capacity parse_capacity(const std::string& text, const std::string& source) {
  return capacity_from_json(parse_root(text, source), source);
}

NumericDataset parse_dataset(const std::string& text, const std::string& source) {
  const json root = parse_root(text, source);
  NumericDataset dataset;
  dataset.n = get_int(require_field(root, "n", source), "n", source);
  const json& alternatives =
      get_array(require_field(root, "alternatives", source), "alternatives", source);
  for (const json& row : alternatives) {
    if (!row.is_array()) fail(source, "every \"alternatives\" entry must be a list of scores");
    Profile profile;
    for (const json& score : row) profile.push_back(get_double(score, "alternatives", source));
    dataset.alternatives.push_back(std::move(profile));
  }
  if (const auto it = root.find("preferences"); it != root.end()) {
    dataset.preferences = preferences_from_json(get_array(*it, "preferences", source), source);
  }
  if (const auto it = root.find("shapley_comparisons"); it != root.end()) {
    for (const json& record : get_array(*it, "shapley_comparisons", source)) {
      if (!record.is_object()) fail(source, "every \"shapley_comparisons\" entry must be an object");
      ShapleyComparison s;
      s.i = get_int(require_field(record, "i", source), "i", source);
      s.j = get_int(require_field(record, "j", source), "j", source);
      const std::string kind = get_string(require_field(record, "kind", source), "kind", source);
      if (kind == "more-important") {
        s.kind = ImportanceKind::MoreImportant;
      } else if (kind == "equally-important") {
        s.kind = ImportanceKind::EquallyImportant;
      } else {
        fail(source, "field \"kind\" must be \"more-important\" or \"equally-important\", got \"" +
                         kind + "\"");
      }
      dataset.shapley_comparisons.push_back(s);
    }
  }
  if (const auto it = root.find("interaction_statements"); it != root.end()) {
    for (const json& record : get_array(*it, "interaction_statements", source)) {
      if (!record.is_object()) {
        fail(source, "every \"interaction_statements\" entry must be an object");
      }
      InteractionStatement s;
      s.pair = pair_from_json(require_field(record, "pair", source), "pair", source);
      const std::string kind = get_string(require_field(record, "kind", source), "kind", source);
      if (kind == "complementary") {
        s.kind = InteractionKind::Complementary;
      } else if (kind == "redundant") {
        s.kind = InteractionKind::Redundant;
      } else if (kind == "stronger-than") {
        s.kind = InteractionKind::StrongerThan;
      } else if (kind == "similar-to") {
        s.kind = InteractionKind::SimilarTo;
      } else {
        fail(source, "field \"kind\" must name an interaction statement, got \"" + kind + "\"");
      }
      if (const auto other = record.find("other"); other != record.end()) {
        s.other = pair_from_json(*other, "other", source);
      }
      dataset.interaction_statements.push_back(std::move(s));
    }
  }
  if (const auto it = root.find("veto"); it != root.end()) {
    for (const json& i : get_array(*it, "veto", source)) {
      dataset.veto.push_back(get_int(i, "veto", source));
    }
  }
  if (const auto it = root.find("favour"); it != root.end()) {
    for (const json& i : get_array(*it, "favour", source)) {
      dataset.favour.push_back(get_int(i, "favour", source));
    }
  }
  if (const auto it = root.find("deltas"); it != root.end()) {
    dataset.deltas = deltas_from_json(*it, source);
  }
  return dataset;
}

CategoricalDataset parse_categorical(const std::string& text, const std::string& source) {
  const json root = parse_root(text, source);
  CategoricalDataset dataset;
  dataset.n = get_int(require_field(root, "n", source), "n", source);
  const json& levels = get_array(require_field(root, "levels", source), "levels", source);
  for (const json& criterion : levels) {
    if (!criterion.is_array()) fail(source, "field \"levels\" must hold one list per criterion");
    std::vector<std::string> labels;
    for (const json& label : criterion) labels.push_back(get_string(label, "levels", source));
    dataset.level_labels.push_back(std::move(labels));
  }
  const json& alternatives =
      get_array(require_field(root, "alternatives", source), "alternatives", source);
  for (const json& row : alternatives) {
    if (!row.is_array()) fail(source, "every \"alternatives\" entry must be a list of levels");
    if (row.size() != dataset.level_labels.size()) {
      fail(source, "an alternative names " + std::to_string(row.size()) + " levels, expected " +
                       std::to_string(dataset.level_labels.size()));
    }
    std::vector<int> tuple;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string label = get_string(row[i], "alternatives", source);
      const std::vector<std::string>& order = dataset.level_labels[i];
      const auto at = std::find(order.begin(), order.end(), label);
      if (at == order.end()) {
        fail(source, "alternative level \"" + label + "\" is not in criterion " +
                         std::to_string(i) + "'s level list");
      }
      tuple.push_back(static_cast<int>(at - order.begin()));
    }
    dataset.alternatives.push_back(std::move(tuple));
  }
  if (const auto it = root.find("preferences"); it != root.end()) {
    dataset.preferences = preferences_from_json(get_array(*it, "preferences", source), source);
  }
  if (const auto it = root.find("deltas"); it != root.end()) {
    dataset.deltas = deltas_from_json(*it, source);
  }
  return dataset;
}

LabeledValues parse_values(const std::string& text, const std::string& source) {
  const json root = parse_root(text, source);
  return values_from_json(get_array(require_field(root, "values", source), "values", source),
                          source);
}

GroundTruthModel parse_model(const std::string& text, const std::string& source) {
  const json root = parse_root(text, source);
  GroundTruthModel model;
  const json& capacity = require_field(root, "capacity", source);
  if (!capacity.is_object()) fail(source, "field \"capacity\" must be an object");
  model.capacity = capacity_from_json(capacity, source);
  LabeledValues values = values_from_json(
      get_array(require_field(root, "values", source), "values", source), source);
  model.level_labels = std::move(values.level_labels);
  model.values = std::move(values.values);
  if (const auto it = root.find("groups"); it != root.end()) {
    model.groups = groups_from_json(get_array(*it, "groups", source), source);
  }
  return model;
}

ValueFunctionSet parse_grid(const std::string& text, const std::string& source) {
  const json root = parse_root(text, source);
  const json& levels = get_array(require_field(root, "levels", source), "levels", source);
  ValueFunctionSet grid;
  for (const json& criterion : levels) {
    if (!criterion.is_array()) fail(source, "field \"levels\" must hold one list per criterion");
    std::vector<double> worth;
    for (const json& level : criterion) worth.push_back(get_double(level, "levels", source));
    grid.levels.push_back(std::move(worth));
  }
  return grid;
}

// ---------------------------------------------------------------------------
// Result records
// ---------------------------------------------------------------------------

std::string evaluation_record(double score) { return json{{"score", score}}.dump(); }

std::string index_record(const IndexReport& report) {
  json interactions = json::array();
  for (const IndexReport::PairInteraction& pair : report.pairwise) {
    interactions.push_back(json{{"i", pair.i}, {"j", pair.j}, {"value", pair.value}});
  }
  return json{{"shapley", report.shapley}, {"interactions", std::move(interactions)}}.dump();
}

std::string check_record(const std::vector<CapacityViolation>& violations, bool convex) {
  json defects = json::array();
  for (const CapacityViolation& violation : violations) defects.push_back(violation.describe());
  return json{{"valid", violations.empty()}, {"convex", convex}, {"defects", std::move(defects)}}
      .dump();
}

std::string lattice_record(const LatticePolynomial& dnf, const LatticePolynomial& cnf) {
  json dnf_terms = json::array();
  for (const mask_t term : dnf.terms) dnf_terms.push_back(set_members(term));
  json cnf_terms = json::array();
  for (const mask_t term : cnf.terms) cnf_terms.push_back(set_members(term));
  return json{{"dnf", std::move(dnf_terms)},
              {"dnf_rendered", render_dnf(dnf)},
              {"cnf", std::move(cnf_terms)},
              {"cnf_rendered", render_cnf(cnf)}}
      .dump();
}

namespace {

json fits_json(const std::vector<StatementFit>& fits) {
  json list = json::array();
  for (const StatementFit& fit : fits) {
    list.push_back(json{
        {"description", fit.description}, {"satisfied", fit.satisfied}, {"margin", fit.margin}});
  }
  return list;
}

}  // namespace

std::string identification_record(const IdentificationResult& result) {
  const bool exact = result.status == IdentificationStatus::FeasibleExact;
  return json{{"status", exact ? "exact" : "infeasible"},
              {"capacity", capacity_json(result.capacity)},
              {"total_slack", result.total_slack},
              {"margin", result.margin},
              {"repaired", result.repaired},
              {"fits", fits_json(result.fits)}}
      .dump();
}

std::string joint_record(const JointLearnResult& result,
                         const std::vector<std::vector<std::string>>& level_labels) {
  return json{{"status", result.violations == 0 ? "exact" : "violations"},
              {"violations", result.violations},
              {"total_slack", result.total_slack},
              {"best_restart", result.best_restart},
              {"capacity", capacity_json(result.model.capacity)},
              {"values", values_json(level_labels, result.model.values)}}
      .dump();
}

std::string scan_record(const std::string& axiom, const ScanReport& report) {
  json witnesses = json::array();
  for (const ViolationWitness& witness : report.witnesses) {
    witnesses.push_back(json{{"criteria", witness.criteria},
                             {"points", witness.points},
                             {"detail", witness.detail}});
  }
  return json{{"axiom", axiom},
              {"holds", report.holds()},
              {"grid_points", report.cost.grid_points},
              {"instances_checked", report.instances_checked},
              {"witnesses", std::move(witnesses)}}
      .dump();
}

std::string identifiability_record(const IdentifiabilityReport& report) {
  const char* kind = "additive";
  if (report.spec.kind == SynthKind::FullInteraction) kind = "full";
  if (report.spec.kind == SynthKind::Groups) kind = "groups";
  json intervals = json::array();
  for (const CoefficientInterval& interval : report.intervals) {
    intervals.push_back(json{{"set", set_members(interval.set)},
                             {"lower", interval.range.lower},
                             {"upper", interval.range.upper}});
  }
  const bool exact = report.identification.status == IdentificationStatus::FeasibleExact;
  return json{{"kind", kind},
              {"n", report.spec.n},
              {"levels", report.spec.levels},
              {"seed", report.spec.seed},
              {"statements", report.statements},
              {"status", exact ? "exact" : "infeasible"},
              {"intervals", std::move(intervals)},
              {"max_pair_width", report.max_pair_width},
              {"truth_groups", groups_json(report.truth_groups)},
              {"learned_groups", groups_json(report.learned_groups)},
              {"max_cross_group_interaction", report.max_cross_group_interaction}}
      .dump();
}

}  // namespace choquet
