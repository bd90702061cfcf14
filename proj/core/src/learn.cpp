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

#include "choquet/learn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "choquet/bits.hpp"
#include "choquet/errors.hpp"

namespace choquet {
namespace {

constexpr double kExactTotalSlack = 1e-7;  // relaxation total treated as zero
constexpr double kExactMargin = -1e-7;     // achieved margin treated as non-negative

std::string pair_text(int i, int j) { return set_to_string(bit(i) | bit(j)); }

std::string describe_preference(const PreferenceStatement& s) {
  std::ostringstream out;
  out << "preference: alternative " << s.better
      << (s.kind == PreferenceKind::StrictlyBetter ? " > " : " ~ ") << "alternative " << s.worse;
  return out.str();
}

std::string describe_importance(const ShapleyComparison& s) {
  std::ostringstream out;
  out << "importance: criterion " << s.i
      << (s.kind == ImportanceKind::MoreImportant ? " > " : " ~ ") << "criterion " << s.j;
  return out.str();
}

std::string describe_interaction(const InteractionStatement& s) {
  std::ostringstream out;
  out << "interaction: " << pair_text(s.pair.first, s.pair.second);
  switch (s.kind) {
    case InteractionKind::Complementary: out << " complementary"; break;
    case InteractionKind::Redundant: out << " redundant"; break;
    case InteractionKind::StrongerThan:
      out << " > " << pair_text(s.other->first, s.other->second);
      break;
    case InteractionKind::SimilarTo:
      out << " ~ " << pair_text(s.other->first, s.other->second);
      break;
  }
  return out.str();
}

std::string describe_veto(int i) { return "veto: criterion " + std::to_string(i); }
std::string describe_favour(int i) { return "favour: criterion " + std::to_string(i); }

std::vector<std::string> all_descriptions(const NumericDataset& d) {
  std::vector<std::string> out;
  for (const auto& s : d.preferences) out.push_back(describe_preference(s));
  for (const auto& s : d.shapley_comparisons) out.push_back(describe_importance(s));
  for (const auto& s : d.interaction_statements) out.push_back(describe_interaction(s));
  for (int i : d.veto) out.push_back(describe_veto(i));
  for (int i : d.favour) out.push_back(describe_favour(i));
  return out;
}

void check_criterion(int n, int i, const char* what) {
  if (i < 0 || i >= n) {
    throw std::invalid_argument(std::string(what) + " refers to criterion " + std::to_string(i) +
                                " but there are " + std::to_string(n) + " criteria");
  }
}

void check_alternative(std::size_t count, int a, const char* what) {
  if (a < 0 || static_cast<std::size_t>(a) >= count) {
    throw std::invalid_argument(std::string(what) + " refers to alternative " +
                                std::to_string(a) + " but there are " + std::to_string(count) +
                                " alternatives");
  }
}

}  // namespace

void validate_dataset(const NumericDataset& d) {
  if (d.n < 2 || d.n > kMaxCriteria) {
    throw std::invalid_argument("criterion count must be between 2 and " +
                                std::to_string(kMaxCriteria) + ", got " + std::to_string(d.n));
  }
  for (std::size_t a = 0; a < d.alternatives.size(); ++a) {
    if (static_cast<int>(d.alternatives[a].size()) != d.n) {
      throw std::invalid_argument("alternative " + std::to_string(a) + " has " +
                                  std::to_string(d.alternatives[a].size()) + " scores, expected " +
                                  std::to_string(d.n));
    }
    for (double v : d.alternatives[a]) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("alternative " + std::to_string(a) +
                                    " has a non-finite score");
      }
    }
  }
  for (const auto& s : d.preferences) {
    check_alternative(d.alternatives.size(), s.better, "preference");
    check_alternative(d.alternatives.size(), s.worse, "preference");
  }
  for (const auto& s : d.shapley_comparisons) {
    check_criterion(d.n, s.i, "importance comparison");
    check_criterion(d.n, s.j, "importance comparison");
    if (s.i == s.j) {
      throw std::invalid_argument("importance comparison pits criterion " + std::to_string(s.i) +
                                  " against itself");
    }
  }
  for (const auto& s : d.interaction_statements) {
    check_criterion(d.n, s.pair.first, "interaction statement");
    check_criterion(d.n, s.pair.second, "interaction statement");
    if (s.pair.first == s.pair.second) {
      throw std::invalid_argument("interaction statement names the degenerate pair {" +
                                  std::to_string(s.pair.first) + "," +
                                  std::to_string(s.pair.second) + "}");
    }
    const bool comparison =
        s.kind == InteractionKind::StrongerThan || s.kind == InteractionKind::SimilarTo;
    if (comparison) {
      if (!s.other.has_value()) {
        throw std::invalid_argument("interaction comparison for " +
                                    pair_text(s.pair.first, s.pair.second) +
                                    " is missing the pair to compare against");
      }
      check_criterion(d.n, s.other->first, "interaction statement");
      check_criterion(d.n, s.other->second, "interaction statement");
      if (s.other->first == s.other->second) {
        throw std::invalid_argument("interaction statement names the degenerate pair {" +
                                    std::to_string(s.other->first) + "," +
                                    std::to_string(s.other->second) + "}");
      }
    }
  }
  for (int i : d.veto) check_criterion(d.n, i, "veto statement");
  for (int i : d.favour) check_criterion(d.n, i, "favour statement");
  for (int i : d.veto) {
    for (int j : d.favour) {
      if (i == j) {
        throw std::invalid_argument("criterion " + std::to_string(i) +
                                    " is listed as both veto and favour");
      }
    }
  }
  if (!(d.deltas.shapley > 0.0) || !(d.deltas.interaction > 0.0) ||
      !(d.deltas.learning_set > 0.0)) {
    throw std::invalid_argument("statement margins must be positive and finite");
  }
}

// ---------------------------------------------------------------------------
// Variable map
// ---------------------------------------------------------------------------

VariableMap make_variable_map(int n, const IdentificationConfig& config) {
  if (n < 2 || n > kMaxCriteria) {
    throw std::invalid_argument("criterion count must be between 2 and " +
                                std::to_string(kMaxCriteria) + ", got " + std::to_string(n));
  }
  if (config.k_additive < 0 || config.k_additive > n) {
    throw std::invalid_argument("interaction support size cap must lie in [0, " +
                                std::to_string(n) + "], got " +
                                std::to_string(config.k_additive));
  }
  const mask_t full = full_mask(n);
  if (!config.support_groups.empty()) {
    mask_t seen = 0;
    for (mask_t g : config.support_groups) {
      if (g == 0 || (g & ~full) != 0) {
        throw std::invalid_argument("criterion group " + set_to_string(g) +
                                    " is not a non-empty subset of the criteria");
      }
      if ((g & seen) != 0) {
        throw std::invalid_argument("criterion group " + set_to_string(g) +
                                    " overlaps an earlier group");
      }
      seen |= g;
    }
    if (seen != full) {
      throw std::invalid_argument("criterion groups do not cover every criterion");
    }
  }

  VariableMap map;
  map.n = n;
  map.column_of.assign(std::size_t{1} << n, -1);
  const int k_eff = config.k_additive == 0 ? n : config.k_additive;
  const bool coefficient_mode = !config.support_groups.empty() || k_eff < n;

  if (!coefficient_mode) {
    map.mode = VariableMap::Mode::CapacityValues;
    for (mask_t a = 1; a < full; ++a) map.column_of[a] = map.num_vars++;
    return map;
  }

  map.mode = VariableMap::Mode::MobiusCoefficients;
  for (mask_t a = 1; a <= full; ++a) {
    if (set_size(a) > k_eff) continue;
    if (!config.support_groups.empty()) {
      bool inside = false;
      for (mask_t g : config.support_groups) inside = inside || (a & ~g) == 0;
      if (!inside) continue;
    }
    map.support.push_back(a);
    map.column_of[a] = map.num_vars++;
  }
  return map;
}

Affine VariableMap::capacity_value(mask_t a) const {
  Affine e;
  e.coeffs.assign(num_vars, 0.0);
  if (mode == Mode::CapacityValues) {
    if (a == 0) return e;
    if (a == full_mask(n)) {
      e.constant = 1.0;
      return e;
    }
    e.coeffs[column_of[a]] = 1.0;
    return e;
  }
  for (mask_t b : support) {
    if ((b & ~a) == 0) e.coeffs[column_of[b]] += 1.0;
  }
  return e;
}

Affine VariableMap::shapley_value(int i) const {
  Affine e;
  e.coeffs.assign(num_vars, 0.0);
  if (mode == Mode::MobiusCoefficients) {
    for (mask_t b : support) {
      if (contains(b, i)) e.coeffs[column_of[b]] += 1.0 / set_size(b);
    }
    return e;
  }
  const BinomialTable binom(n);
  const mask_t full = full_mask(n);
  const mask_t rest = full ^ bit(i);
  for_each_subset(rest, [&](mask_t t) {
    const double w = 1.0 / (n * binom(n - 1, set_size(t)));
    const mask_t with = t | bit(i);
    if (with == full) {
      e.constant += w;
    } else {
      e.coeffs[column_of[with]] += w;
    }
    if (t != 0) e.coeffs[column_of[t]] -= w;
  });
  return e;
}

Affine VariableMap::pair_interaction(int i, int j) const {
  Affine e;
  e.coeffs.assign(num_vars, 0.0);
  const mask_t ij = bit(i) | bit(j);
  if (mode == Mode::MobiusCoefficients) {
    for (mask_t b : support) {
      if ((b & ij) == ij) e.coeffs[column_of[b]] += 1.0 / (set_size(b) - 1);
    }
    return e;
  }
  const BinomialTable binom(n);
  const mask_t full = full_mask(n);
  const mask_t rest = full ^ ij;
  for_each_subset(rest, [&](mask_t t) {
    const double w = 1.0 / ((n - 1) * binom(n - 2, set_size(t)));
    auto add = [&](mask_t a, double sign) {
      if (a == 0) return;
      if (a == full) {
        e.constant += sign * w;
      } else {
        e.coeffs[column_of[a]] += sign * w;
      }
    };
    add(t | ij, 1.0);
    add(t | bit(i), -1.0);
    add(t | bit(j), -1.0);
    add(t, 1.0);
  });
  return e;
}

Affine VariableMap::overall_score(const Profile& profile) const {
  Affine e;
  e.coeffs.assign(num_vars, 0.0);
  if (mode == Mode::MobiusCoefficients) {
    for (mask_t b : support) {
      double lowest = profile[std::countr_zero(b)];
      for (mask_t rest = b & (b - 1); rest != 0; rest &= rest - 1) {
        lowest = std::min(lowest, profile[std::countr_zero(rest)]);
      }
      e.coeffs[column_of[b]] += lowest;
    }
    return e;
  }
  const std::vector<double> weights = choquet_coefficients(n, profile);
  const mask_t full = full_mask(n);
  for (mask_t a = 1; a <= full; ++a) {
    if (weights[a] == 0.0) continue;
    if (a == full) {
      e.constant += weights[a];
    } else {
      e.coeffs[column_of[a]] += weights[a];
    }
  }
  return e;
}

Capacity VariableMap::extract(const std::vector<double>& x) const {
  if (mode == Mode::CapacityValues) {
    Capacity capacity;
    capacity.n = n;
    capacity.values.assign(std::size_t{1} << n, 0.0);
    const mask_t full = full_mask(n);
    for (mask_t a = 1; a < full; ++a) capacity.values[a] = x[column_of[a]];
    capacity.values[full] = 1.0;
    return capacity;
  }
  MobiusRepresentation m;
  m.n = n;
  m.coeffs.assign(std::size_t{1} << n, 0.0);
  for (mask_t b : support) m.coeffs[b] = x[column_of[b]];
  return zeta(m);
}

// ---------------------------------------------------------------------------
// Constraint assembly
// ---------------------------------------------------------------------------

namespace {

// Monotone cleanup for capacities that exit the solver a hair outside the
// valid set: clamp into [0,1], push every value up to its largest subset, and
// pin the endpoints.
Capacity rectify(const Capacity& raw) {
  Capacity fixed;
  fixed.n = raw.n;
  fixed.values.assign(raw.values.size(), 0.0);
  const mask_t full = full_mask(raw.n);
  for (mask_t a = 1; a <= full; ++a) {
    double v = std::clamp(raw.values[a], 0.0, 1.0);
    for (mask_t rest = a; rest != 0; rest &= rest - 1) {
      v = std::max(v, fixed.values[a ^ (rest & -rest)]);
    }
    fixed.values[a] = v;
  }
  fixed.values[full] = 1.0;
  return fixed;
}

class ProgramBuilder {
 public:
  ProgramBuilder(const NumericDataset& dataset, const IdentificationConfig& config)
      : dataset_(dataset), config_(config) {
    bc_.map = make_variable_map(dataset.n, config);
    bc_.statement_descriptions = all_descriptions(dataset);

    // Model columns first, then one relaxation column per statement when the
    // objective asks for them, then the shared margin column.
    const bool values_mode = bc_.map.mode == VariableMap::Mode::CapacityValues;
    for (int v = 0; v < bc_.map.num_vars; ++v) {
      if (values_mode) {
        bc_.lp.add_variable(0.0, 1.0);
      } else {
        bc_.lp.add_variable(-LinearProgram::kInfinity, LinearProgram::kInfinity);
      }
    }
    const std::size_t statements = bc_.statement_descriptions.size();
    bc_.statement_slack.assign(statements, -1);
    if (config.objective == IdentificationObjective::MinTotalSlack) {
      for (std::size_t s = 0; s < statements; ++s) {
        bc_.statement_slack[s] = bc_.lp.add_variable(0.0, LinearProgram::kInfinity, 1.0);
      }
    }
    if (config.objective == IdentificationObjective::MaxMinSlack && has_soft_statement()) {
      bc_.margin_var = bc_.lp.add_variable(-LinearProgram::kInfinity, LinearProgram::kInfinity,
                                           1.0);
      bc_.lp.maximize = true;
    }

    add_structural_rows();
    add_statement_rows();
  }

  BuiltConstraints take() { return std::move(bc_); }

 private:
  bool has_soft_statement() const {
    return !dataset_.preferences.empty() || !dataset_.shapley_comparisons.empty() ||
           !dataset_.interaction_statements.empty();
  }

  void add_row(const Affine& e, Relation relation, double rhs, std::string purpose,
               int statement, bool margin_applies) {
    std::vector<double> coeffs(bc_.lp.num_vars, 0.0);
    std::copy(e.coeffs.begin(), e.coeffs.end(), coeffs.begin());
    if (statement >= 0) {
      const int slack = bc_.statement_slack[statement];
      const double dir = relation == Relation::GreaterEqual ? 1.0 : -1.0;
      if (slack >= 0) coeffs[slack] = dir;                          // relaxes the row
      if (margin_applies && bc_.margin_var >= 0) coeffs[bc_.margin_var] = -dir;  // tightens it
    }
    bc_.lp.add_constraint(std::move(coeffs), relation, rhs - e.constant);
    bc_.rows.push_back({std::move(purpose), statement});
  }

  void add_structural_rows() {
    const VariableMap& map = bc_.map;
    const int n = dataset_.n;
    const mask_t full = full_mask(n);

    if (map.mode == VariableMap::Mode::CapacityValues) {
      // Bounds handle |A| = 1 and |A| = n-1 against the fixed endpoints, so
      // rows are only needed between two genuine columns.
      for (mask_t a = 1; a <= full; ++a) {
        const int size = set_size(a);
        if (size < 2 || size > n - 1) continue;
        for (int i : set_members(a)) {
          Affine e = map.capacity_value(a);
          const Affine sub = map.capacity_value(a ^ bit(i));
          for (int v = 0; v < map.num_vars; ++v) e.coeffs[v] -= sub.coeffs[v];
          e.constant -= sub.constant;
          add_row(e, Relation::GreaterEqual, 0.0,
                  "monotone: " + set_to_string(a) + " vs " + set_to_string(a ^ bit(i)), -1,
                  false);
        }
      }
      return;
    }

    // Coefficient form: total mass one, and every single-criterion capacity
    // increment non-negative. The increment at (A, i) only sees admissible
    // sets inside A that contain i, so it is enough to range A over subsets
    // of the union of those sets.
    Affine total;
    total.coeffs.assign(map.num_vars, 0.0);
    for (mask_t b : map.support) total.coeffs[map.column_of[b]] = 1.0;
    add_row(total, Relation::Equal, 1.0, "normalization", -1, false);

    for (int i = 0; i < n; ++i) {
      mask_t scope = 0;
      for (mask_t b : map.support) {
        if (contains(b, i)) scope |= b;
      }
      if (scope == 0) continue;  // criterion absent from the support
      for_each_subset(scope ^ bit(i), [&](mask_t extra) {
        const mask_t a = extra | bit(i);
        Affine e;
        e.coeffs.assign(map.num_vars, 0.0);
        for (mask_t b : map.support) {
          if (contains(b, i) && (b & ~a) == 0) e.coeffs[map.column_of[b]] += 1.0;
        }
        add_row(e, Relation::GreaterEqual, 0.0,
                "monotone: increment of criterion " + std::to_string(i) + " within " +
                    set_to_string(a),
                -1, false);
      });
    }
  }

  void add_statement_rows() {
    const VariableMap& map = bc_.map;
    const Deltas& deltas = dataset_.deltas;
    int stmt = 0;

    for (const auto& s : dataset_.preferences) {
      Affine e = map.overall_score(dataset_.alternatives[s.better]);
      const Affine w = map.overall_score(dataset_.alternatives[s.worse]);
      for (int v = 0; v < map.num_vars; ++v) e.coeffs[v] -= w.coeffs[v];
      e.constant -= w.constant;
      const std::string& name = bc_.statement_descriptions[stmt];
      if (s.kind == PreferenceKind::StrictlyBetter) {
        add_row(e, Relation::GreaterEqual, deltas.learning_set, name, stmt, true);
      } else {
        add_row(e, Relation::LessEqual, deltas.learning_set, name + " (upper)", stmt, true);
        add_row(e, Relation::GreaterEqual, -deltas.learning_set, name + " (lower)", stmt, true);
      }
      ++stmt;
    }

    for (const auto& s : dataset_.shapley_comparisons) {
      Affine e = map.shapley_value(s.i);
      const Affine other = map.shapley_value(s.j);
      for (int v = 0; v < map.num_vars; ++v) e.coeffs[v] -= other.coeffs[v];
      e.constant -= other.constant;
      const std::string& name = bc_.statement_descriptions[stmt];
      if (s.kind == ImportanceKind::MoreImportant) {
        add_row(e, Relation::GreaterEqual, deltas.shapley, name, stmt, true);
      } else {
        add_row(e, Relation::LessEqual, deltas.shapley, name + " (upper)", stmt, true);
        add_row(e, Relation::GreaterEqual, -deltas.shapley, name + " (lower)", stmt, true);
      }
      ++stmt;
    }

    for (const auto& s : dataset_.interaction_statements) {
      Affine e = map.pair_interaction(s.pair.first, s.pair.second);
      const std::string& name = bc_.statement_descriptions[stmt];
      switch (s.kind) {
        case InteractionKind::Complementary:
          add_row(e, Relation::GreaterEqual, 0.0, name + " (lower)", stmt, true);
          add_row(e, Relation::LessEqual, 1.0, name + " (upper)", stmt, true);
          break;
        case InteractionKind::Redundant:
          add_row(e, Relation::LessEqual, 0.0, name + " (upper)", stmt, true);
          add_row(e, Relation::GreaterEqual, -1.0, name + " (lower)", stmt, true);
          break;
        case InteractionKind::StrongerThan:
        case InteractionKind::SimilarTo: {
          const Affine other = map.pair_interaction(s.other->first, s.other->second);
          for (int v = 0; v < map.num_vars; ++v) e.coeffs[v] -= other.coeffs[v];
          e.constant -= other.constant;
          if (s.kind == InteractionKind::StrongerThan) {
            add_row(e, Relation::GreaterEqual, deltas.interaction, name, stmt, true);
          } else {
            add_row(e, Relation::LessEqual, deltas.interaction, name + " (upper)", stmt, true);
            add_row(e, Relation::GreaterEqual, -deltas.interaction, name + " (lower)", stmt,
                    true);
          }
          break;
        }
      }
      ++stmt;
    }

    // Veto/favour pin capacity values to an endpoint of [0, 1]; giving them a
    // positive shared margin would be contradictory, so the margin skips them.
    const mask_t full = full_mask(dataset_.n);
    for (int i : dataset_.veto) {
      const std::string& name = bc_.statement_descriptions[stmt];
      const mask_t rest = full ^ bit(i);
      for (mask_t a = 1; a <= full; ++a) {
        if ((a & ~rest) != 0) continue;  // only coalitions missing criterion i
        add_row(map.capacity_value(a), Relation::LessEqual, 0.0,
                name + " at " + set_to_string(a), stmt, false);
      }
      ++stmt;
    }
    for (int i : dataset_.favour) {
      const std::string& name = bc_.statement_descriptions[stmt];
      for (mask_t a = 1; a < full; ++a) {
        if (!contains(a, i)) continue;
        add_row(map.capacity_value(a), Relation::GreaterEqual, 1.0,
                name + " at " + set_to_string(a), stmt, false);
      }
      ++stmt;
    }
  }

  const NumericDataset& dataset_;
  const IdentificationConfig& config_;
  BuiltConstraints bc_;
};

}  // namespace

BuiltConstraints build_constraints(const NumericDataset& dataset,
                                   const IdentificationConfig& config) {
  validate_dataset(dataset);
  // A veto empties every coalition missing its criterion while a favour fills
  // every coalition containing its own, so any veto/favour pair pins the
  // singleton of the favoured criterion to 0 and 1 simultaneously.
  if (!dataset.veto.empty() && !dataset.favour.empty()) {
    std::ostringstream out;
    out << "veto on criterion " << dataset.veto.front() << " contradicts favour on criterion "
        << dataset.favour.front() << ": coalition " << set_to_string(bit(dataset.favour.front()))
        << " would need both value 0 and value 1";
    throw std::domain_error(out.str());
  }
  return ProgramBuilder(dataset, config).take();
}

// ---------------------------------------------------------------------------
// Identification and fit checking
// ---------------------------------------------------------------------------

std::vector<StatementFit> check_fit(const Capacity& capacity, const NumericDataset& dataset,
                                    double tolerance) {
  validate_dataset(dataset);
  if (capacity.n != dataset.n) {
    throw std::invalid_argument("capacity is over " + std::to_string(capacity.n) +
                                " criteria but the dataset uses " + std::to_string(dataset.n));
  }
  require_valid(capacity);

  const IndexReport report = indices(capacity);
  auto pair_value = [&](int i, int j) {
    for (const IndexReport::PairInteraction& p : report.pairwise) {
      if ((p.i == i && p.j == j) || (p.i == j && p.j == i)) return p.value;
    }
    throw std::logic_error("pair interaction lookup failed");
  };

  std::vector<double> scores(dataset.alternatives.size());
  for (std::size_t a = 0; a < scores.size(); ++a) {
    scores[a] = choquet(capacity, dataset.alternatives[a]);
  }

  std::vector<StatementFit> fits;
  const Deltas& deltas = dataset.deltas;
  auto push = [&](std::string description, double margin) {
    fits.push_back({std::move(description), margin >= -tolerance, margin});
  };

  for (const auto& s : dataset.preferences) {
    const double diff = scores[s.better] - scores[s.worse];
    const double margin = s.kind == PreferenceKind::StrictlyBetter
                              ? diff - deltas.learning_set
                              : deltas.learning_set - std::abs(diff);
    push(describe_preference(s), margin);
  }
  for (const auto& s : dataset.shapley_comparisons) {
    const double diff = report.shapley[s.i] - report.shapley[s.j];
    const double margin = s.kind == ImportanceKind::MoreImportant
                              ? diff - deltas.shapley
                              : deltas.shapley - std::abs(diff);
    push(describe_importance(s), margin);
  }
  for (const auto& s : dataset.interaction_statements) {
    const double value = pair_value(s.pair.first, s.pair.second);
    double margin = 0.0;
    switch (s.kind) {
      case InteractionKind::Complementary: margin = std::min(value, 1.0 - value); break;
      case InteractionKind::Redundant: margin = std::min(-value, value + 1.0); break;
      case InteractionKind::StrongerThan:
        margin = value - pair_value(s.other->first, s.other->second) - deltas.interaction;
        break;
      case InteractionKind::SimilarTo:
        margin = deltas.interaction -
                 std::abs(value - pair_value(s.other->first, s.other->second));
        break;
    }
    push(describe_interaction(s), margin);
  }
  const mask_t full = full_mask(dataset.n);
  for (int i : dataset.veto) {
    double worst = 0.0;
    for (mask_t a = 1; a <= full; ++a) {
      if (!contains(a, i)) worst = std::max(worst, capacity.values[a]);
    }
    push(describe_veto(i), -worst);
  }
  for (int i : dataset.favour) {
    double lowest = 1.0;
    for (mask_t a = 1; a <= full; ++a) {
      if (contains(a, i)) lowest = std::min(lowest, capacity.values[a]);
    }
    push(describe_favour(i), lowest - 1.0);
  }
  return fits;
}

IdentificationResult identify(const NumericDataset& dataset,
                              const IdentificationConfig& config) {
  validate_dataset(dataset);

  IdentificationConfig attempt = config;
  BuiltConstraints bc = build_constraints(dataset, attempt);
  LpSolution sol = solve_lp(bc.lp);

  // A plain feasibility ask that comes back empty is retried with per-
  // statement relaxations so the caller still receives a best compromise.
  if (config.objective == IdentificationObjective::Feasibility &&
      sol.status == LpStatus::Infeasible) {
    attempt.objective = IdentificationObjective::MinTotalSlack;
    bc = build_constraints(dataset, attempt);
    const long first_pivots = sol.pivots;
    sol = solve_lp(bc.lp);
    sol.pivots += first_pivots;
  }

  IdentificationResult result;
  result.pivots = sol.pivots;
  if (sol.status == LpStatus::Infeasible) {
    // Slack variables absorb every statement, and the structural rows always
    // admit a capacity, so the relaxed program cannot be empty.
    throw internal_consistency_error(
        "relaxed identification program is infeasible despite per-statement slacks");
  }
  if (sol.status == LpStatus::Unbounded) {
    throw internal_consistency_error(
        "identification program is bounded by construction, yet the solver reported an "
        "unbounded ray");
  }

  const Capacity raw = bc.map.extract(sol.x);
  if (is_valid(raw)) {
    result.capacity = raw;
  } else {
    result.capacity = rectify(raw);
    result.repaired = true;
  }
  result.mobius = mobius(result.capacity);
  result.index_report = indices(result.capacity);
  result.fits = check_fit(result.capacity, dataset);

  double min_margin = 0.0;
  double violation_total = 0.0;
  for (std::size_t k = 0; k < result.fits.size(); ++k) {
    const double m = result.fits[k].margin;
    min_margin = k == 0 ? m : std::min(min_margin, m);
    violation_total += std::max(0.0, -m);
  }

  switch (attempt.objective) {
    case IdentificationObjective::Feasibility:
      result.total_slack = 0.0;
      result.margin = min_margin;
      result.status = IdentificationStatus::FeasibleExact;
      break;
    case IdentificationObjective::MinTotalSlack:
      result.total_slack = sol.objective;
      result.margin = min_margin;
      result.status = result.total_slack <= kExactTotalSlack
                          ? IdentificationStatus::FeasibleExact
                          : IdentificationStatus::InfeasibleMinSlack;
      break;
    case IdentificationObjective::MaxMinSlack:
      result.total_slack = violation_total;
      result.margin = bc.margin_var >= 0 ? sol.x[bc.margin_var] : min_margin;
      result.status = result.margin >= kExactMargin
                          ? IdentificationStatus::FeasibleExact
                          : IdentificationStatus::InfeasibleMinSlack;
      break;
  }
  return result;
}

}  // namespace choquet
