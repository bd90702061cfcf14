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

#include "choquet/joint.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "choquet/bits.hpp"
#include "choquet/errors.hpp"
#include "choquet/axioms.hpp"
#include "choquet/integral.hpp"
#include "choquet/lp.hpp"

namespace choquet {

namespace {

int thread_budget(int jobs) {
  int budget = static_cast<int>(std::thread::hardware_concurrency());
  if (budget < 1) budget = 1;
  if (const char* env = std::getenv("CHOQUET_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed > 0) budget = static_cast<int>(std::min<long>(parsed, 1024));
  }
  return std::max(1, std::min(budget, jobs));
}

// Ascending coordinate order of a profile, ties by criterion index.
std::vector<int> ascending(const Profile& profile) {
  std::vector<int> order(profile.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return profile[a] < profile[b]; });
  return order;
}

}  // namespace

// ---------------------------------------------------------------------------
// Categorical data
// ---------------------------------------------------------------------------

void validate_categorical(const CategoricalDataset& d) {
  if (d.n < 2 || d.n > kMaxCriteria) {
    throw std::invalid_argument("criterion count must be between 2 and " +
                                std::to_string(kMaxCriteria) + ", got " + std::to_string(d.n));
  }
  if (static_cast<int>(d.level_labels.size()) != d.n) {
    throw std::domain_error("level orders cover " + std::to_string(d.level_labels.size()) +
                            " criteria but the dataset has " + std::to_string(d.n));
  }
  int widest = 0;
  for (int i = 0; i < d.n; ++i) {
    const auto& labels = d.level_labels[i];
    if (labels.empty()) {
      throw std::domain_error("criterion " + std::to_string(i) + " is missing its level order");
    }
    widest = std::max(widest, static_cast<int>(labels.size()));
    std::set<std::string> seen;
    for (const std::string& label : labels) {
      if (!seen.insert(label).second) {
        throw std::invalid_argument("criterion " + std::to_string(i) +
                                    " repeats the level label '" + label + "'");
      }
    }
  }
  if (widest < 2) {
    throw std::domain_error(
        "every criterion has a single level, so the value scale cannot be anchored");
  }
  for (std::size_t a = 0; a < d.alternatives.size(); ++a) {
    if (static_cast<int>(d.alternatives[a].size()) != d.n) {
      throw std::invalid_argument("alternative " + std::to_string(a) + " has " +
                                  std::to_string(d.alternatives[a].size()) +
                                  " levels, expected " + std::to_string(d.n));
    }
    for (int i = 0; i < d.n; ++i) {
      const int level = d.alternatives[a][i];
      if (level < 0 || static_cast<std::size_t>(level) >= d.level_labels[i].size()) {
        throw std::invalid_argument("alternative " + std::to_string(a) + " uses level " +
                                    std::to_string(level) + " on criterion " +
                                    std::to_string(i) + " which has only " +
                                    std::to_string(d.level_labels[i].size()) + " levels");
      }
    }
  }
  for (const auto& s : d.preferences) {
    if (s.better < 0 || static_cast<std::size_t>(s.better) >= d.alternatives.size() ||
        s.worse < 0 || static_cast<std::size_t>(s.worse) >= d.alternatives.size()) {
      throw std::invalid_argument("preference refers to a missing alternative");
    }
  }
  if (!(d.deltas.shapley > 0.0) || !(d.deltas.interaction > 0.0) ||
      !(d.deltas.learning_set > 0.0)) {
    throw std::invalid_argument("statement margins must be positive and finite");
  }
}

// ---------------------------------------------------------------------------
// learn_joint
// ---------------------------------------------------------------------------

namespace {

// Keeps every indifference statement but replaces the strict ones by a
// transitive reduction of their preference graph; chains enforced link by
// link imply the skipped links with even wider margins. Cyclic strict data
// is left untouched (no consistent model exists; the programs should see the
// full evidence).
std::vector<PreferenceStatement> prune_statements(const CategoricalDataset& d) {
  const int m = static_cast<int>(d.alternatives.size());
  std::vector<PreferenceStatement> strict;
  std::vector<PreferenceStatement> indifferent;
  std::set<std::pair<int, int>> edges;
  for (const auto& s : d.preferences) {
    if (s.kind == PreferenceKind::StrictlyBetter) {
      if (edges.insert({s.better, s.worse}).second) strict.push_back(s);
    } else {
      indifferent.push_back(s);
    }
  }

  std::vector<std::vector<int>> succ(m);
  std::vector<int> indegree(m, 0);
  bool self_loop = false;
  for (const auto& e : edges) {
    if (e.first == e.second) self_loop = true;
    succ[e.first].push_back(e.second);
    ++indegree[e.second];
  }

  std::vector<int> topo;
  topo.reserve(m);
  {
    std::vector<int> queue;
    for (int v = 0; v < m; ++v) {
      if (indegree[v] == 0) queue.push_back(v);
    }
    std::vector<int> degree = indegree;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      topo.push_back(v);
      for (int w : succ[v]) {
        if (--degree[w] == 0) queue.push_back(w);
      }
    }
  }
  if (self_loop || static_cast<int>(topo.size()) != m) {
    return d.preferences;  // cyclic: keep everything
  }

  // Strict-descendant bitsets, filled against topological order.
  const int words = (m + 63) / 64;
  std::vector<std::vector<std::uint64_t>> reach(m, std::vector<std::uint64_t>(words, 0));
  auto test = [&](const std::vector<std::uint64_t>& bits, int v) {
    return (bits[v / 64] >> (v % 64)) & 1u;
  };
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const int v = *it;
    for (int w : succ[v]) {
      reach[v][w / 64] |= std::uint64_t{1} << (w % 64);
      for (int k = 0; k < words; ++k) reach[v][k] |= reach[w][k];
    }
  }

  std::vector<PreferenceStatement> pruned;
  for (const auto& s : strict) {
    bool redundant = false;
    for (int w : succ[s.better]) {
      if (w != s.worse && test(reach[w], s.worse)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) pruned.push_back(s);
  }
  pruned.insert(pruned.end(), indifferent.begin(), indifferent.end());
  return pruned;
}

struct RestartOutcome {
  JointModel model;
  long violations = std::numeric_limits<long>::max();
  double total_slack = std::numeric_limits<double>::infinity();
  std::vector<StatementFit> fits;
  std::vector<JointIterationStats> trace;
  long pivots = 0;
};

class JointEngine {
 public:
  JointEngine(const CategoricalDataset& data, const JointLearnOptions& options)
      : data_(data), options_(options), pruned_(prune_statements(data)) {
    capacity_config_.objective = IdentificationObjective::MinTotalSlack;
    capacity_config_.k_additive = options.k_additive;
    capacity_config_.support_groups = options.support_groups;
    for (const PreferenceStatement& st : pruned_) {
      if (st.kind == PreferenceKind::StrictlyBetter) {
        strict_pruned_.insert({st.better, st.worse});
      } else {
        indiff_pruned_.insert(std::minmax(st.better, st.worse));
      }
    }
  }

  RestartOutcome run_restart(int restart) const {
    const int anchor = pick_anchor(restart);
    Rng rng(Rng::derive(options_.seed, static_cast<std::uint64_t>(restart)));
    ValueFunctionSet f = initial_values(restart, anchor, rng);

    // Both steps optimize over the pruned statements plus every statement
    // the full check has caught violated so far — a cutting-plane loop that
    // keeps the working programs small while chasing the real target.
    std::vector<PreferenceStatement> working = pruned_;
    std::set<std::pair<int, int>> added_strict;
    std::set<std::pair<int, int>> added_indiff;

    RestartOutcome best;
    std::vector<PreferenceStatement> boosted;
    std::map<std::size_t, int> boost_count;
    int stale = 0;
    int shakes = 0;
    int since_accept = 0;
    for (int iteration = 1; iteration <= options_.max_iterations; ++iteration) {
      long pivots = best.pivots;
      const std::vector<PreferenceStatement>& active = boosted.empty() ? working : boosted;
      IdentificationResult cap = identify(numeric_view(f, active), capacity_config_);
      pivots += cap.pivots;
      const bool endgame = best.violations <= 32;
      ValueFunctionSet refined = value_step(cap.capacity, f, anchor, active, endgame, pivots);

      std::vector<StatementFit> fits = check_fit(cap.capacity, numeric_view(refined, data_.preferences));
      long violations = 0;
      double slack = 0.0;
      std::vector<std::size_t> violated;
      const auto tally = [&](const std::vector<StatementFit>& all) {
        violations = 0;
        slack = 0.0;
        violated.clear();
        for (std::size_t s = 0; s < all.size(); ++s) {
          if (all[s].satisfied) continue;
          ++violations;
          slack += std::max(0.0, -all[s].margin);
          violated.push_back(s);
        }
      };
      tally(fits);

      // A near fit that will not budge is often a relabeled optimum: two
      // criteria have traded value functions and the capacity almost papers
      // over it. Trying each transposition (with the capacity re-fitted) is
      // cheap here and jumps straight out of that basin.
      if (violations > 0 && violations <= 24) {
        for (int i = 0; i < data_.n; ++i) {
          for (int j = i + 1; j < data_.n; ++j) {
            ValueFunctionSet swapped = transpose_values(refined, i, j, anchor);
            if (swapped.levels == refined.levels) continue;
            IdentificationResult cap2 = identify(numeric_view(swapped, active), capacity_config_);
            pivots += cap2.pivots;
            std::vector<StatementFit> fits2 =
                check_fit(cap2.capacity, numeric_view(swapped, data_.preferences));
            long v2 = 0;
            double s2 = 0.0;
            for (const StatementFit& fit : fits2) {
              if (fit.satisfied) continue;
              ++v2;
              s2 += std::max(0.0, -fit.margin);
            }
            if (v2 < violations || (v2 == violations && s2 < slack - 1e-12)) {
              refined = std::move(swapped);
              cap = std::move(cap2);
              fits = std::move(fits2);
              tally(fits);
            }
          }
        }
      }
      // With only a handful of statements still off, hand the iterate to the
      // score-target refinement; it closes coordinated sub-millimetre gaps
      // the one-side-at-a-time steps cannot.
      if (violations > 0 && violations <= 48) {
        if (std::optional<PolishCandidate> polished =
                polish(cap.capacity, refined, anchor, working, pivots)) {
          if (polished->violations < violations ||
              (polished->violations == violations && polished->total_slack < slack - 1e-12)) {
            cap.capacity = std::move(polished->capacity);
            refined = std::move(polished->values);
            fits = std::move(polished->fits);
            tally(fits);
          }
        }
      }
      // Only the endgame reinstates violated statements: early rounds would
      // flood the programs, and the pruned core already carries descent.
      if (violations <= 48) {
        for (const std::size_t s : violated) {
          if (added_strict.size() + added_indiff.size() >= 256) break;
          const PreferenceStatement& st = data_.preferences[s];
          if (st.kind == PreferenceKind::StrictlyBetter) {
            const std::pair<int, int> key{st.better, st.worse};
            if (!strict_pruned_.count(key) && added_strict.insert(key).second) {
              working.push_back(st);
            }
          } else {
            const std::pair<int, int> key = std::minmax(st.better, st.worse);
            if (!indiff_pruned_.count(key) && added_indiff.insert(key).second) {
              working.push_back(st);
            }
          }
        }
      }
      // Deep endgame: repeat the stragglers so their slacks weigh more, and
      // let the weight keep growing while the same statement stays stuck.
      boosted.clear();
      if (violations <= 12) {
        for (const std::size_t s : violated) {
          int& count = boost_count[s];
          count = std::min(count + 2, 8);
        }
        boosted = working;
        for (const auto& [index, count] : boost_count) {
          for (int c = 0; c < count; ++c) boosted.push_back(data_.preferences[index]);
        }
      }

      const bool improves = violations < best.violations ||
                            (violations == best.violations && slack < best.total_slack - 1e-12);
      // Hair-thin slack gains must not keep resetting the patience window.
      const bool material = violations < best.violations ||
                            (violations == best.violations &&
                             slack < best.total_slack * 0.98 - 1e-9);
      best.pivots = pivots;
      if (improves) {
        best.model = {cap.capacity, refined};
        best.violations = violations;
        best.total_slack = slack;
        best.fits = fits;
        best.trace.push_back({iteration, violations, slack});
        since_accept = 0;
      } else {
        ++since_accept;
      }
      stale = material ? 0 : stale + 1;
      if (best.violations == 0 && best.total_slack <= 1e-12) break;
      // A restart still far off after a fair stretch, or one that has gone
      // a long stretch without any gain, is a lost cause; the budget is
      // better spent on the next one.
      if (iteration >= 10 && best.violations > 48) break;
      if (since_accept >= 12) break;

      // Keep following the alternation even through flat stretches; once it
      // stops moving (a fixed point, or several fruitless rounds), nudge the
      // values to leave the basin. A bounded number of nudges keeps the
      // restart from spinning forever.
      const bool fixed_point = refined.levels == f.levels;
      f = std::move(refined);
      if (fixed_point || stale >= 3) {
        if (++shakes > 6) break;
        shake_values(f, anchor, rng);
        stale = 0;
      }
    }
    return best;
  }

  // Profiles of every alternative under f, paired with chosen statements.
  NumericDataset numeric_view(const ValueFunctionSet& f,
                              const std::vector<PreferenceStatement>& statements) const {
    NumericDataset nd;
    nd.n = data_.n;
    nd.deltas = data_.deltas;
    nd.alternatives.reserve(data_.alternatives.size());
    for (const auto& tuple : data_.alternatives) nd.alternatives.push_back(f.apply(tuple));
    nd.preferences = statements;
    return nd;
  }

 private:
  int pick_anchor(int restart) const {
    for (int off = 0; off < data_.n; ++off) {
      const int i = (restart + off) % data_.n;
      if (data_.level_labels[i].size() >= 2) return i;
    }
    throw internal_consistency_error("no criterion can anchor the value scale");
  }

  // The anchor rotates with the restart index, so each anchor choice is
  // tried with each starting shape: the first cycle starts from the data
  // (each level gets the mean win rate of the alternatives carrying it,
  // monotonized), the second cycle starts equally spaced, later cycles draw
  // random increments.
  ValueFunctionSet initial_values(int restart, int anchor, Rng& rng) const {
    const int cycle = restart / data_.n;
    ValueFunctionSet f;
    f.levels.resize(data_.n);
    std::vector<double> wins;
    if (cycle == 0) {
      wins.assign(data_.alternatives.size(), 0.0);
      for (const PreferenceStatement& st : data_.preferences) {
        if (st.kind == PreferenceKind::StrictlyBetter) wins[st.better] += 1.0;
      }
    }
    for (int i = 0; i < data_.n; ++i) {
      const int count = static_cast<int>(data_.level_labels[i].size());
      std::vector<double>& levels = f.levels[i];
      levels.assign(count, 0.0);
      if (count == 1) continue;
      if (cycle == 0) {
        std::vector<double> total(count, 0.0);
        std::vector<long> hits(count, 0);
        for (std::size_t a = 0; a < data_.alternatives.size(); ++a) {
          total[data_.alternatives[a][i]] += wins[a];
          ++hits[data_.alternatives[a][i]];
        }
        const double base = hits[0] > 0 ? total[0] / hits[0] : 0.0;
        double floor = 0.0;
        for (int l = 1; l < count; ++l) {
          const double mean = hits[l] > 0 ? total[l] / hits[l] : floor + base;
          floor = std::max(floor, mean - base);
          levels[l] = floor;
        }
      } else if (cycle == 1) {
        for (int l = 0; l < count; ++l) levels[l] = static_cast<double>(l) / (count - 1);
        continue;
      } else {
        for (int l = 1; l < count; ++l) levels[l] = levels[l - 1] + 0.2 + 0.8 * rng.uniform();
      }
      double top = 1.0;
      if (cycle >= 2) top = i == anchor ? 1.0 : 0.4 + 0.6 * rng.uniform();
      if (levels[count - 1] <= 0.0) {
        for (int l = 0; l < count; ++l) levels[l] = static_cast<double>(l) / (count - 1);
      }
      for (int l = 1; l < count; ++l) levels[l] *= top / levels[count - 1];
      levels[count - 1] = top;  // exact, free of rounding from the rescale
    }
    return f;
  }

  // Swaps the value functions of two criteria, rescaling so the anchor's top
  // level stays exactly 1. Criteria with different level counts don't swap.
  static ValueFunctionSet transpose_values(const ValueFunctionSet& f, int i, int j, int anchor) {
    if (f.levels[i].size() != f.levels[j].size()) return f;
    ValueFunctionSet g = f;
    std::swap(g.levels[i], g.levels[j]);
    if (anchor == i || anchor == j) {
      std::vector<double>& a = g.levels[anchor];
      const double top = a.back();
      if (top <= 1e-9) return f;
      for (double& v : a) v = std::min(1.0, v / top);
      a.back() = 1.0;
    }
    return g;
  }

  // Basin-escape nudge: jitter the adjustable levels, then restore
  // monotonicity and the anchors.
  static void shake_values(ValueFunctionSet& f, int anchor, Rng& rng) {
    for (std::size_t i = 0; i < f.levels.size(); ++i) {
      std::vector<double>& levels = f.levels[i];
      const int count = static_cast<int>(levels.size());
      if (count < 2) continue;
      const int last = static_cast<int>(i) == anchor ? count - 1 : count;
      double floor = 0.0;
      for (int l = 1; l < last; ++l) {
        double v = levels[l] + 0.12 * (rng.uniform() - 0.5);
        v = std::min(1.0, std::max(v, floor));
        levels[l] = v;
        floor = v;
      }
      if (static_cast<int>(i) == anchor) levels[count - 1] = 1.0;
    }
  }

  // One linear program over the level values: the per-alternative coordinate
  // orderings frozen from `current` make every overall score linear. Level
  // monotonicity and order preservation are hard rows; statements carry
  // slacks whose total is minimized. The current values satisfy every hard
  // row, so the program is always feasible.
  ValueFunctionSet value_step(const Capacity& capacity, const ValueFunctionSet& current,
                              int anchor, const std::vector<PreferenceStatement>& statements,
                              bool center, long& pivots) const {
    const int n = data_.n;
    const double delta = data_.deltas.learning_set;

    // Per-alternative coordinate orderings, re-frozen below every time the
    // solution lands in a different comonotone cone than assumed.
    std::vector<std::vector<int>> orders(data_.alternatives.size());
    const auto freeze_orders = [&](const ValueFunctionSet& values) {
      bool changed = false;
      for (std::size_t a = 0; a < data_.alternatives.size(); ++a) {
        std::vector<int> order = ascending(values.apply(data_.alternatives[a]));
        if (order != orders[a]) {
          orders[a] = std::move(order);
          changed = true;
        }
      }
      return changed;
    };
    freeze_orders(current);

    struct Built {
      LinearProgram lp;
      std::vector<std::vector<int>> column;
    };

    // slack_cap < 0 builds the slack-minimization program. Otherwise the
    // total slack is capped near its optimum and bounded per-statement
    // safety margins are maximized instead, so the refined values sit well
    // inside their feasible region rather than on its boundary.
    const auto build = [&](double slack_cap) {
      Built built;
      LinearProgram& lp = built.lp;
      std::vector<std::vector<int>>& column = built.column;
      column.resize(n);
      for (int i = 0; i < n; ++i) {
        const int count = static_cast<int>(current.levels[i].size());
        column[i].assign(count, -1);
        for (int l = 1; l < count; ++l) {
          const bool pinned = i == anchor && l == count - 1;
          column[i][l] = lp.add_variable(pinned ? 1.0 : 0.0, 1.0);
        }
      }
      const bool centering = slack_cap >= 0.0;
      std::vector<int> slack(statements.size(), -1);
      std::vector<int> margin(statements.size(), -1);
      for (std::size_t s = 0; s < statements.size(); ++s) {
        slack[s] = lp.add_variable(0.0, LinearProgram::kInfinity, centering ? 0.0 : 1.0);
      }
      if (centering) {
        for (std::size_t s = 0; s < statements.size(); ++s) {
          const bool strict = statements[s].kind == PreferenceKind::StrictlyBetter;
          margin[s] = lp.add_variable(0.0, strict ? delta : 0.45 * delta, -1.0);
        }
      }

      // Values nondecreasing along each criterion's level order.
      for (int i = 0; i < n; ++i) {
        for (std::size_t l = 2; l < current.levels[i].size(); ++l) {
          std::vector<double> coeffs(lp.num_vars, 0.0);
          coeffs[column[i][l]] = 1.0;
          coeffs[column[i][l - 1]] = -1.0;
          lp.add_constraint(coeffs, Relation::GreaterEqual, 0.0);
        }
      }

      // Each alternative's coordinate ordering stays what the linearization
      // assumed. Level 0 is the fixed value 0, so it contributes a constant.
      for (std::size_t a = 0; a < data_.alternatives.size(); ++a) {
        const std::vector<int>& tuple = data_.alternatives[a];
        for (int k = 1; k < n; ++k) {
          const int lo = orders[a][k - 1];
          const int hi = orders[a][k];
          std::vector<double> coeffs(lp.num_vars, 0.0);
          if (column[hi][tuple[hi]] >= 0) coeffs[column[hi][tuple[hi]]] += 1.0;
          if (column[lo][tuple[lo]] >= 0) coeffs[column[lo][tuple[lo]]] -= 1.0;
          lp.add_constraint(coeffs, Relation::GreaterEqual, 0.0);
        }
      }

      // Frozen-order linearization of one alternative's overall score.
      const auto accumulate_score = [&](std::vector<double>& coeffs, int alternative,
                                        double sign) {
        const std::vector<int>& tuple = data_.alternatives[alternative];
        const std::vector<int>& order = orders[alternative];
        mask_t upper = full_mask(n);
        for (int k = 0; k < n; ++k) {
          const mask_t next = upper ^ bit(order[k]);
          const double weight = capacity.values[upper] - capacity.values[next];
          const int col = column[order[k]][tuple[order[k]]];
          if (col >= 0) coeffs[col] += sign * weight;
          upper = next;
        }
      };

      for (std::size_t s = 0; s < statements.size(); ++s) {
        const PreferenceStatement& statement = statements[s];
        std::vector<double> coeffs(lp.num_vars, 0.0);
        accumulate_score(coeffs, statement.better, 1.0);
        accumulate_score(coeffs, statement.worse, -1.0);
        if (statement.kind == PreferenceKind::StrictlyBetter) {
          coeffs[slack[s]] = 1.0;
          if (margin[s] >= 0) coeffs[margin[s]] = -1.0;
          lp.add_constraint(coeffs, Relation::GreaterEqual, delta);
        } else {
          std::vector<double> upper_row = coeffs;
          upper_row[slack[s]] = -1.0;
          if (margin[s] >= 0) upper_row[margin[s]] = 1.0;
          lp.add_constraint(upper_row, Relation::LessEqual, delta);
          coeffs[slack[s]] = 1.0;
          if (margin[s] >= 0) coeffs[margin[s]] = -1.0;
          lp.add_constraint(coeffs, Relation::GreaterEqual, -delta);
        }
      }
      if (centering && !statements.empty()) {
        std::vector<double> total(lp.num_vars, 0.0);
        for (std::size_t s = 0; s < statements.size(); ++s) total[slack[s]] = 1.0;
        lp.add_constraint(total, Relation::LessEqual, slack_cap);
      }
      return built;
    };

    const auto extract = [&](const LpSolution& sol, const std::vector<std::vector<int>>& column) {
      ValueFunctionSet refined;
      refined.levels.resize(n);
      for (int i = 0; i < n; ++i) {
        const int count = static_cast<int>(current.levels[i].size());
        refined.levels[i].assign(count, 0.0);
        double floor = 0.0;
        for (int l = 1; l < count; ++l) {
          double v = sol.x[column[i][l]];
          v = std::min(1.0, std::max(v, floor));  // absorb solver round-off
          refined.levels[i][l] = v;
          floor = v;
        }
        if (i == anchor) refined.levels[i][count - 1] = 1.0;
      }
      return refined;
    };

    // Inner fixed point: solve, re-freeze the orderings from the solution,
    // and solve again until the cone assumption holds at its own optimum.
    ValueFunctionSet refined;
    double slack_total = 0.0;
    for (int round = 0; round < 4; ++round) {
      Built phase1 = build(-1.0);
      const LpSolution sol = solve_lp(phase1.lp);
      pivots += sol.pivots;
      if (sol.status != LpStatus::Optimal) {
        throw internal_consistency_error(
            "value-step program must be solvable: the current values satisfy every hard row");
      }
      refined = extract(sol, phase1.column);
      slack_total = sol.objective;
      if (!freeze_orders(refined)) break;
    }
    if (center) {
      Built phase2 = build(slack_total + 1e-9);
      const LpSolution centered = solve_lp(phase2.lp);
      pivots += centered.pivots;
      if (centered.status == LpStatus::Optimal) refined = extract(centered, phase2.column);
    }
    return refined;
  }

  struct PolishCandidate {
    Capacity capacity;
    ValueFunctionSet values;
    std::vector<StatementFit> fits;
    long violations = std::numeric_limits<long>::max();
    double total_slack = std::numeric_limits<double>::infinity();
  };

  // Last-mile refinement. The alternation above is myopic: each step holds
  // one side fixed, and near a solution it stalls on hair-thin tensions that
  // only a simultaneous adjustment of the capacity and the values can
  // release. The overall score is bilinear in the two, so inside a small box
  // around the iterate a joint linearization is nearly exact and one program
  // can search the coordinated directions the single-sided steps never see.
  // Each move is re-scored exactly; the box shrinks whenever the linear
  // prediction fails to survive that check.
  std::optional<PolishCandidate> polish(const Capacity& capacity, const ValueFunctionSet& current,
                                        int anchor, const std::vector<PreferenceStatement>& statements,
                                        long& pivots) const {
    const int n = data_.n;
    const double delta = data_.deltas.learning_set;
    const std::size_t count = data_.alternatives.size();

    // Structural rows (normalization, monotonicity) in whichever variable
    // layout the capacity model uses, straight from the identification
    // builder so every support mode is honoured.
    IdentificationConfig shell_config = capacity_config_;
    shell_config.objective = IdentificationObjective::Feasibility;
    NumericDataset shell_data;
    shell_data.n = n;
    shell_data.deltas = data_.deltas;
    const BuiltConstraints shell = build_constraints(shell_data, shell_config);

    Capacity fitted = capacity;
    ValueFunctionSet values = current;
    std::vector<std::vector<int>> orders(count);
    const auto freeze_orders = [&]() {
      for (std::size_t a = 0; a < count; ++a) {
        orders[a] = ascending(values.apply(data_.alternatives[a]));
      }
    };
    freeze_orders();

    const auto model_coordinates = [&](const Capacity& c) {
      std::vector<double> coords(shell.map.num_vars, 0.0);
      if (shell.map.mode == VariableMap::Mode::CapacityValues) {
        for (mask_t a = 1; a < full_mask(n); ++a) {
          const int col = shell.map.column_of[a];
          if (col >= 0) coords[col] = c.values[a];
        }
      } else {
        const MobiusRepresentation m = mobius(c);
        for (const mask_t b : shell.map.support) {
          const int col = shell.map.column_of[b];
          if (col >= 0) coords[col] = m.coeffs[b];
        }
      }
      return coords;
    };

    const auto evaluate = [&](const Capacity& c, const ValueFunctionSet& v) {
      PolishCandidate out;
      out.capacity = c;
      out.values = v;
      out.fits = check_fit(c, numeric_view(v, data_.preferences));
      out.violations = 0;
      out.total_slack = 0.0;
      for (const StatementFit& fit : out.fits) {
        if (fit.satisfied) continue;
        ++out.violations;
        out.total_slack += std::max(0.0, -fit.margin);
      }
      return out;
    };

    // One candidate move inside the given box. Phase 1 minimizes the total
    // statement slack of the linearized scores; phase 2 pins that optimum
    // and re-centers bounded per-statement margins so the move lands inside
    // its feasible region instead of on the boundary.
    const auto joint_step =
        [&](double radius) -> std::optional<std::pair<Capacity, ValueFunctionSet>> {
      std::vector<double> center = model_coordinates(fitted);
      std::vector<double> base_scores(count);
      std::vector<Affine> score_in_capacity(count);
      for (std::size_t a = 0; a < count; ++a) {
        const Profile profile = values.apply(data_.alternatives[a]);
        base_scores[a] = choquet(fitted, profile);
        score_in_capacity[a] = shell.map.overall_score(profile);
      }

      struct Built {
        LinearProgram lp;
        std::vector<std::vector<int>> column;
      };
      const auto build = [&](double slack_cap) {
        Built built;
        LinearProgram& lp = built.lp;
        lp = shell.lp;
        for (int v = 0; v < shell.map.num_vars; ++v) {
          const double c = std::min(std::max(center[v], lp.lower[v]), lp.upper[v]);
          lp.lower[v] = std::max(lp.lower[v], c - radius);
          lp.upper[v] = std::min(lp.upper[v], c + radius);
        }
        std::vector<std::vector<int>>& column = built.column;
        column.resize(n);
        for (int i = 0; i < n; ++i) {
          const int levels = static_cast<int>(values.levels[i].size());
          column[i].assign(levels, -1);
          for (int l = 1; l < levels; ++l) {
            const bool pinned = i == anchor && l == levels - 1;
            const double v = values.levels[i][l];
            column[i][l] = lp.add_variable(pinned ? 1.0 : std::max(0.0, v - radius),
                                           pinned ? 1.0 : std::min(1.0, v + radius));
          }
        }
        const bool centering = slack_cap >= 0.0;
        std::vector<int> slack_var(statements.size(), -1);
        std::vector<int> margin_var(statements.size(), -1);
        for (std::size_t s = 0; s < statements.size(); ++s) {
          slack_var[s] = lp.add_variable(0.0, LinearProgram::kInfinity, centering ? 0.0 : 1.0);
        }
        if (centering) {
          for (std::size_t s = 0; s < statements.size(); ++s) {
            const bool strict = statements[s].kind == PreferenceKind::StrictlyBetter;
            margin_var[s] = lp.add_variable(0.0, strict ? delta : 0.45 * delta, -1.0);
          }
        }
        // The structural rows predate the columns added above.
        for (LinearConstraint& row : lp.constraints) row.coeffs.resize(lp.num_vars, 0.0);

        for (int i = 0; i < n; ++i) {
          for (std::size_t l = 2; l < values.levels[i].size(); ++l) {
            std::vector<double> coeffs(lp.num_vars, 0.0);
            coeffs[column[i][l]] = 1.0;
            coeffs[column[i][l - 1]] = -1.0;
            lp.add_constraint(coeffs, Relation::GreaterEqual, 0.0);
          }
        }
        for (std::size_t a = 0; a < count; ++a) {
          const std::vector<int>& tuple = data_.alternatives[a];
          for (int k = 1; k < n; ++k) {
            const int lo = orders[a][k - 1];
            const int hi = orders[a][k];
            std::vector<double> coeffs(lp.num_vars, 0.0);
            if (column[hi][tuple[hi]] >= 0) coeffs[column[hi][tuple[hi]]] += 1.0;
            if (column[lo][tuple[lo]] >= 0) coeffs[column[lo][tuple[lo]]] -= 1.0;
            lp.add_constraint(coeffs, Relation::GreaterEqual, 0.0);
          }
        }

        // score(a) ~ A_a(capacity vars) + B_a(value vars) - score_0(a): the
        // exact first-order model of a bilinear map, sharp inside the box.
        const auto accumulate = [&](std::vector<double>& coeffs, double& constant, int alternative,
                                    double sign) {
          const Affine& in_capacity = score_in_capacity[alternative];
          for (int v = 0; v < shell.map.num_vars; ++v) coeffs[v] += sign * in_capacity.coeffs[v];
          constant += sign * (in_capacity.constant - base_scores[alternative]);
          const std::vector<int>& tuple = data_.alternatives[alternative];
          const std::vector<int>& order = orders[alternative];
          mask_t upper = full_mask(n);
          for (int k = 0; k < n; ++k) {
            const mask_t next = upper ^ bit(order[k]);
            const double weight = fitted.values[upper] - fitted.values[next];
            const int col = column[order[k]][tuple[order[k]]];
            if (col >= 0) coeffs[col] += sign * weight;
            upper = next;
          }
        };
        for (std::size_t s = 0; s < statements.size(); ++s) {
          const PreferenceStatement& st = statements[s];
          std::vector<double> coeffs(lp.num_vars, 0.0);
          double constant = 0.0;
          accumulate(coeffs, constant, st.better, 1.0);
          accumulate(coeffs, constant, st.worse, -1.0);
          if (st.kind == PreferenceKind::StrictlyBetter) {
            coeffs[slack_var[s]] = 1.0;
            if (margin_var[s] >= 0) coeffs[margin_var[s]] = -1.0;
            lp.add_constraint(coeffs, Relation::GreaterEqual, delta - constant);
          } else {
            std::vector<double> upper_row = coeffs;
            upper_row[slack_var[s]] = -1.0;
            if (margin_var[s] >= 0) upper_row[margin_var[s]] = 1.0;
            lp.add_constraint(upper_row, Relation::LessEqual, delta - constant);
            coeffs[slack_var[s]] = 1.0;
            if (margin_var[s] >= 0) coeffs[margin_var[s]] = -1.0;
            lp.add_constraint(coeffs, Relation::GreaterEqual, -delta - constant);
          }
        }
        if (centering && !statements.empty()) {
          std::vector<double> total(lp.num_vars, 0.0);
          for (std::size_t s = 0; s < statements.size(); ++s) total[slack_var[s]] = 1.0;
          lp.add_constraint(total, Relation::LessEqual, slack_cap);
        }
        return built;
      };

      Built phase1 = build(-1.0);
      const LpSolution sol = solve_lp(phase1.lp);
      pivots += sol.pivots;
      if (sol.status != LpStatus::Optimal) return std::nullopt;
      const LpSolution* chosen = &sol;
      Built phase2 = build(sol.objective + 1e-9);
      const LpSolution centered = solve_lp(phase2.lp);
      pivots += centered.pivots;
      const std::vector<std::vector<int>>* column = &phase1.column;
      if (centered.status == LpStatus::Optimal) {
        chosen = &centered;
        column = &phase2.column;
      }

      Capacity moved = shell.map.extract(chosen->x);
      // Solver round-off can leave whisker-thin monotonicity dents; sweep
      // them up before the capacity reaches anything that validates.
      for (mask_t a = 1; a < full_mask(n); ++a) {
        double floor = 0.0;
        for (int i = 0; i < n; ++i) {
          if (a & bit(i)) floor = std::max(floor, moved.values[a ^ bit(i)]);
        }
        moved.values[a] = std::min(1.0, std::max(moved.values[a], floor));
      }
      moved.values[full_mask(n)] = 1.0;

      ValueFunctionSet shifted = values;
      for (int i = 0; i < n; ++i) {
        const int levels = static_cast<int>(values.levels[i].size());
        double floor = 0.0;
        for (int l = 1; l < levels; ++l) {
          double v = chosen->x[(*column)[i][l]];
          v = std::min(1.0, std::max(v, floor));
          shifted.levels[i][l] = v;
          floor = v;
        }
        if (i == anchor) shifted.levels[i][levels - 1] = 1.0;
      }
      return std::make_pair(std::move(moved), std::move(shifted));
    };

    PolishCandidate state = evaluate(fitted, values);
    PolishCandidate best = state;
    // Wider tensions deserve a wider opening box; the acceptance check below
    // still guards every move, so an over-wide start merely shrinks.
    double radius = std::min(0.04, std::max(0.01, 0.25 * state.total_slack));
    for (int step = 0; step < 8; ++step) {
      const auto move = joint_step(radius);
      if (!move) break;
      PolishCandidate trial = evaluate(move->first, move->second);
      const bool accepted = trial.violations < state.violations ||
                            (trial.violations == state.violations &&
                             trial.total_slack < state.total_slack - 1e-12);
      if (accepted) {
        fitted = trial.capacity;
        values = trial.values;
        freeze_orders();
        state = std::move(trial);
        best = state;
        if (state.violations == 0) break;
      } else {
        radius *= 0.5;
        if (radius < 1e-4) break;
      }
    }
    return best;
  }

  const CategoricalDataset& data_;
  const JointLearnOptions& options_;
  std::vector<PreferenceStatement> pruned_;
  std::set<std::pair<int, int>> strict_pruned_;
  std::set<std::pair<int, int>> indiff_pruned_;
  IdentificationConfig capacity_config_;
};

}  // namespace

JointLearnResult learn_joint(const CategoricalDataset& dataset,
                             const JointLearnOptions& options) {
  validate_categorical(dataset);
  if (options.restarts < 1) {
    throw std::invalid_argument("at least one restart is required, got " +
                                std::to_string(options.restarts));
  }
  if (options.max_iterations < 1) {
    throw std::invalid_argument("at least one iteration is required, got " +
                                std::to_string(options.max_iterations));
  }

  const JointEngine engine(dataset, options);
  std::vector<RestartOutcome> outcomes(options.restarts);

  // The first restart index that fits the data exactly ends the search; the
  // result is then identical whether later restarts ran (in parallel) or
  // never started (serially), because everything past the winner is dropped.
  const auto is_exact = [](const RestartOutcome& o) {
    return o.violations == 0 && o.total_slack <= 1e-9;
  };
  std::atomic<int> winner{options.restarts};

  const int workers = thread_budget(options.restarts);
  if (workers <= 1) {
    for (int r = 0; r < options.restarts; ++r) {
      outcomes[r] = engine.run_restart(r);
      if (is_exact(outcomes[r])) {
        winner.store(r);
        break;
      }
    }
  } else {
    std::atomic<int> next{0};
    auto work = [&]() {
      for (int r = next.fetch_add(1); r < options.restarts; r = next.fetch_add(1)) {
        if (r > winner.load()) continue;
        outcomes[r] = engine.run_restart(r);
        if (is_exact(outcomes[r])) {
          int current = winner.load();
          while (r < current && !winner.compare_exchange_weak(current, r)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    for (int r = winner.load() + 1; r < options.restarts; ++r) outcomes[r] = RestartOutcome{};
  }

  int best = 0;
  for (int r = 1; r < options.restarts; ++r) {
    const RestartOutcome& candidate = outcomes[r];
    const RestartOutcome& incumbent = outcomes[best];
    if (candidate.violations < incumbent.violations ||
        (candidate.violations == incumbent.violations &&
         candidate.total_slack < incumbent.total_slack)) {
      best = r;
    }
  }

  JointLearnResult result;
  result.model = outcomes[best].model;
  result.violations = outcomes[best].violations;
  result.total_slack = outcomes[best].total_slack;
  result.best_restart = best;
  result.fits = outcomes[best].fits;
  result.trace.reserve(outcomes.size());
  for (RestartOutcome& outcome : outcomes) {
    result.pivots += outcome.pivots;
    result.trace.push_back(std::move(outcome.trace));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Synthetic models
// ---------------------------------------------------------------------------

Capacity random_capacity(int n, Rng& rng) {
  if (n < 2 || n > kMaxCriteria) {
    throw std::invalid_argument("criterion count must be between 2 and " +
                                std::to_string(kMaxCriteria) + ", got " + std::to_string(n));
  }
  Capacity capacity;
  capacity.n = n;
  const mask_t full = full_mask(n);
  capacity.values.assign(std::size_t{1} << n, 0.0);
  for (mask_t a = 1; a <= full; ++a) {
    double base = 0.0;
    for (int i : set_members(a)) base = std::max(base, capacity.values[a ^ bit(i)]);
    capacity.values[a] = base + 0.05 + 0.95 * rng.uniform();
  }
  const double top = capacity.values[full];
  for (mask_t a = 1; a <= full; ++a) capacity.values[a] /= top;
  capacity.values[full] = 1.0;
  return capacity;
}

namespace {

void check_partition(int n, const std::vector<mask_t>& groups) {
  const mask_t full = full_mask(n);
  if (groups.empty()) {
    throw std::domain_error("the partition has no blocks");
  }
  mask_t seen = 0;
  for (mask_t g : groups) {
    if (g == 0 || (g & ~full) != 0) {
      throw std::domain_error("block " + set_to_string(g) +
                              " is not a non-empty subset of the criteria");
    }
    if ((g & seen) != 0) {
      throw std::domain_error("block " + set_to_string(g) + " overlaps an earlier block");
    }
    seen |= g;
  }
  if (seen != full) {
    throw std::domain_error("the partition does not cover every criterion");
  }
}

std::vector<std::vector<std::string>> default_labels(int n, int levels) {
  std::vector<std::string> names(levels);
  for (int l = 0; l < levels; ++l) names[l] = "L" + std::to_string(l);
  return std::vector<std::vector<std::string>>(n, names);
}

}  // namespace

GroundTruthModel synth_model(const SynthSpec& spec) {
  if (spec.n < 2 || spec.n > kMaxCriteria) {
    throw std::invalid_argument("criterion count must be between 2 and " +
                                std::to_string(kMaxCriteria) + ", got " + std::to_string(spec.n));
  }
  if (spec.levels < 2) {
    throw std::invalid_argument("at least two levels per criterion are required, got " +
                                std::to_string(spec.levels));
  }

  GroundTruthModel model;
  Rng rng(Rng::derive(spec.seed, 0x6d6f64656cULL));
  const mask_t full = full_mask(spec.n);

  switch (spec.kind) {
    case SynthKind::Additive: {
      std::vector<double> weights(spec.n);
      double total = 0.0;
      for (double& w : weights) {
        w = 0.2 + 0.8 * rng.uniform();
        total += w;
      }
      for (double& w : weights) w /= total;
      model.capacity.n = spec.n;
      model.capacity.values.assign(std::size_t{1} << spec.n, 0.0);
      for (mask_t a = 1; a <= full; ++a) {
        double sum = 0.0;
        for (int i : set_members(a)) sum += weights[i];
        model.capacity.values[a] = sum;
      }
      model.capacity.values[full] = 1.0;
      for (int i = 0; i < spec.n; ++i) model.groups.push_back(bit(i));
      break;
    }
    case SynthKind::FullInteraction: {
      model.capacity = random_capacity(spec.n, rng);
      model.groups.push_back(full);
      break;
    }
    case SynthKind::Groups: {
      check_partition(spec.n, spec.groups);
      std::vector<double> mix(spec.groups.size());
      double total = 0.0;
      for (double& w : mix) {
        w = 0.2 + 0.8 * rng.uniform();
        total += w;
      }
      for (double& w : mix) w /= total;

      model.capacity.n = spec.n;
      model.capacity.values.assign(std::size_t{1} << spec.n, 0.0);
      for (std::size_t g = 0; g < spec.groups.size(); ++g) {
        const std::vector<int> members = set_members(spec.groups[g]);
        const int block_n = static_cast<int>(members.size());
        // Blocks of one criterion reduce to an indicator; larger blocks get
        // their own random capacity over the block's sub-lattice.
        Capacity block;
        if (block_n >= 2) {
          block = random_capacity(block_n, rng);
        } else {
          block.n = 1;
          block.values = {0.0, 1.0};
        }
        for (mask_t a = 1; a <= full; ++a) {
          mask_t inside = 0;
          for (int k = 0; k < block_n; ++k) {
            if (contains(a, members[k])) inside |= bit(k);
          }
          model.capacity.values[a] += mix[g] * block.values[inside];
        }
      }
      model.capacity.values[full] = 1.0;
      model.groups = spec.groups;
      break;
    }
  }

  model.values.levels.assign(spec.n, {});
  double top = 0.0;
  for (int i = 0; i < spec.n; ++i) {
    std::vector<double>& f = model.values.levels[i];
    f.assign(spec.levels, 0.0);
    for (int l = 1; l < spec.levels; ++l) f[l] = f[l - 1] + 0.2 + 0.8 * rng.uniform();
    top = std::max(top, f.back());
  }
  for (int i = 0; i < spec.n; ++i) {
    for (double& v : model.values.levels[i]) v /= top;
  }
  model.level_labels = default_labels(spec.n, spec.levels);
  return model;
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> sampled_tuples(const GroundTruthModel& model,
                                             const SampleSpec& spec) {
  const int n = model.values.criteria();
  std::vector<std::vector<int>> tuples;
  if (spec.mode == SampleSpec::Mode::AllGridPairs) {
    long points = 1;
    for (int i = 0; i < n; ++i) points *= model.values.level_count(i);
    tuples.reserve(points);
    std::vector<int> tuple(n, 0);
    while (true) {
      tuples.push_back(tuple);
      int i = 0;
      for (; i < n; ++i) {
        if (++tuple[i] < model.values.level_count(i)) break;
        tuple[i] = 0;
      }
      if (i == n) break;
    }
    return tuples;
  }
  if (spec.count < 2) {
    throw std::invalid_argument("random sampling needs at least two alternatives, got " +
                                std::to_string(spec.count));
  }
  Rng rng(Rng::derive(spec.seed, 0x73616d706c65ULL));
  tuples.assign(spec.count, std::vector<int>(n, 0));
  for (auto& tuple : tuples) {
    for (int i = 0; i < n; ++i) {
      tuple[i] = static_cast<int>(rng.index(model.values.level_count(i)));
    }
  }
  return tuples;
}

std::vector<PreferenceStatement> classify_pairs(const GroundTruthModel& model,
                                                const std::vector<std::vector<int>>& tuples,
                                                double delta) {
  std::vector<double> scores(tuples.size());
  for (std::size_t a = 0; a < tuples.size(); ++a) {
    scores[a] = choquet(model.capacity, model.values.apply(tuples[a]));
  }
  std::vector<PreferenceStatement> statements;
  statements.reserve(tuples.size() * (tuples.size() - 1) / 2);
  for (std::size_t a = 0; a < tuples.size(); ++a) {
    for (std::size_t b = a + 1; b < tuples.size(); ++b) {
      const double diff = scores[a] - scores[b];
      PreferenceStatement s;
      if (std::abs(diff) > delta) {
        s.kind = PreferenceKind::StrictlyBetter;
        s.better = diff > 0 ? static_cast<int>(a) : static_cast<int>(b);
        s.worse = diff > 0 ? static_cast<int>(b) : static_cast<int>(a);
      } else {
        s.kind = PreferenceKind::IndifferentTo;
        s.better = static_cast<int>(a);
        s.worse = static_cast<int>(b);
      }
      statements.push_back(s);
    }
  }
  return statements;
}

}  // namespace

NumericDataset sample_preferences(const GroundTruthModel& model, const SampleSpec& spec) {
  require_valid(model.capacity);
  const std::vector<std::vector<int>> tuples = sampled_tuples(model, spec);
  NumericDataset nd;
  nd.n = model.capacity.n;
  nd.alternatives.reserve(tuples.size());
  for (const auto& tuple : tuples) nd.alternatives.push_back(model.values.apply(tuple));
  nd.preferences = classify_pairs(model, tuples, nd.deltas.learning_set);
  return nd;
}

CategoricalDataset sample_categorical(const GroundTruthModel& model, const SampleSpec& spec) {
  require_valid(model.capacity);
  CategoricalDataset cd;
  cd.n = model.capacity.n;
  cd.level_labels = model.level_labels.empty()
                        ? default_labels(cd.n, model.values.level_count(0))
                        : model.level_labels;
  cd.alternatives = sampled_tuples(model, spec);
  cd.preferences = classify_pairs(model, cd.alternatives, cd.deltas.learning_set);
  return cd;
}

// ---------------------------------------------------------------------------
// Identifiability experiment
// ---------------------------------------------------------------------------

IdentifiabilityReport identifiability_experiment(const SynthSpec& spec,
                                                 const SampleSpec& sample) {
  IdentifiabilityReport report;
  report.spec = spec;

  const GroundTruthModel model = synth_model(spec);
  const NumericDataset dataset = sample_preferences(model, sample);
  report.statements = static_cast<long>(dataset.preferences.size());
  report.truth_groups = model.groups;

  IdentificationConfig config;
  config.objective = IdentificationObjective::MinTotalSlack;
  if (spec.kind == SynthKind::Groups) config.support_groups = model.groups;
  report.identification = identify(dataset, config);
  report.learned_groups = interaction_groups(report.identification.mobius);

  // Probe the hard-constraint polytope: every statement kept exact, no
  // slacks. The ground truth satisfies it, so it is never empty.
  IdentificationConfig probe_config = config;
  probe_config.objective = IdentificationObjective::Feasibility;
  const BuiltConstraints bc = build_constraints(dataset, probe_config);

  std::vector<std::vector<double>> vertices;
  const mask_t full = full_mask(spec.n);
  for (mask_t a = 1; a < full; ++a) {
    const Affine value = bc.map.capacity_value(a);
    std::vector<double> coeffs(bc.lp.num_vars, 0.0);
    std::copy(value.coeffs.begin(), value.coeffs.end(), coeffs.begin());
    std::vector<double> at_min;
    std::vector<double> at_max;
    const auto range = probe_objective(bc.lp, coeffs, {}, &at_min, &at_max);
    if (!range.has_value()) {
      throw internal_consistency_error(
          "the probe polytope contains the generating capacity yet reported infeasible");
    }
    CoefficientInterval interval;
    interval.set = a;
    interval.range = {range->lower + value.constant, range->upper + value.constant};
    report.intervals.push_back(interval);
    if (set_size(a) == 2) {
      report.max_pair_width =
          std::max(report.max_pair_width, interval.range.upper - interval.range.lower);
    }
    if (!at_min.empty()) vertices.push_back(std::move(at_min));
    if (!at_max.empty()) vertices.push_back(std::move(at_max));
  }

  // Interaction across distinct truth blocks, at every vertex the probes hit.
  std::vector<int> block_of(spec.n, 0);
  for (std::size_t g = 0; g < model.groups.size(); ++g) {
    for (int i : set_members(model.groups[g])) block_of[i] = static_cast<int>(g);
  }
  for (int i = 0; i < spec.n; ++i) {
    for (int j = i + 1; j < spec.n; ++j) {
      if (block_of[i] == block_of[j]) continue;
      const Affine pair = bc.map.pair_interaction(i, j);
      for (const std::vector<double>& x : vertices) {
        double value = pair.constant;
        for (int v = 0; v < bc.map.num_vars; ++v) value += pair.coeffs[v] * x[v];
        report.max_cross_group_interaction =
            std::max(report.max_cross_group_interaction, std::abs(value));
      }
    }
  }
  return report;
}

}  // namespace choquet
