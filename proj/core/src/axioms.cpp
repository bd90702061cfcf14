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

#include "choquet/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "choquet/bits.hpp"
#include "choquet/errors.hpp"
#include "choquet/integral.hpp"

namespace choquet {

namespace {

constexpr long kIndexCeiling = 1L << 42;  // grids beyond this cannot be addressed

std::vector<long> strides_of(const std::vector<int>& shape) {
  std::vector<long> strides(shape.size());
  long acc = 1;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    strides[i] = acc;
    acc *= shape[i];
  }
  return strides;
}

std::string tuple_text(const std::vector<int>& tuple) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out << ',';
    out << tuple[i];
  }
  out << ')';
  return out.str();
}

// Advances a mixed-radix odometer; returns false after the last tuple.
bool advance(std::vector<int>& tuple, const std::vector<int>& shape) {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (++tuple[i] < shape[i]) return true;
    tuple[i] = 0;
  }
  return false;
}

long saturating_scale(long base, double factor) {
  const double estimate = static_cast<double>(base) * factor;
  if (estimate >= static_cast<double>(std::numeric_limits<long>::max())) {
    return std::numeric_limits<long>::max();
  }
  return static_cast<long>(estimate);
}

void check_grid_budget(long points, long budget) {
  if (points > budget) {
    throw resource_error("grid has " + std::to_string(points) +
                         " points, above the configured cap of " + std::to_string(budget));
  }
}

void check_pair(const FiniteRelation& relation, int i, int j) {
  const int n = relation.criteria();
  if (i < 0 || i >= n || j < 0 || j >= n) {
    throw std::domain_error("criterion pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is out of range for " + std::to_string(n) + " criteria");
  }
  if (i == j) {
    throw std::domain_error("criterion pair must name two distinct criteria, got (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
  }
}

// Iterates the grid restricted to the criteria outside {i, j} and hands each
// rest-tuple's base index (contribution of those coordinates) to the body.
template <typename Body>
void for_each_rest(const FiniteRelation& relation, int i, int j, const Body& body) {
  const int n = relation.criteria();
  const std::vector<long> strides = strides_of(relation.shape);
  std::vector<int> rest_criteria;
  for (int k = 0; k < n; ++k) {
    if (k != i && k != j) rest_criteria.push_back(k);
  }
  std::vector<int> rest_shape;
  for (int k : rest_criteria) rest_shape.push_back(relation.shape[k]);
  std::vector<int> rest(rest_criteria.size(), 0);
  while (true) {
    long base = 0;
    for (std::size_t k = 0; k < rest_criteria.size(); ++k) {
      base += static_cast<long>(rest[k]) * strides[rest_criteria[k]];
    }
    std::vector<int> z(relation.criteria(), 0);
    for (std::size_t k = 0; k < rest_criteria.size(); ++k) z[rest_criteria[k]] = rest[k];
    body(base, z);
    if (rest.empty() || !advance(rest, rest_shape)) break;
  }
}

// Builds the full tuple with coordinates i and j overridden on top of z.
std::vector<int> place_pair(std::vector<int> z, int i, int u, int j, int v) {
  z[i] = u;
  z[j] = v;
  return z;
}

struct DisjointSets {
  std::vector<int> parent;

  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }

  std::vector<mask_t> components(int n) {
    std::vector<mask_t> by_root(n, 0);
    for (int i = 0; i < n; ++i) by_root[find(i)] |= bit(i);
    std::vector<mask_t> out;
    for (mask_t m : by_root) {
      if (m != 0) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// FiniteRelation
// ---------------------------------------------------------------------------

long FiniteRelation::grid_points() const {
  long acc = 1;
  for (int s : shape) {
    if (s < 1) {
      throw std::domain_error("every criterion needs at least one level");
    }
    if (acc > kIndexCeiling / s) {
      throw std::domain_error("level grid is too large to index");
    }
    acc *= s;
  }
  return acc;
}

long FiniteRelation::index_of(const std::vector<int>& tuple) const {
  if (tuple.size() != shape.size()) {
    throw std::invalid_argument("level tuple has " + std::to_string(tuple.size()) +
                                " entries for " + std::to_string(shape.size()) + " criteria");
  }
  long index = 0;
  long stride = 1;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (tuple[i] < 0 || tuple[i] >= shape[i]) {
      throw std::invalid_argument("level " + std::to_string(tuple[i]) +
                                  " is out of range for criterion " + std::to_string(i));
    }
    index += tuple[i] * stride;
    stride *= shape[i];
  }
  return index;
}

std::vector<int> FiniteRelation::tuple_of(long index) const {
  if (index < 0 || index >= grid_points()) {
    throw std::invalid_argument("point index " + std::to_string(index) + " is out of range");
  }
  std::vector<int> tuple(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) {
    tuple[i] = static_cast<int>(index % shape[i]);
    index /= shape[i];
  }
  return tuple;
}

void validate_relation(const FiniteRelation& relation) {
  const int n = relation.criteria();
  if (n < 2 || n > kMaxCriteria) {
    throw std::domain_error("criterion count must be between 2 and " +
                            std::to_string(kMaxCriteria) + ", got " + std::to_string(n));
  }
  const long points = relation.grid_points();  // also validates the shape
  if (static_cast<long>(relation.rank.size()) != points) {
    throw std::domain_error("rank table has " + std::to_string(relation.rank.size()) +
                            " entries for a grid of " + std::to_string(points) + " points");
  }
  int top = -1;
  for (int r : relation.rank) {
    if (r < 0 || r >= points) {
      throw std::domain_error("rank " + std::to_string(r) + " is outside the dense range");
    }
    top = std::max(top, r);
  }
  std::vector<char> seen(static_cast<std::size_t>(top) + 1, 0);
  for (int r : relation.rank) seen[r] = 1;
  for (int r = 0; r <= top; ++r) {
    if (!seen[r]) {
      throw std::domain_error("ranks are not dense: class " + std::to_string(r) + " is empty");
    }
  }
}

FiniteRelation induce_relation(const Capacity& capacity, const ValueFunctionSet& values,
                               long max_grid_points) {
  require_valid(capacity);
  const int n = capacity.n;
  if (values.criteria() != n) {
    throw std::invalid_argument("value functions cover " + std::to_string(values.criteria()) +
                                " criteria but the capacity has " + std::to_string(n));
  }
  FiniteRelation relation;
  relation.shape.resize(n);
  for (int i = 0; i < n; ++i) {
    const std::vector<double>& f = values.levels[i];
    if (f.empty()) {
      throw std::invalid_argument("criterion " + std::to_string(i) + " has no levels");
    }
    for (std::size_t l = 0; l < f.size(); ++l) {
      if (!std::isfinite(f[l]) || (l > 0 && f[l] < f[l - 1])) {
        throw std::invalid_argument("criterion " + std::to_string(i) +
                                    " needs finite nondecreasing level values");
      }
    }
    relation.shape[i] = static_cast<int>(f.size());
  }
  const long points = relation.grid_points();
  check_grid_budget(points, max_grid_points);

  std::vector<double> score(points);
  std::vector<int> tuple(n, 0);
  Profile profile(n);
  long p = 0;
  do {
    for (int i = 0; i < n; ++i) profile[i] = values.levels[i][tuple[i]];
    score[p++] = choquet(capacity, profile);
  } while (advance(tuple, relation.shape));

  std::vector<long> order(points);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](long a, long b) { return score[a] < score[b]; });

  relation.rank.assign(points, 0);
  int rank = 0;
  for (long k = 0; k < points; ++k) {
    if (k > 0 && score[order[k]] - score[order[k - 1]] > kTieTolerance) ++rank;
    relation.rank[order[k]] = rank;
  }
  return relation;
}

// ---------------------------------------------------------------------------
// Ordinal aggregation tests
// ---------------------------------------------------------------------------

bool ordinal_condition_holds(const FiniteRelation& relation, OrdinalAxiom axiom,
                             const std::vector<int>& x, const std::vector<int>& y, int i,
                             int j) {
  const long ix = relation.index_of(x);
  const long iy = relation.index_of(y);
  const std::vector<long> strides = strides_of(relation.shape);
  const int n = relation.criteria();
  if (i < 0 || i >= n) {
    throw std::invalid_argument("criterion " + std::to_string(i) + " is out of range");
  }
  const int rx = relation.rank[ix];
  // (x_i, y_{-i}): start from y and pull coordinate i back to x's level.
  const long keep_i = iy + static_cast<long>(x[i] - y[i]) * strides[i];
  // (y_i, x_{-i}): start from x and push coordinate i to y's level.
  const long swap_i = ix + static_cast<long>(y[i] - x[i]) * strides[i];
  switch (axiom) {
    case OrdinalAxiom::Max:
      return relation.rank[keep_i] >= rx || relation.rank[swap_i] >= rx;
    case OrdinalAxiom::Min:
      return rx >= relation.rank[keep_i] || rx >= relation.rank[swap_i];
    case OrdinalAxiom::SecondHighest: {
      if (j < 0 || j >= n || j == i) {
        throw std::invalid_argument("the two-criteria condition needs a distinct second "
                                    "criterion, got " +
                                    std::to_string(j));
      }
      const long swap_j = ix + static_cast<long>(y[j] - x[j]) * strides[j];
      const long keep_ij = iy + static_cast<long>(x[i] - y[i]) * strides[i] +
                           static_cast<long>(x[j] - y[j]) * strides[j];
      return relation.rank[swap_i] >= rx || relation.rank[swap_j] >= rx ||
             relation.rank[keep_ij] >= rx;
    }
  }
  throw std::invalid_argument("unknown ordinal condition");
}

ScanCost ordinal_scan_cost(const FiniteRelation& relation, OrdinalAxiom axiom) {
  ScanCost cost;
  cost.grid_points = relation.grid_points();
  const long n = relation.criteria();
  const long per_pair = axiom == OrdinalAxiom::SecondHighest ? n * (n - 1) / 2 : n;
  cost.instances = saturating_scale(cost.grid_points * per_pair,
                                    static_cast<double>(cost.grid_points));
  return cost;
}

ScanReport check_ordinal_axiom(const FiniteRelation& relation, OrdinalAxiom axiom,
                               const ScanOptions& options) {
  validate_relation(relation);
  ScanReport report;
  report.cost = ordinal_scan_cost(relation, axiom);
  check_grid_budget(report.cost.grid_points, options.max_grid_points);

  const char* name = axiom == OrdinalAxiom::Max            ? "max"
                     : axiom == OrdinalAxiom::Min          ? "min"
                                                           : "second-highest";
  const int n = relation.criteria();
  const long points = report.cost.grid_points;

  std::vector<int> x(n, 0);
  do {
    std::vector<int> y(n, 0);
    do {
      auto fail = [&](int i, int j) {
        ++report.instances_checked;
        if (ordinal_condition_holds(relation, axiom, x, y, i, j)) return false;
        ViolationWitness w;
        w.axiom = name;
        w.criteria = j < 0 ? std::vector<int>{i} : std::vector<int>{i, j};
        w.points = {x, y};
        std::ostringstream detail;
        detail << "condition fails for x=" << tuple_text(x) << ", y=" << tuple_text(y)
               << " at criteri" << (j < 0 ? "on " : "a ") << i;
        if (j >= 0) detail << "," << j;
        detail << ": every admissible mixture ranks below x";
        w.detail = detail.str();
        report.witnesses.push_back(std::move(w));
        return options.max_witnesses > 0 &&
               static_cast<long>(report.witnesses.size()) >= options.max_witnesses;
      };
      if (axiom == OrdinalAxiom::SecondHighest) {
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) {
            if (fail(i, j)) return report;
          }
        }
      } else {
        for (int i = 0; i < n; ++i) {
          if (fail(i, -1)) return report;
        }
      }
    } while (advance(y, relation.shape));
  } while (advance(x, relation.shape));
  (void)points;
  return report;
}

// ---------------------------------------------------------------------------
// Lattice-polynomial test
// ---------------------------------------------------------------------------

namespace {

// Projection table for one criteria block: extreme rank over every point
// sharing the block's coordinates.
struct BlockTable {
  mask_t block = 0;
  std::vector<long> proj_stride;  // per criterion; 0 when outside the block
  long size = 1;
  std::vector<int> extreme;  // max or min rank per projection index

  long project(const std::vector<int>& tuple) const {
    long p = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) p += tuple[i] * proj_stride[i];
    return p;
  }
};

BlockTable build_table(const FiniteRelation& relation, mask_t block, bool want_max) {
  BlockTable table;
  table.block = block;
  table.proj_stride.assign(relation.criteria(), 0);
  for (int i : set_members(block)) {
    table.proj_stride[i] = table.size;
    table.size *= relation.shape[i];
  }
  table.extreme.assign(table.size, want_max ? -1 : std::numeric_limits<int>::max());
  std::vector<int> tuple(relation.criteria(), 0);
  long p = 0;
  do {
    const long proj = table.project(tuple);
    const int r = relation.rank[p++];
    if (want_max) {
      table.extreme[proj] = std::max(table.extreme[proj], r);
    } else {
      table.extreme[proj] = std::min(table.extreme[proj], r);
    }
  } while (advance(tuple, relation.shape));
  return table;
}

void check_families(const FiniteRelation& relation, const std::vector<mask_t>& clauses,
                    const std::vector<mask_t>& terms) {
  const mask_t full = full_mask(relation.criteria());
  if (clauses.empty() || terms.empty()) {
    throw std::invalid_argument("both set families must be non-empty");
  }
  for (mask_t k : clauses) {
    if (k == 0 || (k & ~full) != 0) {
      throw std::invalid_argument("clause " + set_to_string(k) +
                                  " is not a non-empty subset of the criteria");
    }
  }
  for (mask_t m : terms) {
    if (m == 0 || (m & ~full) != 0) {
      throw std::invalid_argument("term " + set_to_string(m) +
                                  " is not a non-empty subset of the criteria");
    }
  }
}

}  // namespace

bool lattice_condition_holds(const FiniteRelation& relation, const std::vector<mask_t>& clauses,
                             const std::vector<mask_t>& terms, const std::vector<int>& w,
                             const std::vector<int>& x) {
  validate_relation(relation);
  check_families(relation, clauses, terms);
  const int rw = relation.rank[relation.index_of(w)];
  const int rx = relation.rank[relation.index_of(x)];

  // Rank extremes over all completions of x's block coordinates.
  auto block_max = [&](mask_t block) {
    const BlockTable t = build_table(relation, block, true);
    return t.extreme[t.project(x)];
  };
  auto block_min = [&](mask_t block) {
    const BlockTable t = build_table(relation, block, false);
    return t.extreme[t.project(x)];
  };

  for (mask_t k : clauses) {
    if (rw >= rx && rw < block_max(k)) continue;  // w must dominate the whole slice
    for (mask_t m : terms) {
      if ((k & m) == 0) continue;
      if (rx >= rw && block_min(m) < rw) continue;  // the slice must dominate w
      return true;
    }
  }
  return false;
}

ScanCost lattice_scan_cost(const FiniteRelation& relation, const std::vector<mask_t>& clauses,
                           const std::vector<mask_t>& terms) {
  (void)clauses;
  (void)terms;
  ScanCost cost;
  cost.grid_points = relation.grid_points();
  cost.instances =
      saturating_scale(cost.grid_points, static_cast<double>(cost.grid_points));
  return cost;
}

ScanReport check_lattice_axiom(const FiniteRelation& relation, const std::vector<mask_t>& clauses,
                               const std::vector<mask_t>& terms, const ScanOptions& options) {
  validate_relation(relation);
  check_families(relation, clauses, terms);
  ScanReport report;
  report.cost = lattice_scan_cost(relation, clauses, terms);
  check_grid_budget(report.cost.grid_points, options.max_grid_points);

  std::vector<BlockTable> clause_tables;
  clause_tables.reserve(clauses.size());
  for (mask_t k : clauses) clause_tables.push_back(build_table(relation, k, true));
  std::vector<BlockTable> term_tables;
  term_tables.reserve(terms.size());
  for (mask_t m : terms) term_tables.push_back(build_table(relation, m, false));

  std::vector<std::vector<char>> intersects(clauses.size(),
                                            std::vector<char>(terms.size(), 0));
  std::vector<char> clause_meets_any(clauses.size(), 0);
  std::vector<char> term_meets_any(terms.size(), 0);
  for (std::size_t a = 0; a < clauses.size(); ++a) {
    for (std::size_t b = 0; b < terms.size(); ++b) {
      if ((clauses[a] & terms[b]) != 0) {
        intersects[a][b] = 1;
        clause_meets_any[a] = 1;
        term_meets_any[b] = 1;
      }
    }
  }

  const int n = relation.criteria();
  std::vector<int> w(n, 0);
  long iw = 0;
  do {
    const int rw = relation.rank[iw++];
    std::vector<int> x(n, 0);
    long ixp = 0;
    do {
      const int rx = relation.rank[ixp++];
      ++report.instances_checked;

      bool ok = false;
      if (rw > rx) {
        // Only the clause side binds; the partner term just has to intersect.
        for (std::size_t a = 0; a < clauses.size() && !ok; ++a) {
          ok = clause_meets_any[a] && rw >= clause_tables[a].extreme[clause_tables[a].project(x)];
        }
      } else if (rx > rw) {
        for (std::size_t b = 0; b < terms.size() && !ok; ++b) {
          ok = term_meets_any[b] && term_tables[b].extreme[term_tables[b].project(x)] >= rw;
        }
      } else {
        for (std::size_t a = 0; a < clauses.size() && !ok; ++a) {
          if (rw < clause_tables[a].extreme[clause_tables[a].project(x)]) continue;
          for (std::size_t b = 0; b < terms.size() && !ok; ++b) {
            ok = intersects[a][b] &&
                 term_tables[b].extreme[term_tables[b].project(x)] >= rw;
          }
        }
      }
      if (!ok) {
        ViolationWitness witness;
        witness.axiom = "lattice";
        witness.points = {w, x};
        std::ostringstream detail;
        detail << "no intersecting clause/term pair covers w=" << tuple_text(w)
               << " against x=" << tuple_text(x) << " (ranks " << rw << " vs " << rx << ")";
        witness.detail = detail.str();
        report.witnesses.push_back(std::move(witness));
        if (options.max_witnesses > 0 &&
            static_cast<long>(report.witnesses.size()) >= options.max_witnesses) {
          return report;
        }
      }
    } while (advance(x, relation.shape));
  } while (advance(w, relation.shape));
  return report;
}

// ---------------------------------------------------------------------------
// Triple cancellation
// ---------------------------------------------------------------------------

bool triple_cancellation_holds(const FiniteRelation& relation, int i, int j,
                               const TriplePattern& t, const std::vector<int>& z) {
  check_pair(relation, i, j);
  auto rank_at = [&](int u, int v) {
    std::vector<int> point = z;
    point[i] = u;
    point[j] = v;
    return relation.rank[relation.index_of(point)];
  };
  const bool premises = rank_at(t.a, t.p) >= rank_at(t.b, t.q) &&
                        rank_at(t.b, t.r) >= rank_at(t.a, t.s) &&
                        rank_at(t.c, t.s) >= rank_at(t.d, t.r);
  return !premises || rank_at(t.c, t.p) >= rank_at(t.d, t.q);
}

ScanCost triple_cancellation_cost(const FiniteRelation& relation, int i, int j) {
  check_pair(relation, i, j);
  ScanCost cost;
  cost.grid_points = relation.grid_points();
  const double li = relation.shape[i];
  const double lj = relation.shape[j];
  const double rest = static_cast<double>(cost.grid_points) / (li * lj);
  cost.instances = saturating_scale(1, std::pow(li, 4) * std::pow(lj, 4) * rest);
  return cost;
}

ScanReport triple_cancellation_violations(const FiniteRelation& relation, int i, int j,
                                          const ScanOptions& options) {
  validate_relation(relation);
  check_pair(relation, i, j);
  ScanReport report;
  report.cost = triple_cancellation_cost(relation, i, j);
  check_grid_budget(report.cost.grid_points, options.max_grid_points);

  const int li = relation.shape[i];
  const int lj = relation.shape[j];
  bool stop = false;

  for_each_rest(relation, i, j, [&](long base, const std::vector<int>& z) {
    if (stop) return;
    const std::vector<long> strides = strides_of(relation.shape);
    auto rank2 = [&](int u, int v) {
      return relation.rank[base + u * strides[i] + v * strides[j]];
    };
    for (int a = 0; a < li && !stop; ++a) {
      for (int b = 0; b < li && !stop; ++b) {
        for (int p = 0; p < lj && !stop; ++p) {
          for (int q = 0; q < lj && !stop; ++q) {
            if (rank2(a, p) < rank2(b, q)) continue;  // first premise fails
            for (int r = 0; r < lj && !stop; ++r) {
              for (int s = 0; s < lj && !stop; ++s) {
                if (rank2(b, r) < rank2(a, s)) continue;  // second premise fails
                for (int c = 0; c < li && !stop; ++c) {
                  for (int d = 0; d < li && !stop; ++d) {
                    if (rank2(c, s) < rank2(d, r)) continue;  // third premise fails
                    ++report.instances_checked;
                    if (rank2(c, p) >= rank2(d, q)) continue;
                    ViolationWitness w;
                    w.axiom = "triple-cancellation";
                    w.criteria = {i, j};
                    w.points = {place_pair(z, i, a, j, p), place_pair(z, i, b, j, q),
                                place_pair(z, i, b, j, r), place_pair(z, i, a, j, s),
                                place_pair(z, i, c, j, s), place_pair(z, i, d, j, r),
                                place_pair(z, i, c, j, p), place_pair(z, i, d, j, q)};
                    std::ostringstream detail;
                    detail << "premises hold for i-levels (" << a << "," << b << "," << c << ","
                           << d << ") and j-levels (" << p << "," << q << "," << r << "," << s
                           << ") against rest " << tuple_text(z) << ", yet the conclusion ranks "
                           << rank2(c, p) << " < " << rank2(d, q);
                    w.detail = detail.str();
                    report.witnesses.push_back(std::move(w));
                    stop = options.max_witnesses > 0 &&
                           static_cast<long>(report.witnesses.size()) >= options.max_witnesses;
                  }
                }
              }
            }
          }
        }
      }
    }
  });
  return report;
}

// ---------------------------------------------------------------------------
// Convexity test
// ---------------------------------------------------------------------------

namespace {

void check_values_for(const FiniteRelation& relation, const ValueFunctionSet& values) {
  if (values.criteria() != relation.criteria()) {
    throw std::invalid_argument("value functions cover " + std::to_string(values.criteria()) +
                                " criteria but the relation has " +
                                std::to_string(relation.criteria()));
  }
  for (int k = 0; k < relation.criteria(); ++k) {
    if (static_cast<int>(values.levels[k].size()) != relation.shape[k]) {
      throw std::invalid_argument("criterion " + std::to_string(k) + " has " +
                                  std::to_string(values.levels[k].size()) +
                                  " level values for a grid of " +
                                  std::to_string(relation.shape[k]) + " levels");
    }
  }
}

}  // namespace

bool convexity_condition_holds(const FiniteRelation& relation, const ValueFunctionSet& values,
                               int i, int j, const TradeoffInstance& t,
                               const std::vector<int>& z) {
  check_pair(relation, i, j);
  check_values_for(relation, values);
  const std::vector<double>& fi = values.levels[i];
  const std::vector<double>& fj = values.levels[j];
  auto rank_at = [&](int u, int v) {
    std::vector<int> point = z;
    point[i] = u;
    point[j] = v;
    return relation.rank[relation.index_of(point)];
  };
  // Criterion j must dominate i at the six premise points...
  const bool binds = fj[t.p] >= fi[t.a] && fj[t.q] >= fi[t.b] && fj[t.r] >= fi[t.a] &&
                     fj[t.s] >= fi[t.b] && fj[t.p] >= fi[t.c] && fj[t.q] >= fi[t.d] &&
                     // ...and i must dominate j at the two conclusion points.
                     fi[t.c] >= fj[t.r] && fi[t.d] >= fj[t.s] &&
                     // Marginal side conditions on the levels themselves.
                     fi[t.d] >= fi[t.c] && fj[t.r] >= fj[t.s];
  if (!binds) return true;
  const bool premises = rank_at(t.a, t.p) == rank_at(t.b, t.q) &&
                        rank_at(t.a, t.r) == rank_at(t.b, t.s) &&
                        rank_at(t.c, t.p) == rank_at(t.d, t.q);
  return !premises || rank_at(t.c, t.r) >= rank_at(t.d, t.s);
}

ScanCost convexity_scan_cost(const FiniteRelation& relation, int i, int j) {
  ScanCost cost;
  cost.grid_points = relation.grid_points();
  auto pair_instances = [&](int a, int b) {
    const double la = relation.shape[a];
    const double lb = relation.shape[b];
    const double rest = static_cast<double>(cost.grid_points) / (la * lb);
    return std::pow(la, 4) * std::pow(lb, 4) * rest;
  };
  double total = 0.0;
  if (i >= 0) {
    check_pair(relation, i, j);
    total = pair_instances(i, j);
  } else {
    const int n = relation.criteria();
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a != b) total += pair_instances(a, b);
      }
    }
  }
  cost.instances = saturating_scale(1, total);
  return cost;
}

namespace {

void scan_tradeoff_pair(const FiniteRelation& relation, const ValueFunctionSet& values, int i,
                        int j, const ScanOptions& options, ScanReport& report, bool& stop) {
  const int li = relation.shape[i];
  const int lj = relation.shape[j];
  const std::vector<double>& fi = values.levels[i];
  const std::vector<double>& fj = values.levels[j];
  const std::vector<long> strides = strides_of(relation.shape);

  for_each_rest(relation, i, j, [&](long base, const std::vector<int>& z) {
    if (stop) return;
    auto rank2 = [&](int u, int v) {
      return relation.rank[base + u * strides[i] + v * strides[j]];
    };
    for (int a = 0; a < li && !stop; ++a) {
      for (int b = 0; b < li && !stop; ++b) {
        for (int p = 0; p < lj && !stop; ++p) {
          if (fj[p] < fi[a]) continue;
          for (int q = 0; q < lj && !stop; ++q) {
            if (fj[q] < fi[b]) continue;
            if (rank2(a, p) != rank2(b, q)) continue;
            for (int r = 0; r < lj && !stop; ++r) {
              if (fj[r] < fi[a]) continue;
              for (int s = 0; s < lj && !stop; ++s) {
                if (fj[s] < fi[b] || fj[r] < fj[s]) continue;
                if (rank2(a, r) != rank2(b, s)) continue;
                for (int c = 0; c < li && !stop; ++c) {
                  if (fj[p] < fi[c] || fi[c] < fj[r]) continue;
                  for (int d = 0; d < li && !stop; ++d) {
                    if (fj[q] < fi[d] || fi[d] < fj[s] || fi[d] < fi[c]) continue;
                    if (rank2(c, p) != rank2(d, q)) continue;
                    ++report.instances_checked;
                    if (rank2(c, r) >= rank2(d, s)) continue;
                    ViolationWitness w;
                    w.axiom = "convexity-tradeoff";
                    w.criteria = {i, j};
                    w.points = {place_pair(z, i, a, j, p), place_pair(z, i, b, j, q),
                                place_pair(z, i, a, j, r), place_pair(z, i, b, j, s),
                                place_pair(z, i, c, j, p), place_pair(z, i, d, j, q),
                                place_pair(z, i, c, j, r), place_pair(z, i, d, j, s)};
                    std::ostringstream detail;
                    detail << "indifference premises hold for i-levels (" << a << "," << b << ","
                           << c << "," << d << ") and j-levels (" << p << "," << q << "," << r
                           << "," << s << ") against rest " << tuple_text(z)
                           << ", yet the conclusion ranks " << rank2(c, r) << " < "
                           << rank2(d, s);
                    w.detail = detail.str();
                    report.witnesses.push_back(std::move(w));
                    stop = options.max_witnesses > 0 &&
                           static_cast<long>(report.witnesses.size()) >= options.max_witnesses;
                  }
                }
              }
            }
          }
        }
      }
    }
  });
}

}  // namespace

ScanReport check_convexity_axiom(const FiniteRelation& relation, const ValueFunctionSet& values,
                                 int i, int j, const ScanOptions& options) {
  validate_relation(relation);
  check_values_for(relation, values);
  ScanReport report;
  report.cost = convexity_scan_cost(relation, i, j);
  check_grid_budget(report.cost.grid_points, options.max_grid_points);

  bool stop = false;
  if (i >= 0) {
    check_pair(relation, i, j);
    scan_tradeoff_pair(relation, values, i, j, options, report, stop);
    return report;
  }
  const int n = relation.criteria();
  for (int a = 0; a < n && !stop; ++a) {
    for (int b = 0; b < n && !stop; ++b) {
      if (a != b) scan_tradeoff_pair(relation, values, a, b, options, report, stop);
    }
  }
  return report;
}

ValueFunctionSet standard_tradeoff_grid(const Capacity& capacity) {
  require_valid(capacity);
  const int n = capacity.n;
  const mask_t full = full_mask(n);

  // Weight of the lowest and second-lowest coordinate when criterion 0 is the
  // minimum and criterion 1 the runner-up.
  const double beta = 1.0 - capacity.values[full ^ bit(0)];
  const double gamma = capacity.values[full ^ bit(0)] - capacity.values[full ^ bit(0) ^ bit(1)];
  double ratio = gamma > 1e-9 ? beta / gamma : 1.0;

  // Four base levels for criterion 0 and two for criterion 1; the remaining
  // two criterion-1 levels are placed so the indifference premises of the
  // trade-off condition hold exactly under this capacity's weights.
  const double step = -0.05;
  const double a = 0.10, b = 0.15, c = 0.25, d = 0.30;
  const double r = 0.20, p = 0.35;
  double q = p + ratio * step;
  double s = r + ratio * step;
  if (s <= 0.0) {  // ratio too steep for the base levels; keep the grid sane
    q = p + step;
    s = r + step;
  }

  ValueFunctionSet values;
  values.levels.assign(n, {});
  values.levels[0] = {0.0, a, b, c, d};
  values.levels[1] = {0.0, s, r, q, p};
  std::sort(values.levels[1].begin(), values.levels[1].end());
  for (int k = 2; k < n; ++k) values.levels[k] = {0.0, 0.2, 0.45, 0.62, 0.8};

  double top = 0.0;
  for (const std::vector<double>& f : values.levels) top = std::max(top, f.back());
  for (std::vector<double>& f : values.levels) {
    for (double& v : f) v /= top;
  }
  return values;
}

// ---------------------------------------------------------------------------
// Interaction groups
// ---------------------------------------------------------------------------

std::vector<mask_t> interaction_groups(const MobiusRepresentation& mobius, double tolerance) {
  const int n = mobius.n;
  if (n < 2 || n > kMaxCriteria ||
      mobius.coeffs.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("interaction coefficients do not form a table over 2^n sets");
  }
  DisjointSets sets(n);
  const mask_t full = full_mask(n);
  for (mask_t a = 0; a <= full; ++a) {
    if (set_size(a) < 2 || std::abs(mobius.coeffs[a]) <= tolerance) continue;
    const auto members = set_members(a);
    for (std::size_t k = 1; k < members.size(); ++k) sets.unite(members[0], members[k]);
  }
  return sets.components(n);
}

std::vector<mask_t> interaction_groups_by_scan(const Capacity& capacity,
                                               const ValueFunctionSet& values,
                                               const ScanOptions& options) {
  const FiniteRelation relation = induce_relation(capacity, values, options.max_grid_points);
  ScanOptions first_hit = options;
  first_hit.max_witnesses = 1;

  DisjointSets sets(capacity.n);
  for (int i = 0; i < capacity.n; ++i) {
    for (int j = i + 1; j < capacity.n; ++j) {
      // The condition is direction-sensitive, so look both ways.
      if (!triple_cancellation_violations(relation, i, j, first_hit).holds() ||
          !triple_cancellation_violations(relation, j, i, first_hit).holds()) {
        sets.unite(i, j);
      }
    }
  }
  return sets.components(capacity.n);
}

}  // namespace choquet
