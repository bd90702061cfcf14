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

#include "choquet/capacity.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace choquet {

namespace {

void check_shape(int n, std::size_t size, const char* what) {
  if (n < 2 || n > kMaxCriteria) {
    throw std::invalid_argument(std::string(what) + ": criteria count " + std::to_string(n) +
                                " outside [2, " + std::to_string(kMaxCriteria) + "]");
  }
  if (size != (std::size_t{1} << n)) {
    throw std::invalid_argument(std::string(what) + ": table has " + std::to_string(size) +
                                " entries, expected " + std::to_string(std::size_t{1} << n));
  }
}

}  // namespace

std::string CapacityViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::EmptySetNotZero:
      os << "value of {} is " << subset_value << ", expected 0";
      break;
    case Kind::FullSetNotOne:
      os << "value of the full set is " << superset_value << ", expected 1";
      break;
    case Kind::Monotonicity:
      os << "monotonicity: value of " << set_to_string(subset) << " = " << subset_value
         << " exceeds value of superset " << set_to_string(superset) << " = " << superset_value;
      break;
  }
  return os.str();
}

std::vector<CapacityViolation> validate(const Capacity& capacity) {
  check_shape(capacity.n, capacity.values.size(), "validate");
  std::vector<CapacityViolation> out;

  const mask_t full = capacity.full();
  if (std::abs(capacity.values[0]) > kEqualityTol) {
    out.push_back({CapacityViolation::Kind::EmptySetNotZero, 0, 0, capacity.values[0], 0.0});
  }
  if (std::abs(capacity.values[full] - 1.0) > kEqualityTol) {
    out.push_back({CapacityViolation::Kind::FullSetNotOne, 0, full, 0.0, capacity.values[full]});
  }

  // Fast covering-pair sweep first; only fall back to the full subset-pair
  // enumeration when something is actually wrong (or would be missed).
  bool covering_ok = true;
  for (mask_t b = 1; b <= full && covering_ok; ++b) {
    for (mask_t rest = b; rest != 0; rest &= rest - 1) {
      const mask_t a = b ^ (rest & (~rest + 1));
      if (capacity.values[a] > capacity.values[b] + kMonotonicitySlack) {
        covering_ok = false;
        break;
      }
    }
  }
  if (covering_ok) return out;

  if (capacity.n <= 14) {
    for (mask_t b = 1; b <= full; ++b) {
      mask_t a = (b - 1) & b;  // largest proper submask, down to 0
      while (true) {
        if (capacity.values[a] > capacity.values[b] + kMonotonicitySlack) {
          out.push_back({CapacityViolation::Kind::Monotonicity, a, b, capacity.values[a],
                         capacity.values[b]});
        }
        if (a == 0) break;
        a = (a - 1) & b;
      }
    }
  } else {
    for (mask_t b = 1; b <= full; ++b) {
      for (mask_t rest = b; rest != 0; rest &= rest - 1) {
        const mask_t a = b ^ (rest & (~rest + 1));
        if (capacity.values[a] > capacity.values[b] + kMonotonicitySlack) {
          out.push_back({CapacityViolation::Kind::Monotonicity, a, b, capacity.values[a],
                         capacity.values[b]});
        }
      }
    }
  }
  return out;
}

bool is_valid(const Capacity& capacity) {
  if (capacity.n < 2 || capacity.n > kMaxCriteria) return false;
  if (capacity.values.size() != (std::size_t{1} << capacity.n)) return false;
  const mask_t full = capacity.full();
  if (std::abs(capacity.values[0]) > kEqualityTol) return false;
  if (std::abs(capacity.values[full] - 1.0) > kEqualityTol) return false;
  for (mask_t b = 1; b <= full; ++b) {
    for (mask_t rest = b; rest != 0; rest &= rest - 1) {
      const mask_t a = b ^ (rest & (~rest + 1));
      if (capacity.values[a] > capacity.values[b] + kMonotonicitySlack) return false;
    }
  }
  return true;
}

void require_valid(const Capacity& capacity) {
  check_shape(capacity.n, capacity.values.size(), "capacity");
  if (is_valid(capacity)) return;
  const auto violations = validate(capacity);
  std::string msg = "invalid capacity";
  if (!violations.empty()) msg += ": " + violations.front().describe();
  throw validation_error(msg);
}

void mobius_transform_inplace(std::vector<double>& table, int n) {
  check_shape(n, table.size(), "mobius_transform");
  const mask_t full = full_mask(n);
  for (int i = 0; i < n; ++i) {
    const mask_t b = bit(i);
    for (mask_t m = 0; m <= full; ++m) {
      if (m & b) table[m] -= table[m ^ b];
    }
  }
}

void zeta_transform_inplace(std::vector<double>& table, int n) {
  check_shape(n, table.size(), "zeta_transform");
  const mask_t full = full_mask(n);
  for (int i = 0; i < n; ++i) {
    const mask_t b = bit(i);
    for (mask_t m = 0; m <= full; ++m) {
      if (m & b) table[m] += table[m ^ b];
    }
  }
}

MobiusRepresentation mobius(const Capacity& capacity) {
  require_valid(capacity);
  MobiusRepresentation m{capacity.n, capacity.values};
  mobius_transform_inplace(m.coeffs, m.n);
  return m;
}

Capacity zeta(const MobiusRepresentation& m) {
  check_shape(m.n, m.coeffs.size(), "zeta");
  Capacity capacity{m.n, m.coeffs};
  zeta_transform_inplace(capacity.values, capacity.n);
  return capacity;
}

std::vector<double> shapley(const Capacity& capacity) {
  require_valid(capacity);
  const int n = capacity.n;
  const BinomialTable binom(n);
  // weight of a coalition T not containing i: 1 / (n * C(n-1, |T|)).
  std::vector<double> weight(n);
  for (int t = 0; t < n; ++t) weight[t] = 1.0 / (n * binom(n - 1, t));

  std::vector<double> phi(n, 0.0);
  const mask_t full = capacity.full();
  for (int i = 0; i < n; ++i) {
    const mask_t rest = full ^ bit(i);
    for_each_subset(rest, [&](mask_t t) {
      phi[i] += weight[set_size(t)] * (capacity.values[t | bit(i)] - capacity.values[t]);
    });
  }
  return phi;
}

std::vector<double> shapley_from_mobius(const MobiusRepresentation& m) {
  check_shape(m.n, m.coeffs.size(), "shapley_from_mobius");
  std::vector<double> phi(m.n, 0.0);
  const mask_t full = full_mask(m.n);
  for (mask_t a = 1; a <= full; ++a) {
    const double share = m.coeffs[a] / set_size(a);
    for (int i : set_members(a)) phi[i] += share;
  }
  return phi;
}

double interaction_index(const Capacity& capacity, mask_t t) {
  require_valid(capacity);
  const int n = capacity.n;
  if (t == 0 || t > capacity.full()) {
    throw std::invalid_argument("interaction_index: coalition " + set_to_string(t) +
                                " is empty or out of range");
  }
  const int p = set_size(t);
  const BinomialTable binom(n + 1);
  // xi(k) = (n-k-p)! k! / (n-p+1)!  ==  1 / ((n-p+1) * C(n-p, k)).
  std::vector<double> xi(n - p + 1);
  for (int k = 0; k <= n - p; ++k) xi[k] = 1.0 / ((n - p + 1) * binom(n - p, k));

  double total = 0.0;
  const mask_t rest = capacity.full() ^ t;
  for_each_subset(rest, [&](mask_t k) {
    double inner = 0.0;
    for_each_subset(t, [&](mask_t l) {
      const double sign = ((p - set_size(l)) % 2 == 0) ? 1.0 : -1.0;
      inner += sign * capacity.values[l | k];
    });
    total += xi[set_size(k)] * inner;
  });
  return total;
}

double interaction_pair_mobius(const MobiusRepresentation& m, int i, int j) {
  check_shape(m.n, m.coeffs.size(), "interaction_pair_mobius");
  if (i == j || i < 0 || j < 0 || i >= m.n || j >= m.n) {
    throw std::invalid_argument("interaction_pair_mobius: bad criterion pair (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
  }
  const mask_t ij = bit(i) | bit(j);
  double total = 0.0;
  const mask_t full = full_mask(m.n);
  for (mask_t a = ij; a <= full; ++a) {
    if ((a & ij) != ij) continue;
    total += m.coeffs[a] / (set_size(a) - 1);
  }
  return total;
}

IndexReport indices(const Capacity& capacity) {
  IndexReport report;
  report.shapley = shapley(capacity);
  for (int i = 0; i < capacity.n; ++i) {
    for (int j = i + 1; j < capacity.n; ++j) {
      report.pairwise.push_back({i, j, interaction_index(capacity, bit(i) | bit(j))});
    }
  }
  return report;
}

bool is_supermodular(const Capacity& capacity) {
  require_valid(capacity);
  const mask_t full = capacity.full();
  for (mask_t a = 0; a <= full; ++a) {
    for (mask_t b = a + 1; b <= full; ++b) {
      const mask_t u = a | b;
      if (u == a || u == b) continue;  // nested pairs hold trivially
      if (capacity.values[u] + capacity.values[a & b] <
          capacity.values[a] + capacity.values[b] - kEqualityTol) {
        return false;
      }
    }
  }
  return true;
}

bool mobius_convexity_criterion(const MobiusRepresentation& m) {
  check_shape(m.n, m.coeffs.size(), "mobius_convexity_criterion");
  const int n = m.n;
  const mask_t full = full_mask(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const mask_t ij = bit(i) | bit(j);
      // partial[c] = sum of coeffs over {i,j} <= B <= ij|c, for c inside the
      // complement of {i,j}; built as a running zeta transform.
      const mask_t rest = full ^ ij;
      std::vector<double> partial(std::size_t{1} << (n - 2));
      // pack the complement's bits densely
      std::vector<int> rest_bits = set_members(rest);
      for (mask_t packed = 0; packed < partial.size(); ++packed) {
        mask_t c = 0;
        for (std::size_t bpos = 0; bpos < rest_bits.size(); ++bpos) {
          if (packed & (mask_t{1} << bpos)) c |= bit(rest_bits[bpos]);
        }
        partial[packed] = m.coeffs[ij | c];
      }
      for (std::size_t bpos = 0; bpos < rest_bits.size(); ++bpos) {
        const mask_t pb = mask_t{1} << bpos;
        for (mask_t packed = 0; packed < partial.size(); ++packed) {
          if (packed & pb) partial[packed] += partial[packed ^ pb];
        }
      }
      for (double sum : partial) {
        if (sum < -kEqualityTol) return false;
      }
    }
  }
  return true;
}

bool is_convex(const Capacity& capacity) {
  const bool direct = is_supermodular(capacity);
  const bool via_mobius = mobius_convexity_criterion(mobius(capacity));
  if (direct != via_mobius) {
    throw internal_consistency_error(
        "is_convex: supermodularity scan says " + std::string(direct ? "true" : "false") +
        " but the coefficient-sign criterion says " + std::string(via_mobius ? "true" : "false"));
  }
  return direct;
}

bool is_k_additive(const Capacity& capacity, int k) {
  if (k < 1 || k > capacity.n) {
    throw std::invalid_argument("is_k_additive: k = " + std::to_string(k) + " outside [1, n]");
  }
  const MobiusRepresentation m = mobius(capacity);
  const mask_t full = capacity.full();
  for (mask_t a = 0; a <= full; ++a) {
    if (set_size(a) > k && std::abs(m.coeffs[a]) > kEqualityTol) return false;
  }
  return true;
}

bool is_zero_one(const Capacity& capacity) {
  require_valid(capacity);
  for (double v : capacity.values) {
    if (std::abs(v) > kEqualityTol && std::abs(v - 1.0) > kEqualityTol) return false;
  }
  return true;
}

}  // namespace choquet
