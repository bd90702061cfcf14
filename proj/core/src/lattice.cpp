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

#include "choquet/lattice.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <string>

#include "choquet/bits.hpp"
#include "choquet/errors.hpp"

namespace choquet {
namespace {

void check_polynomial(const LatticePolynomial& poly) {
  if (poly.n < 2 || poly.n > kMaxCriteria) {
    throw std::invalid_argument("criterion count must be between 2 and " +
                                std::to_string(kMaxCriteria) + ", got " + std::to_string(poly.n));
  }
  if (poly.terms.empty()) {
    throw std::invalid_argument("lattice polynomial has no terms");
  }
  const mask_t full = full_mask(poly.n);
  for (mask_t t : poly.terms) {
    if (t == 0 || (t & ~full) != 0) {
      throw std::invalid_argument("lattice polynomial term " + set_to_string(t) +
                                  " is not a non-empty subset of the " + std::to_string(poly.n) +
                                  " criteria");
    }
  }
  if (!is_antichain(poly.terms)) {
    throw std::invalid_argument("lattice polynomial terms are not an antichain");
  }
}

void check_profile_size(int n, const Profile& profile) {
  if (static_cast<int>(profile.size()) != n) {
    throw std::invalid_argument("profile has " + std::to_string(profile.size()) +
                                " scores but the polynomial is over " + std::to_string(n) +
                                " criteria");
  }
}

double min_over(mask_t set, const Profile& profile) {
  double value = profile[std::countr_zero(set)];
  for (mask_t rest = set & (set - 1); rest != 0; rest &= rest - 1) {
    value = std::min(value, profile[std::countr_zero(rest)]);
  }
  return value;
}

double max_over(mask_t set, const Profile& profile) {
  double value = profile[std::countr_zero(set)];
  for (mask_t rest = set & (set - 1); rest != 0; rest &= rest - 1) {
    value = std::max(value, profile[std::countr_zero(rest)]);
  }
  return value;
}

std::string render(const LatticePolynomial& poly, const char* inner_op, const char* outer_op) {
  check_polynomial(poly);
  std::ostringstream out;
  bool first_term = true;
  for (mask_t term : poly.terms) {
    if (!first_term) out << outer_op;
    first_term = false;
    out << '(';
    bool first_var = true;
    for (int i : set_members(term)) {
      if (!first_var) out << inner_op;
      first_var = false;
      out << 'x' << i;
    }
    out << ')';
  }
  return out.str();
}

}  // namespace

bool is_antichain(const std::vector<mask_t>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j) continue;
      if ((sets[i] & sets[j]) == sets[i]) return false;  // sets[i] subset of sets[j]
    }
  }
  return true;
}

LatticePolynomial extract_dnf(const Capacity& capacity) {
  require_valid(capacity);
  if (!is_zero_one(capacity)) {
    throw std::invalid_argument("capacity takes values other than 0 and 1");
  }
  LatticePolynomial poly;
  poly.n = capacity.n;
  const mask_t full = full_mask(capacity.n);
  for (mask_t a = 1; a <= full; ++a) {
    if (capacity.values[a] != 1.0) continue;
    // Monotone + winning: minimal iff dropping any one member loses.
    bool minimal = true;
    for (mask_t rest = a; rest != 0; rest &= rest - 1) {
      const mask_t without = a ^ (rest & -rest);
      if (capacity.values[without] == 1.0) {
        minimal = false;
        break;
      }
    }
    if (minimal) poly.terms.push_back(a);
  }
  return poly;  // ascending scan order already sorts the terms
}

LatticePolynomial dualize(const LatticePolynomial& poly) {
  check_polynomial(poly);
  LatticePolynomial dual;
  dual.n = poly.n;
  const mask_t full = full_mask(poly.n);
  for (mask_t t = 1; t <= full; ++t) {
    bool transversal = true;
    for (mask_t term : poly.terms) {
      if ((t & term) == 0) {
        transversal = false;
        break;
      }
    }
    if (!transversal) continue;
    // Minimal iff every member is the sole contact with some term.
    bool minimal = true;
    for (mask_t rest = t; rest != 0 && minimal; rest &= rest - 1) {
      const mask_t member = rest & -rest;
      bool needed = false;
      for (mask_t term : poly.terms) {
        if ((t & term) == member) {
          needed = true;
          break;
        }
      }
      minimal = needed;
    }
    if (minimal) dual.terms.push_back(t);
  }
  return dual;
}

Capacity capacity_from_dnf(const LatticePolynomial& poly) {
  check_polynomial(poly);
  Capacity capacity;
  capacity.n = poly.n;
  capacity.values.assign(std::size_t{1} << poly.n, 0.0);
  const mask_t full = full_mask(poly.n);
  for (mask_t a = 1; a <= full; ++a) {
    for (mask_t term : poly.terms) {
      if ((a & term) == term) {
        capacity.values[a] = 1.0;
        break;
      }
    }
  }
  return capacity;
}

double eval_dnf(const LatticePolynomial& poly, const Profile& profile) {
  check_polynomial(poly);
  check_profile_size(poly.n, profile);
  double best = min_over(poly.terms.front(), profile);
  for (std::size_t k = 1; k < poly.terms.size(); ++k) {
    best = std::max(best, min_over(poly.terms[k], profile));
  }
  return best;
}

double eval_cnf(const LatticePolynomial& poly, const Profile& profile) {
  check_polynomial(poly);
  check_profile_size(poly.n, profile);
  double worst = max_over(poly.terms.front(), profile);
  for (std::size_t k = 1; k < poly.terms.size(); ++k) {
    worst = std::min(worst, max_over(poly.terms[k], profile));
  }
  return worst;
}

std::string render_dnf(const LatticePolynomial& poly) { return render(poly, " & ", " | "); }

std::string render_cnf(const LatticePolynomial& poly) { return render(poly, " | ", " & "); }

}  // namespace choquet
