/*
 * Copyright 2026 The drinfeld-level Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/torsion.hpp"

namespace drinfeld {

/// Which Cartier divisor identity defines a level structure.
///   A: h_pi = prod over (pi^{-1}/A)^d, one identity per prime pi | a.
///   B: h_a  = prod over (a^{-1}/A)^d, a single identity.
enum class LevelMode { A, B };

const char* to_string(LevelMode mode);

/// Exact coefficientwise comparison of two monic additive polynomials.
struct DivisorReport {
  APoly ideal;      // the prime (mode A) or the full ideal (mode B)
  TwistedPoly lhs;  // division polynomial h
  TwistedPoly rhs;  // prod (X - iota(x)), in additive form
  bool equal = false;
  /// X-exponent q^i of the first differing coefficient.
  std::optional<std::uint64_t> first_mismatch;
};

/// Images y_1..y_d of the generators (1/a) e_j of (a^{-1}/A)^d, identified
/// with the generators e_j of (A/(a))^d.
struct LevelStructureCandidate {
  std::vector<AlgebraElement> basis_images;

  bool operator==(const LevelStructureCandidate& o) const { return basis_images == o.basis_images; }
  bool operator<(const LevelStructureCandidate& o) const { return basis_images < o.basis_images; }
};

/**
 * prod_{x in F_q^r} (X - sum_i x_i v_i) for v_1..v_r in B, as an additive
 * polynomial. Uses P_0 = X, P_i = P_{i-1}^q - P_{i-1}(v_i)^{q-1} P_{i-1},
 * which holds over any commutative F_q-algebra, multiplicities included.
 */
TwistedPoly divisor_product(const AlgebraPtr& base, const std::vector<AlgebraElement>& images);

/// A standard Drinfeld module together with an ideal (a), a monic.
class LevelProblem {
 public:
  LevelProblem(DrinfeldModule E, APoly a);

  const DrinfeldModule& module() const { return E_; }
  const APoly& ideal() const { return a_; }
  const std::vector<std::pair<APoly, unsigned>>& factorization() const { return factors_; }
  const TwistedPoly& division_polynomial() const { return h_a_; }
  /// E[a](B).
  const TorsionSet& torsion() const { return torsion_; }
  bool is_prime_ideal() const { return factors_.size() == 1 && factors_.front().second == 1; }

  /// e_a(y_j) = 0 for every j.
  bool is_well_defined(const LevelStructureCandidate& c) const;

  /// iota(x) = sum_j e_{x_j}(y_j) for x in (A/(a))^d.
  AlgebraElement iota_eval(const LevelStructureCandidate& c, const std::vector<APoly>& x) const;

  DivisorReport check_def_B(const LevelStructureCandidate& c) const;
  /// One report per prime pi | a, in factorization order.
  std::vector<DivisorReport> check_def_A(const LevelStructureCandidate& c) const;
  bool satisfies(const LevelStructureCandidate& c, LevelMode mode) const;

  /// All d-tuples of E[a](B) satisfying the chosen definition, in
  /// lexicographic order of the tuple (first image most significant).
  std::vector<LevelStructureCandidate> enumerate(LevelMode mode) const;

 private:
  struct PrimeData {
    APoly pi;
    APoly cofactor;
    TwistedPoly e_cofactor;
    TwistedPoly h_pi;
  };

  // e_{T^i}(y), i < deg, for the images feeding the divisor product.
  std::vector<AlgebraElement> tower(const AlgebraElement& y, std::size_t deg) const;
  bool matches(const TwistedPoly& h, const std::vector<AlgebraElement>& images) const;

  DrinfeldModule E_;
  APoly a_;
  std::vector<std::pair<APoly, unsigned>> factors_;
  TwistedPoly h_a_;
  TwistedPoly e_T_;
  std::vector<PrimeData> primes_;
  TorsionSet torsion_;
};

struct EquivalenceReport {
  APoly ideal;
  bool prime_ideal = false;
  std::size_t torsion_count = 0;
  std::uint64_t candidates = 0;
  std::vector<LevelStructureCandidate> set_a;
  std::vector<LevelStructureCandidate> set_b;
  bool sets_equal = false;
  /// Every mode-A structure passes the mode-B identity (checked per member).
  bool a_implies_b = false;
  std::optional<LevelStructureCandidate> witness;
  std::string witness_side;
  /// Field bases only: the count predicted from the torsion module structure.
  std::optional<std::uint64_t> predicted_count;
  bool count_matches = true;
  std::uint64_t hash_a = 0;
  std::uint64_t hash_b = 0;

  bool ok() const { return sets_equal && a_implies_b && count_matches; }
};

/**
 * Count of level structures over a field base, computed without
 * enumeration: for each pi^n || a the pi-part must map onto a free
 * A/pi^n-module of rank r (r = d, or d - h at the characteristic) inside
 * E[pi^n](B); the number of such maps is
 * Q^{(n-1) r d} prod_{i<r} (Q^d - Q^i), Q = q^{deg pi}.
 */
std::uint64_t predicted_level_count(const DrinfeldModule& E, const APoly& a);

EquivalenceReport equivalence_report(const DrinfeldModule& E, const APoly& a);

/// FNV-1a over the enumeration indices of the images, in list order.
std::uint64_t set_hash(const std::vector<LevelStructureCandidate>& set);

}  // namespace drinfeld
