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
#include <vector>

#include "drinfeld/drinfeld_module.hpp"

namespace drinfeld {

/// The normalized additive polynomial h_a = lc^{-1} e_a cutting out E[(a)].
struct DivisionPolynomial {
  APoly ideal;
  TwistedPoly h;
};

/// Requires a standard module (unit leading coefficient of e_a).
DivisionPolynomial division_poly(const DrinfeldModule& E, const APoly& a);

/// Points of E[a] over some finite algebra, sorted in enumeration order.
struct TorsionSet {
  AlgebraPtr algebra;
  std::vector<AlgebraElement> points;

  std::size_t size() const { return points.size(); }
  bool contains(const AlgebraElement& x) const;
};

/// E[a](B) as the kernel of x -> e_a(x) on B.
TorsionSet torsion_points(const DrinfeldModule& E, const APoly& a);
/// E[a](B') for B' the target of `to`.
TorsionSet torsion_points(const DrinfeldModule& E, const APoly& a, const RingHom& to);

/// log_q n; throws if n is not a power of q.
unsigned log_q(std::uint64_t n, unsigned q);

/// Number of geometric points of E[a] over a field base: q^{d deg a}
/// reduced by q^{h deg(pi) v_pi(a)} at the characteristic pi.
std::uint64_t separable_count(const DrinfeldModule& E, const APoly& a);

struct SplittingExtension {
  RingHom embedding;
  /// l' = F_{q^{m * factor}}.
  unsigned factor;
  std::uint64_t count;
};

/**
 * Least extension of the field base over which E[a] has all of its
 * separable_count points, trying factors 1, 2, ... up to degree_bound.
 * Throws BoundExceeded (with the partial count) when none qualifies.
 */
SplittingExtension splitting_extension(const DrinfeldModule& E, const APoly& a, unsigned degree_bound = 12,
                                       std::uint64_t max_card = kDefaultMaxCard);

/// Elementary divisors of a finite pi-primary A-module, sum (A/pi^{n_i}).
struct ModuleStructure {
  APoly pi;
  std::vector<unsigned> exponents;  // descending

  /// r if every exponent equals n (the module is free of rank r over A/pi^n).
  std::optional<unsigned> free_rank(unsigned n) const;
  /// e.g. "trivial", "(A/T)^1", "(A/T^2)^1 + (A/T)^1".
  std::string describe() const;
};

struct ModuleStructureReport {
  ModuleStructure structure;
  unsigned n = 0;
  bool at_characteristic = false;
  unsigned height = 0;
  unsigned expected_rank = 0;
  bool matches_prediction = false;
  std::vector<std::uint64_t> filtration_counts;  // |E[pi^j](B')|, j = 1..n
};

/**
 * Structure of E[pi^n](B') read off the filtration sizes |E[pi^j](B')|.
 * Expected: free of rank d away from the characteristic, d - h at it.
 * Throws BoundExceeded when B' is too small to hold the separable points.
 */
ModuleStructureReport module_structure(const DrinfeldModule& E, const APoly& pi, unsigned n, const RingHom& to);

struct PropertyReport {
  bool degree_ok = true;          // deg_X h_a = q^{d deg a}
  bool coprime_split_ok = true;   // E[a] x E[b] -> E[ab] bijective
  bool etale_ok = true;           // h separable <=> gamma(a) unit
  bool base_change_ok = true;     // h_a commutes with the ring maps
  std::uint64_t count_a = 0;
  std::uint64_t count_b = 0;
  std::uint64_t count_ab = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// a and b must be coprime. The base-change check uses `to` and, for a
/// non-reduced base, the reduction B -> l as well.
PropertyReport property_checks(const DrinfeldModule& E, const APoly& a, const APoly& b, const RingHom& to);

}  // namespace drinfeld
