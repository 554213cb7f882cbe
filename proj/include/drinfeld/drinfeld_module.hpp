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

#include <optional>
#include <string>
#include <vector>

#include "drinfeld/algebra.hpp"
#include "drinfeld/apoly.hpp"
#include "drinfeld/twisted_poly.hpp"

namespace drinfeld {

/**
 * A Drinfeld module of rank d over B for A = F_q[T] with the trivial line
 * bundle, given by e_T = gamma + c_1 tau + ... + c_N tau^N.
 *
 * The rank is the index of the highest unit coefficient; everything above
 * it is nilpotent. The module is standard when N == d.
 */
class DrinfeldModule {
 public:
  /// coeffs are c_1..c_N. Throws ZeroDegreeModule if all vanish and
  /// NoUnitCoefficient if none is a unit.
  static DrinfeldModule make(AlgebraPtr base, const AlgebraElement& gamma, std::vector<AlgebraElement> coeffs);

  /// Skips validation and takes the declared rank at face value; used to
  /// build non-examples for rank_check.
  static DrinfeldModule unchecked(AlgebraPtr base, const AlgebraElement& gamma, std::vector<AlgebraElement> coeffs,
                                  unsigned rank);

  const AlgebraPtr& base() const { return base_; }
  const AlgebraElement& gamma() const { return gamma_; }
  const TwistedPoly& e_T() const { return e_T_; }
  unsigned rank() const { return rank_; }
  bool is_standard() const { return e_T_.degree() == static_cast<int>(rank_); }

  /// e_a = a(e_T) in B{tau}.
  TwistedPoly e_of(const APoly& a) const;

  DrinfeldModule base_change(const RingHom& hom) const;

  std::string describe() const;

  bool operator==(const DrinfeldModule& o) const { return rank_ == o.rank_ && e_T_ == o.e_T_; }

 private:
  DrinfeldModule(AlgebraPtr base, AlgebraElement gamma, TwistedPoly e_T, unsigned rank)
      : base_(std::move(base)), gamma_(gamma), e_T_(std::move(e_T)), rank_(rank) {}

  AlgebraPtr base_;
  AlgebraElement gamma_;
  TwistedPoly e_T_;
  unsigned rank_;
};

struct RankCheck {
  bool ok = true;
  std::optional<APoly> witness;
  std::string reason;
};

/// Checks the rank formula on a, in {T, T+1, T^2, least irreducible
/// quadratic}: the tau^{d deg a} coefficient of e_a is a unit, everything
/// above it is nilpotent, and the constant term is gamma(a).
RankCheck rank_check(const DrinfeldModule& E);

struct Standardization {
  DrinfeldModule module;
  /// Isomorphism with u * e_T * u^{-1} = e_T of the standard module.
  TwistedPoly u;
};

Standardization standardize(const DrinfeldModule& E);

struct CharacteristicInfo {
  /// Monic irreducible with gamma(pi) not a unit, if one exists within the bound.
  std::optional<APoly> pi;
  unsigned searched_degree = 0;
  bool general_within_bound() const { return !pi.has_value(); }
};

CharacteristicInfo characteristic_of(const DrinfeldModule& E, unsigned max_degree = 4);

/// Height at the characteristic pi over a field base: (index of the first
/// unit coefficient of e_pi) / deg pi. Throws NotCharacteristic otherwise.
unsigned height_of(const DrinfeldModule& E, const APoly& pi);

}  // namespace drinfeld
