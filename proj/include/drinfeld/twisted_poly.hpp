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

#include <string>
#include <utility>
#include <vector>

#include "drinfeld/algebra.hpp"

namespace drinfeld {

/// Largest X-degree q^n a twisted polynomial may reach, as log2.
inline constexpr unsigned kMaxXDegreeLog2 = 20;

/**
 * Element of the twisted polynomial ring B{tau}, tau * b = b^q * tau.
 *
 * The same coefficient list is read two ways: as sum c_i tau^i, and as the
 * additive polynomial sum c_i X^{q^i}. Products in B{tau} are compositions
 * of the additive polynomials: (f * g)(x) = f(g(x)).
 */
class TwistedPoly {
 public:
  TwistedPoly() = default;
  explicit TwistedPoly(AlgebraPtr base) : base_(std::move(base)) {}
  TwistedPoly(AlgebraPtr base, std::vector<AlgebraElement> coeffs);

  static TwistedPoly constant(AlgebraPtr base, const AlgebraElement& c);
  static TwistedPoly one(AlgebraPtr base);
  /// c * tau^i.
  static TwistedPoly monomial(AlgebraPtr base, const AlgebraElement& c, unsigned i);

  const AlgebraPtr& base() const { return base_; }
  /// Degree in tau; -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<AlgebraElement>& coeffs() const { return coeffs_; }
  /// Coefficient of tau^i (zero past the degree).
  AlgebraElement coeff(std::size_t i) const;
  AlgebraElement leading() const;

  TwistedPoly operator+(const TwistedPoly& o) const;
  TwistedPoly operator-(const TwistedPoly& o) const;
  TwistedPoly operator-() const;
  /// Twisted product; throws BoundExceeded past the X-degree cap.
  TwistedPoly operator*(const TwistedPoly& o) const;
  /// Left scalar multiple c * f.
  TwistedPoly scaled(const AlgebraElement& c) const;

  bool operator==(const TwistedPoly& o) const;

  /// sum c_i x^{q^i}, x in the same algebra.
  AlgebraElement eval(const AlgebraElement& x) const;

  /// Matrix of x -> f(x) on the base algebra.
  FqLinearMap as_linear_map() const;

  /// Coefficients pushed through a ring homomorphism.
  TwistedPoly base_change(const RingHom& hom) const;

  /// f = g * h + r with deg r < deg h. The leading coefficient of h must be a
  /// unit.
  std::pair<TwistedPoly, TwistedPoly> right_divide(const TwistedPoly& h) const;

  /// lc^{-1} * f. Requires a unit leading coefficient.
  TwistedPoly normalize() const;
  bool is_monic() const;
  /// The X-coefficient (formal derivative) is a unit.
  bool is_separable() const;

  /// Inverse in B{tau} of an element with unit constant term and nilpotent
  /// higher coefficients.
  TwistedPoly inverse() const;

  /// Human readable X-form, e.g. "w*X + X^4".
  std::string to_x_string() const;

 private:
  void trim();
  void check_same_base(const TwistedPoly& o) const;

  AlgebraPtr base_;
  std::vector<AlgebraElement> coeffs_;
};

}  // namespace drinfeld
