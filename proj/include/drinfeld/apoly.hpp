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
#include <string_view>
#include <utility>
#include <vector>

#include "drinfeld/algebra.hpp"
#include "drinfeld/ground_field.hpp"

namespace drinfeld {

/// An element of A = F_q[T].
class APoly {
 public:
  APoly() = default;
  explicit APoly(GroundFieldPtr field) : field_(std::move(field)) {}
  APoly(GroundFieldPtr field, ScalarPoly coeffs);

  static APoly constant(GroundFieldPtr field, Scalar c);
  /// T^n.
  static APoly monomial(GroundFieldPtr field, unsigned n);
  /// Parses a polynomial in T, e.g. "T^2+T+1" or "T + 2"; coefficients are
  /// integers mod p, or z (generator of F_q) when s > 1.
  static APoly parse(GroundFieldPtr field, std::string_view text);

  const GroundFieldPtr& field() const { return field_; }
  const ScalarPoly& coeffs() const { return c_; }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  int degree() const { return poly::degree(c_); }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_irreducible() const { return poly::is_irreducible(*field_, c_); }

  APoly operator+(const APoly& o) const { return {field_, poly::add(*field_, c_, o.c_)}; }
  APoly operator-(const APoly& o) const { return {field_, poly::sub(*field_, c_, o.c_)}; }
  APoly operator*(const APoly& o) const { return {field_, poly::mul(*field_, c_, o.c_)}; }
  APoly operator%(const APoly& o) const { return {field_, poly::divmod(*field_, c_, o.c_).second}; }
  APoly operator/(const APoly& o) const { return {field_, poly::divmod(*field_, c_, o.c_).first}; }
  APoly pow(unsigned n) const;
  bool divides(const APoly& o) const { return (o % *this).is_zero(); }

  bool operator==(const APoly& o) const { return c_ == o.c_; }
  bool operator<(const APoly& o) const;

  /// a(x) for x in an algebra over the same F_q.
  AlgebraElement evaluate(const AlgebraElement& x) const;

  /// Monic irreducible factors with multiplicity, sorted by (degree, colex).
  std::vector<std::pair<APoly, unsigned>> factor() const;

  std::string to_string() const;

 private:
  GroundFieldPtr field_;
  ScalarPoly c_;
};

/// Monic irreducibles of A of the given degree, in colex order.
std::vector<APoly> monic_irreducibles(const GroundFieldPtr& field, unsigned degree);

/// All polynomials of degree < n (coset representatives of A/(a), deg a = n),
/// in colex order of their coefficients.
std::vector<APoly> residues_below(const GroundFieldPtr& field, unsigned n);

}  // namespace drinfeld
