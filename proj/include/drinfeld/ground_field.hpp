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
#include <memory>
#include <vector>

namespace drinfeld {

/// An element of F_q, encoded as the integer whose base-p digits are its
/// coordinates over F_p in the basis 1, z, ..., z^{s-1}.
using Scalar = std::uint8_t;

/// Dense polynomial over F_q, low degree first. The zero polynomial is empty.
using ScalarPoly = std::vector<Scalar>;

/**
 * The finite field F_q, q = p^s, realised as F_p[z]/(modulus) where the
 * modulus is the lexicographically least monic irreducible of degree s.
 *
 * All arithmetic goes through precomputed tables, so q is capped at 256.
 */
class GroundField {
 public:
  static std::shared_ptr<const GroundField> make(unsigned p, unsigned s = 1);

  unsigned p() const { return p_; }
  unsigned s() const { return s_; }
  unsigned q() const { return q_; }
  /// Monic modulus over F_p, low degree first (length s + 1).
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Scalar add(Scalar a, Scalar b) const { return add_[a * q_ + b]; }
  Scalar sub(Scalar a, Scalar b) const { return add_[a * q_ + neg_[b]]; }
  Scalar mul(Scalar a, Scalar b) const { return mul_[a * q_ + b]; }
  Scalar neg(Scalar a) const { return neg_[a]; }
  /// Requires a != 0.
  Scalar inv(Scalar a) const;

  /// F_p coordinates of a scalar (length s).
  std::vector<unsigned> digits(Scalar a) const;
  Scalar from_digits(const std::vector<unsigned>& digits) const;

  bool operator==(const GroundField& other) const { return p_ == other.p_ && s_ == other.s_; }

 private:
  GroundField(unsigned p, unsigned s, std::vector<unsigned> modulus);

  unsigned p_;
  unsigned s_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<Scalar> add_;
  std::vector<Scalar> mul_;
  std::vector<Scalar> neg_;
  std::vector<Scalar> inv_;
};

using GroundFieldPtr = std::shared_ptr<const GroundField>;

bool is_prime(unsigned n);

// Polynomial helpers over F_q.
namespace poly {

void trim(ScalarPoly& f);
int degree(const ScalarPoly& f);
ScalarPoly add(const GroundField& F, const ScalarPoly& f, const ScalarPoly& g);
ScalarPoly sub(const GroundField& F, const ScalarPoly& f, const ScalarPoly& g);
ScalarPoly mul(const GroundField& F, const ScalarPoly& f, const ScalarPoly& g);
/// Returns (quotient, remainder); g must be nonzero.
std::pair<ScalarPoly, ScalarPoly> divmod(const GroundField& F, const ScalarPoly& f, const ScalarPoly& g);
ScalarPoly make_monic(const GroundField& F, const ScalarPoly& f);

/// Monic polynomials of exact degree n in colex order of their coefficient
/// vector (leading 1 fixed), i.e. lexicographic from the top coefficient down.
std::vector<ScalarPoly> monic_of_degree(const GroundField& F, unsigned n);

/// Trial division by every monic polynomial of degree <= deg(f)/2.
bool is_irreducible(const GroundField& F, const ScalarPoly& f);

/// Least monic irreducible of degree n in the order of monic_of_degree.
ScalarPoly least_irreducible(const GroundField& F, unsigned n);

}  // namespace poly

}  // namespace drinfeld
