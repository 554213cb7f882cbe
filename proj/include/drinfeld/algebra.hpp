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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/ground_field.hpp"

namespace drinfeld {

/// Default cap on the number of elements any enumeration may touch.
inline constexpr std::uint64_t kDefaultMaxCard = std::uint64_t{1} << 16;

/// Largest supported F_q-dimension m*k of a base algebra.
inline constexpr std::size_t kMaxDim = 32;

class ArtinLocalAlgebra;
using AlgebraPtr = std::shared_ptr<const ArtinLocalAlgebra>;

/**
 * Element of B = l[Y]/(Y^k), l = F_{q^m}, stored as its coordinates over F_q
 * in the basis w^i Y^j (coordinate index i + m*j).
 *
 * Elements carry a raw pointer to their algebra; the algebra must outlive
 * them. Modules and problems keep the owning AlgebraPtr.
 */
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(const ArtinLocalAlgebra* alg) : alg_(alg) {}

  const ArtinLocalAlgebra* algebra() const { return alg_; }
  std::size_t dim() const;
  Scalar operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }

  bool is_zero() const;
  bool is_unit() const;
  bool is_nilpotent() const { return !is_unit(); }
  /// Largest j with x in (Y^j); k for zero.
  unsigned order() const;

  /// Position in enumeration order: sum of coordinate_i * q^i.
  std::uint64_t index() const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

  AlgebraElement scaled(Scalar c) const;
  AlgebraElement pow(std::uint64_t n) const;
  /// Throws NotAUnit for non-units.
  AlgebraElement inv() const;
  /// x^{q^j}.
  AlgebraElement frobenius(unsigned j = 1) const;

  bool operator==(const AlgebraElement& o) const;
  /// Enumeration order (compares index()).
  std::strong_ordering operator<=>(const AlgebraElement& o) const;

  std::string to_string() const;
  /// Flat list of F_p digits: coordinate-major, s digits per coordinate.
  std::vector<unsigned> fp_coordinates() const;

 private:
  const ArtinLocalAlgebra* alg_ = nullptr;
  std::array<Scalar, kMaxDim> c_{};
};

/**
 * The finite local F_q-algebra B = l[Y]/(Y^k), l = F_q[w]/(f), with f the
 * least monic irreducible of degree m over F_q. k = 1 is the field l.
 */
class ArtinLocalAlgebra {
 public:
  static AlgebraPtr make(GroundFieldPtr ground, unsigned m, unsigned k,
                         std::uint64_t max_card = kDefaultMaxCard);

  const GroundField& ground() const { return *ground_; }
  const GroundFieldPtr& ground_ptr() const { return ground_; }
  unsigned q() const { return ground_->q(); }
  unsigned m() const { return m_; }
  unsigned k() const { return k_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_) * k_; }
  std::uint64_t cardinality() const { return cardinality_; }
  std::uint64_t max_card() const { return max_card_; }
  bool is_field() const { return k_ == 1; }
  /// Monic modulus of l over F_q, low degree first (length m + 1).
  const ScalarPoly& residue_modulus() const { return modulus_; }

  AlgebraElement zero() const { return AlgebraElement(this); }
  AlgebraElement one() const { return scalar(1); }
  AlgebraElement scalar(Scalar c) const;
  /// w^i Y^j.
  AlgebraElement basis(std::size_t index) const;
  /// The generator w of l (equal to 1 when m = 1).
  AlgebraElement omega() const;
  /// The nilpotent generator Y (zero when k = 1).
  AlgebraElement nil_generator() const;
  AlgebraElement from_coordinates(const std::vector<Scalar>& coords) const;
  AlgebraElement from_index(std::uint64_t index) const;
  /// Inverse of AlgebraElement::fp_coordinates.
  AlgebraElement from_fp_coordinates(const std::vector<unsigned>& digits) const;

  /**
   * Parses an expression over the generators w (of l), Y (nilpotent) and
   * z (of F_q over F_p): integers, + - * ^ and parentheses, e.g. "1+w*Y^2".
   */
  AlgebraElement parse(std::string_view text) const;

  /// Every element once, in index order. Throws BoundExceeded past max_card.
  std::vector<AlgebraElement> enumerate_elements() const;

  /// Elements of the maximal ideal (Y), in index order.
  std::vector<AlgebraElement> maximal_ideal() const;

  bool same_as(const ArtinLocalAlgebra& o) const {
    return *ground_ == *o.ground_ && m_ == o.m_ && k_ == o.k_;
  }

  std::string describe() const;

 private:
  friend class AlgebraElement;
  ArtinLocalAlgebra(GroundFieldPtr ground, unsigned m, unsigned k, std::uint64_t max_card);

  void mul_residue(const Scalar* a, const Scalar* b, Scalar* out) const;

  GroundFieldPtr ground_;
  unsigned m_;
  unsigned k_;
  std::uint64_t cardinality_;
  std::uint64_t max_card_;
  ScalarPoly modulus_;
  // w^{m+t} reduced, t = 0 .. m-2, each of length m.
  std::vector<std::vector<Scalar>> reduction_;
};

/// Matrix over F_q of an F_q-linear map between (or on) finite algebras.
/// Columns are images of the canonical basis vectors of the source.
class FqLinearMap {
 public:
  FqLinearMap(const ArtinLocalAlgebra* source, const ArtinLocalAlgebra* target);

  static FqLinearMap identity(const ArtinLocalAlgebra* alg);
  static FqLinearMap zero(const ArtinLocalAlgebra* alg) { return FqLinearMap(alg, alg); }

  const ArtinLocalAlgebra* source() const { return source_; }
  const ArtinLocalAlgebra* target() const { return target_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  void set_column(std::size_t c, const AlgebraElement& image);

  AlgebraElement apply(const AlgebraElement& x) const;
  /// Composition: (this * other)(x) = this(other(x)).
  FqLinearMap operator*(const FqLinearMap& other) const;
  bool operator==(const FqLinearMap& other) const;

  /// Basis of the kernel from reduced row echelon form.
  std::vector<AlgebraElement> kernel_basis() const;
  std::size_t rank() const;

 private:
  const ArtinLocalAlgebra* source_;
  const ArtinLocalAlgebra* target_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> a_;
};

/// All F_q-combinations of the given vectors, sorted in enumeration order.
/// Throws BoundExceeded if q^n exceeds the algebra's max_card.
std::vector<AlgebraElement> span_elements(const ArtinLocalAlgebra& alg,
                                          const std::vector<AlgebraElement>& basis);

/// Every element of the kernel of f, sorted in enumeration order.
std::vector<AlgebraElement> linear_kernel(const FqLinearMap& f);

/// An F_q-algebra homomorphism between base algebras, stored by the images
/// of the canonical basis. Keeps both algebras alive.
class RingHom {
 public:
  RingHom(AlgebraPtr source, AlgebraPtr target, FqLinearMap matrix);

  static RingHom identity(const AlgebraPtr& alg);
  /// B = l[Y]/(Y^k) -> l, Y -> 0.
  static RingHom reduction(const AlgebraPtr& alg);
  /// l[Y]/(Y^k) -> l'[Y]/(Y^k) with l' = F_{q^{m*factor}}; w is sent to the
  /// least root (in enumeration order) of the modulus of l.
  static RingHom extension(const AlgebraPtr& alg, unsigned factor, std::uint64_t max_card);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  AlgebraElement operator()(const AlgebraElement& x) const { return matrix_.apply(x); }

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  FqLinearMap matrix_;
};

}  // namespace drinfeld
