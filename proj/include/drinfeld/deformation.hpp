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

#include <cstddef>
#include <vector>

#include "drinfeld/level.hpp"

namespace drinfeld {

/**
 * Deformations of a standard module E0 over a field l to B = l[Y]/(Y^k),
 * with the image of T in B fixed to gamma_lift (a lift of gamma_0(T)).
 */
class DeformationProblem {
 public:
  DeformationProblem(DrinfeldModule E0, AlgebraPtr B, const AlgebraElement& gamma_lift);

  const DrinfeldModule& special_fiber() const { return E0_; }
  const AlgebraPtr& base() const { return B_; }
  const AlgebraElement& gamma_lift() const { return gamma_lift_; }
  const RingHom& reduction() const { return reduction_; }

  /// The section l -> B placing coordinates in the Y^0 block.
  AlgebraElement lift(const AlgebraElement& x) const;

 private:
  DrinfeldModule E0_;
  AlgebraPtr B_;
  AlgebraElement gamma_lift_;
  RingHom reduction_;
};

/// Standard deformations gamma_lift + sum c_i tau^i with c_i lifting the
/// coefficients of E0; |m_B|^d of them, in lexicographic order.
std::vector<DrinfeldModule> enumerate_deformations(const DeformationProblem& P);

/// How orbits under isomorphisms reducing to the identity are found.
///   Generators: closure under u = 1 + n tau^i, n in m_B, i <= bound.
///   BruteForce: every u = u_0 + sum n_i tau^i with u_0 = 1 mod m_B.
enum class OrbitMethod { Generators, BruteForce };

struct DeformationClass {
  /// Least member in enumeration order.
  DrinfeldModule representative;
  /// Indices into enumerate_deformations(P).
  std::vector<std::size_t> members;
};

std::vector<DeformationClass> deformation_classes(const DeformationProblem& P, unsigned iso_degree,
                                                  OrbitMethod method = OrbitMethod::Generators);

/// Conjugate u e u^{-1} of e_T.
TwistedPoly conjugate(const TwistedPoly& e, const TwistedPoly& u);

struct LevelLift {
  std::size_t deformation;  // index into enumerate_deformations(P)
  LevelStructureCandidate structure;

  bool operator==(const LevelLift& o) const { return deformation == o.deformation && structure == o.structure; }
};

struct LevelLiftClasses {
  std::vector<LevelLift> pairs;
  std::size_t classes = 0;
  /// Transports (u e u^{-1}, u(y)) that left the enumerated set; 0 expected.
  std::size_t transport_misses = 0;
};

/**
 * Pairs (E, iota) with E a deformation and iota a level structure for (a)
 * of the given mode whose images reduce to those of iota0, and the number
 * of classes under isomorphisms reducing to the identity.
 */
LevelLiftClasses level_deformation_classes(const DeformationProblem& P, const APoly& a,
                                           const LevelStructureCandidate& iota0, LevelMode mode,
                                           unsigned iso_degree);

struct QuotientIsogeny {
  DrinfeldModule target;
  TwistedPoly kernel;  // h
  TwistedPoly f_T;     // e'_T with h e_T = e'_T h
  bool kernel_separable = false;
  /// h e_a == e'_a h for a in {T, T+1, T^2}.
  bool identities_hold = false;
  bool gamma_preserved = false;
};

/// E -> E / ker(h) for h a division polynomial of E. Throws
/// KernelNotStable if h e_T is not right-divisible by h.
QuotientIsogeny quotient_isogeny(const DrinfeldModule& E, const DivisionPolynomial& h);

}  // namespace drinfeld
