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

#include "drinfeld/level.hpp"

#include <algorithm>

#include "drinfeld/errors.hpp"

namespace drinfeld {

const char* to_string(LevelMode mode) { return mode == LevelMode::A ? "A" : "B"; }

TwistedPoly divisor_product(const AlgebraPtr& base, const std::vector<AlgebraElement>& images) {
  const unsigned q = base->q();
  TwistedPoly P = TwistedPoly::monomial(base, base->one(), 0);
  for (const auto& v : images) {
    const AlgebraElement u = P.eval(v).pow(q - 1);
    const TwistedPoly step = TwistedPoly::monomial(base, base->one(), 1) - TwistedPoly::constant(base, u);
    P = step * P;
  }
  return P;
}

namespace {

DivisorReport compare(const APoly& ideal, const TwistedPoly& h, TwistedPoly product) {
  DivisorReport rep{ideal, h, std::move(product), false, std::nullopt};
  rep.equal = rep.lhs == rep.rhs;
  if (!rep.equal) {
    const std::size_t n = std::max(rep.lhs.coeffs().size(), rep.rhs.coeffs().size());
    std::uint64_t exp = 1;
    for (std::size_t i = 0; i < n; ++i, exp *= h.base()->q()) {
      if (!(rep.lhs.coeff(i) == rep.rhs.coeff(i))) {
        rep.first_mismatch = exp;
        break;
      }
    }
  }
  return rep;
}

}  // namespace

LevelProblem::LevelProblem(DrinfeldModule E, APoly a) : E_(std::move(E)), a_(std::move(a)) {
  if (a_.degree() < 1 || !a_.is_monic()) throw InvalidArgument("level ideal needs a monic nonconstant generator");
  factors_ = a_.factor();
  h_a_ = division_poly(E_, a_).h;
  e_T_ = E_.e_T();
  for (const auto& [pi, n] : factors_) {
    const APoly cofactor = a_ / pi;
    primes_.push_back({pi, cofactor, E_.e_of(cofactor), division_poly(E_, pi).h});
  }
  torsion_ = torsion_points(E_, a_);
}

bool LevelProblem::is_well_defined(const LevelStructureCandidate& c) const {
  if (c.basis_images.size() != E_.rank()) return false;
  for (const auto& y : c.basis_images)
    if (!h_a_.eval(y).is_zero()) return false;
  return true;
}

AlgebraElement LevelProblem::iota_eval(const LevelStructureCandidate& c, const std::vector<APoly>& x) const {
  if (x.size() != c.basis_images.size()) throw InvalidArgument("iota expects one A/(a) component per generator");
  AlgebraElement acc = E_.base()->zero();
  for (std::size_t j = 0; j < x.size(); ++j) acc += E_.e_of(x[j] % a_).eval(c.basis_images[j]);
  return acc;
}

std::vector<AlgebraElement> LevelProblem::tower(const AlgebraElement& y, std::size_t deg) const {
  std::vector<AlgebraElement> out;
  out.reserve(deg);
  AlgebraElement cur = y;
  for (std::size_t i = 0; i < deg; ++i) {
    if (i > 0) cur = e_T_.eval(cur);
    out.push_back(cur);
  }
  return out;
}

DivisorReport LevelProblem::check_def_B(const LevelStructureCandidate& c) const {
  if (!is_well_defined(c)) throw InvalidArgument("candidate images are not a-torsion");
  std::vector<AlgebraElement> images;
  for (const auto& y : c.basis_images) {
    auto t = tower(y, static_cast<std::size_t>(a_.degree()));
    images.insert(images.end(), t.begin(), t.end());
  }
  return compare(a_, h_a_, divisor_product(E_.base(), images));
}

std::vector<DivisorReport> LevelProblem::check_def_A(const LevelStructureCandidate& c) const {
  if (!is_well_defined(c)) throw InvalidArgument("candidate images are not a-torsion");
  std::vector<DivisorReport> out;
  for (const auto& p : primes_) {
    std::vector<AlgebraElement> images;
    for (const auto& y : c.basis_images) {
      auto t = tower(p.e_cofactor.eval(y), static_cast<std::size_t>(p.pi.degree()));
      images.insert(images.end(), t.begin(), t.end());
    }
    out.push_back(compare(p.pi, p.h_pi, divisor_product(E_.base(), images)));
  }
  return out;
}

bool LevelProblem::satisfies(const LevelStructureCandidate& c, LevelMode mode) const {
  if (mode == LevelMode::B) return check_def_B(c).equal;
  for (const auto& r : check_def_A(c))
    if (!r.equal) return false;
  return true;
}

bool LevelProblem::matches(const TwistedPoly& h, const std::vector<AlgebraElement>& images) const {
  return divisor_product(E_.base(), images) == h;
}

std::vector<LevelStructureCandidate> LevelProblem::enumerate(LevelMode mode) const {
  const std::size_t d = E_.rank();
  const auto& pts = torsion_.points;
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < d; ++j) {
    total *= pts.size();
    if (total > E_.base()->max_card())
      throw BoundExceeded("|E[a](B)|^d = " + std::to_string(pts.size()) + "^" + std::to_string(d) +
                          " exceeds the enumeration bound");
  }

  // Per-point image towers, shared by every tuple.
  std::vector<std::vector<std::vector<AlgebraElement>>> towers;  // [check][point] -> images
  std::vector<const TwistedPoly*> targets;
  if (mode == LevelMode::B) {
    auto& t = towers.emplace_back();
    for (const auto& y : pts) t.push_back(tower(y, static_cast<std::size_t>(a_.degree())));
    targets.push_back(&h_a_);
  } else {
    for (const auto& p : primes_) {
      auto& t = towers.emplace_back();
      for (const auto& y : pts) t.push_back(tower(p.e_cofactor.eval(y), static_cast<std::size_t>(p.pi.degree())));
      targets.push_back(&p.h_pi);
    }
  }

  std::vector<LevelStructureCandidate> out;
  std::vector<std::size_t> idx(d, 0);
  std::vector<AlgebraElement> images;
  for (std::uint64_t n = 0; n < total; ++n) {
    bool ok = true;
    for (std::size_t check = 0; check < towers.size() && ok; ++check) {
      images.clear();
      for (std::size_t j = 0; j < d; ++j) {
        const auto& t = towers[check][idx[j]];
        images.insert(images.end(), t.begin(), t.end());
      }
      ok = matches(*targets[check], images);
    }
    if (ok) {
      LevelStructureCandidate c;
      for (std::size_t j = 0; j < d; ++j) c.basis_images.push_back(pts[idx[j]]);
      out.push_back(std::move(c));
    }
    // Odometer, last coordinate fastest.
    for (std::size_t j = d; j-- > 0;) {
      if (++idx[j] < pts.size()) break;
      idx[j] = 0;
    }
  }
  return out;
}

std::uint64_t set_hash(const std::vector<LevelStructureCandidate>& set) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(set.size());
  for (const auto& c : set) {
    mix(c.basis_images.size());
    for (const auto& y : c.basis_images) mix(y.index());
  }
  return h;
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

std::uint64_t predicted_level_count(const DrinfeldModule& E, const APoly& a) {
  if (!E.base()->is_field()) throw InvalidArgument("the counting route applies to field bases");
  const unsigned q = E.base()->q();
  const unsigned d = E.rank();
  const RingHom id = RingHom::identity(E.base());
  std::uint64_t total = 1;
  for (const auto& [pi, n] : a.factor()) {
    const bool at_char = pi.evaluate(E.gamma()).is_zero();
    const unsigned r = at_char ? d - height_of(E, pi) : d;
    const std::uint64_t Q = ipow(q, static_cast<unsigned>(pi.degree()));
    // Sizes of E[pi^j](B), j = 1..n; free of rank r at exponent n iff every
    // step multiplies the count by exactly Q^r.
    bool free = true;
    std::uint64_t prev = 1;
    for (unsigned j = 1; j <= n && free; ++j) {
      const std::uint64_t cnt = torsion_points(E, pi.pow(j), id).size();
      free = cnt == prev * ipow(Q, r);
      prev = cnt;
    }
    if (!free) return 0;
    std::uint64_t c = ipow(Q, (n - 1) * r * d);
    for (unsigned i = 0; i < r; ++i) c *= ipow(Q, d) - ipow(Q, i);
    total *= c;
  }
  return total;
}

EquivalenceReport equivalence_report(const DrinfeldModule& E, const APoly& a) {
  const LevelProblem problem(E, a);
  EquivalenceReport rep;
  rep.ideal = a;
  rep.prime_ideal = problem.is_prime_ideal();
  rep.torsion_count = problem.torsion().size();
  rep.candidates = 1;
  for (unsigned j = 0; j < E.rank(); ++j) rep.candidates *= rep.torsion_count;
  rep.set_a = problem.enumerate(LevelMode::A);
  rep.set_b = problem.enumerate(LevelMode::B);
  rep.sets_equal = rep.set_a == rep.set_b;
  rep.hash_a = set_hash(rep.set_a);
  rep.hash_b = set_hash(rep.set_b);

  rep.a_implies_b = true;
  for (const auto& c : rep.set_a) {
    if (!problem.check_def_B(c).equal) {
      rep.a_implies_b = false;
      if (!rep.witness) {
        rep.witness = c;
        rep.witness_side = "A but not B";
      }
    }
  }
  if (!rep.sets_equal && !rep.witness) {
    std::vector<LevelStructureCandidate> only_a, only_b;
    std::set_difference(rep.set_a.begin(), rep.set_a.end(), rep.set_b.begin(), rep.set_b.end(),
                        std::back_inserter(only_a));
    std::set_difference(rep.set_b.begin(), rep.set_b.end(), rep.set_a.begin(), rep.set_a.end(),
                        std::back_inserter(only_b));
    if (!only_a.empty() && (only_b.empty() || only_a.front() < only_b.front())) {
      rep.witness = only_a.front();
      rep.witness_side = "A but not B";
    } else if (!only_b.empty()) {
      rep.witness = only_b.front();
      rep.witness_side = "B but not A";
    }
  }

  if (E.base()->is_field()) {
    rep.predicted_count = predicted_level_count(E, a);
    rep.count_matches = *rep.predicted_count == rep.set_a.size() && *rep.predicted_count == rep.set_b.size();
  }
  return rep;
}

}  // namespace drinfeld
