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

#include "drinfeld/torsion.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

DivisionPolynomial division_poly(const DrinfeldModule& E, const APoly& a) {
  if (a.is_zero()) throw InvalidArgument("division polynomial of the zero ideal");
  const TwistedPoly e_a = E.e_of(a);
  if (!e_a.leading().is_unit())
    throw NotAUnit("e_a has a nilpotent leading coefficient; standardize the module first");
  return {a, e_a.normalize()};
}

bool TorsionSet::contains(const AlgebraElement& x) const { return std::binary_search(points.begin(), points.end(), x); }

TorsionSet torsion_points(const DrinfeldModule& E, const APoly& a) {
  return {E.base(), linear_kernel(E.e_of(a).as_linear_map())};
}

TorsionSet torsion_points(const DrinfeldModule& E, const APoly& a, const RingHom& to) {
  const TwistedPoly e_a = E.e_of(a).base_change(to);
  return {to.target(), linear_kernel(e_a.as_linear_map())};
}

unsigned log_q(std::uint64_t n, unsigned q) {
  unsigned e = 0;
  while (n > 1) {
    if (n % q != 0) throw Error("internal error: " + std::to_string(n) + " is not a power of " + std::to_string(q));
    n /= q;
    ++e;
  }
  return e;
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

unsigned valuation(const APoly& pi, APoly a) {
  unsigned v = 0;
  while (!a.is_zero() && pi.divides(a)) {
    a = a / pi;
    ++v;
  }
  return v;
}

}  // namespace

std::uint64_t separable_count(const DrinfeldModule& E, const APoly& a) {
  if (!E.base()->is_field()) throw InvalidArgument("separable count is defined for field bases");
  const unsigned q = E.base()->q();
  unsigned exponent = E.rank() * static_cast<unsigned>(a.degree());
  const auto chr = characteristic_of(E);
  if (chr.pi) {
    const unsigned v = valuation(*chr.pi, a);
    if (v > 0) exponent -= height_of(E, *chr.pi) * static_cast<unsigned>(chr.pi->degree()) * v;
  }
  return ipow(q, exponent);
}

SplittingExtension splitting_extension(const DrinfeldModule& E, const APoly& a, unsigned degree_bound,
                                       std::uint64_t max_card) {
  const std::uint64_t expected = separable_count(E, a);
  std::uint64_t best = 0;
  for (unsigned factor = 1; factor <= degree_bound; ++factor) {
    std::optional<RingHom> hom;
    try {
      hom = RingHom::extension(E.base(), factor, max_card);
    } catch (const BoundExceeded&) {
      break;
    }
    const auto pts = torsion_points(E, a, *hom);
    best = std::max<std::uint64_t>(best, pts.size());
    if (pts.size() == expected) return {*hom, factor, pts.size()};
  }
  throw BoundExceeded("no splitting extension for " + a.to_string() + " within degree bound " +
                      std::to_string(degree_bound) + " and cardinality " + std::to_string(max_card) +
                      "; best count " + std::to_string(best) + " of " + std::to_string(expected));
}

std::optional<unsigned> ModuleStructure::free_rank(unsigned n) const {
  for (auto e : exponents)
    if (e != n) return std::nullopt;
  return static_cast<unsigned>(exponents.size());
}

std::string ModuleStructure::describe() const {
  if (exponents.empty()) return "trivial";
  std::ostringstream os;
  const std::string p = pi.to_string();
  const bool wrap = p.find(' ') != std::string::npos;
  std::size_t i = 0;
  bool first = true;
  while (i < exponents.size()) {
    std::size_t j = i;
    while (j < exponents.size() && exponents[j] == exponents[i]) ++j;
    if (!first) os << " + ";
    first = false;
    os << "(A/";
    const std::string base = wrap ? "(" + p + ")" : p;
    os << base;
    if (exponents[i] > 1) os << "^" << exponents[i];
    os << ")^" << (j - i);
    i = j;
  }
  return os.str();
}

ModuleStructureReport module_structure(const DrinfeldModule& E, const APoly& pi, unsigned n, const RingHom& to) {
  if (!E.base()->is_field()) throw InvalidArgument("module structure is computed over field bases");
  if (!pi.is_irreducible() || !pi.is_monic()) throw InvalidArgument(pi.to_string() + " is not a monic irreducible");
  if (n == 0) throw InvalidArgument("exponent must be >= 1");
  const unsigned q = E.base()->q();
  const auto deg = static_cast<unsigned>(pi.degree());

  ModuleStructureReport rep;
  rep.n = n;
  rep.structure.pi = pi;
  rep.at_characteristic = pi.evaluate(E.gamma()).is_zero();
  rep.height = rep.at_characteristic ? height_of(E, pi) : 0;
  rep.expected_rank = E.rank() - rep.height;

  // r[j] = sum_i min(n_i, j).
  std::vector<unsigned> r(n + 2, 0);
  for (unsigned j = 1; j <= n; ++j) {
    const auto pts = torsion_points(E, pi.pow(j), to);
    rep.filtration_counts.push_back(pts.size());
    const unsigned e = log_q(pts.size(), q);
    if (e % deg != 0) throw Error("internal error: torsion size not a power of q^deg(pi)");
    r[j] = e / deg;
  }
  const std::uint64_t expected = separable_count(E, pi.pow(n));
  if (rep.filtration_counts.back() < expected)
    throw BoundExceeded("extension too small: " + std::to_string(rep.filtration_counts.back()) + " of " +
                        std::to_string(expected) + " points of E[" + pi.to_string() + "^" + std::to_string(n) + "]");
  r[n + 1] = r[n];
  for (unsigned j = n; j >= 1; --j) {
    const unsigned at_least_j = r[j] - r[j - 1];
    const unsigned at_least_next = r[j + 1] - r[j];
    for (unsigned t = 0; t < at_least_j - at_least_next; ++t) rep.structure.exponents.push_back(j);
  }
  const auto fr = rep.structure.free_rank(n);
  rep.matches_prediction = fr.has_value() && *fr == rep.expected_rank;
  return rep;
}

PropertyReport property_checks(const DrinfeldModule& E, const APoly& a, const APoly& b, const RingHom& to) {
  PropertyReport rep;
  // Euclid.
  APoly x = a, y = b;
  while (!y.is_zero()) {
    APoly r = x % y;
    x = y;
    y = r;
  }
  if (x.degree() != 0) throw InvalidArgument(a.to_string() + " and " + b.to_string() + " are not coprime");

  const APoly ab = a * b;
  for (const APoly* c : {&a, &b, &ab}) {
    const auto h = division_poly(E, *c);
    const auto want = static_cast<int>(E.rank()) * c->degree();
    if (h.h.degree() != want) {
      rep.degree_ok = false;
      rep.failures.push_back("deg h_" + c->to_string() + " = q^" + std::to_string(h.h.degree()) + ", expected q^" +
                             std::to_string(want));
    }
    if (h.h.is_separable() != c->evaluate(E.gamma()).is_unit()) {
      rep.etale_ok = false;
      rep.failures.push_back("separability of h_" + c->to_string() + " disagrees with gamma being a unit");
    }
    std::vector<RingHom> maps = {to};
    if (!E.base()->is_field()) maps.push_back(RingHom::reduction(E.base()));
    for (const auto& hom : maps) {
      const auto lhs = h.h.base_change(hom);
      const auto rhs = division_poly(E.base_change(hom), *c).h;
      if (!(lhs == rhs)) {
        rep.base_change_ok = false;
        rep.failures.push_back("h_" + c->to_string() + " does not commute with base change to " +
                               hom.target()->describe());
      }
    }
  }

  const auto Ea = torsion_points(E, a, to);
  const auto Eb = torsion_points(E, b, to);
  const auto Eab = torsion_points(E, ab, to);
  rep.count_a = Ea.size();
  rep.count_b = Eb.size();
  rep.count_ab = Eab.size();
  std::set<AlgebraElement> sums;
  for (const auto& u : Ea.points)
    for (const auto& v : Eb.points) sums.insert(u + v);
  const bool bijective = sums.size() == Ea.size() * Eb.size() && sums.size() == Eab.size() &&
                         std::equal(sums.begin(), sums.end(), Eab.points.begin());
  if (!bijective) {
    rep.coprime_split_ok = false;
    rep.failures.push_back("E[a] x E[b] -> E[ab] is not a bijection (" + std::to_string(Ea.size()) + " * " +
                           std::to_string(Eb.size()) + " vs " + std::to_string(Eab.size()) + ")");
  }
  return rep;
}

}  // namespace drinfeld
