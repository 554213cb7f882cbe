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

#include "drinfeld/drinfeld_module.hpp"

#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

TwistedPoly assemble(const AlgebraPtr& base, const AlgebraElement& gamma, std::vector<AlgebraElement> coeffs) {
  coeffs.insert(coeffs.begin(), gamma);
  return TwistedPoly(base, std::move(coeffs));
}

}  // namespace

DrinfeldModule DrinfeldModule::make(AlgebraPtr base, const AlgebraElement& gamma, std::vector<AlgebraElement> coeffs) {
  int top_unit = -1;
  bool any_nonzero = false;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    any_nonzero |= !coeffs[i].is_zero();
    if (coeffs[i].is_unit()) top_unit = static_cast<int>(i) + 1;
  }
  if (!any_nonzero) throw ZeroDegreeModule("all coefficients c_i, i >= 1, vanish: e is not a Drinfeld module");
  if (top_unit < 0)
    throw NoUnitCoefficient("no unit among c_1..c_N: e_T is not finite of positive rank over the local base");
  TwistedPoly e_T = assemble(base, gamma, std::move(coeffs));
  return DrinfeldModule(std::move(base), gamma, std::move(e_T), static_cast<unsigned>(top_unit));
}

DrinfeldModule DrinfeldModule::unchecked(AlgebraPtr base, const AlgebraElement& gamma,
                                         std::vector<AlgebraElement> coeffs, unsigned rank) {
  TwistedPoly e_T = assemble(base, gamma, std::move(coeffs));
  return DrinfeldModule(std::move(base), gamma, std::move(e_T), rank);
}

TwistedPoly DrinfeldModule::e_of(const APoly& a) const {
  if (!(*a.field() == base_->ground())) throw InvalidArgument("polynomial over a different F_q");
  TwistedPoly acc(base_);
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * e_T_;
    if (c[i] != 0) acc = acc + TwistedPoly::constant(base_, base_->scalar(c[i]));
  }
  return acc;
}

DrinfeldModule DrinfeldModule::base_change(const RingHom& hom) const {
  TwistedPoly e = e_T_.base_change(hom);
  const AlgebraElement g = hom(gamma_);
  return DrinfeldModule(hom.target(), g, std::move(e), rank_);
}

std::string DrinfeldModule::describe() const {
  std::ostringstream os;
  os << "rank " << rank_ << " over " << base_->describe() << ": e_T = " << e_T_.to_x_string();
  return os.str();
}

RankCheck rank_check(const DrinfeldModule& E) {
  const auto& F = E.base()->ground_ptr();
  std::vector<APoly> samples = {APoly::monomial(F, 1), APoly::parse(F, "T+1"), APoly::monomial(F, 2),
                                monic_irreducibles(F, 2).front()};
  RankCheck out;
  for (const auto& a : samples) {
    const TwistedPoly e = E.e_of(a);
    const std::size_t top = static_cast<std::size_t>(E.rank()) * static_cast<std::size_t>(a.degree());
    std::string reason;
    if (!e.coeff(top).is_unit()) {
      reason = "coefficient of tau^" + std::to_string(top) + " is not a unit";
    } else {
      for (std::size_t i = top + 1; i < e.coeffs().size(); ++i)
        if (!e.coeffs()[i].is_nilpotent()) reason = "coefficient of tau^" + std::to_string(i) + " is a unit";
    }
    if (reason.empty() && !(e.coeff(0) == a.evaluate(E.gamma()))) reason = "constant term differs from gamma(a)";
    if (!reason.empty()) {
      out.ok = false;
      out.witness = a;
      out.reason = reason;
      return out;
    }
  }
  return out;
}

Standardization standardize(const DrinfeldModule& E) {
  const AlgebraPtr& B = E.base();
  const int d = static_cast<int>(E.rank());
  TwistedPoly e = E.e_T();
  TwistedPoly u = TwistedPoly::one(B);
  // Each step removes the top excess coefficient modulo a higher power of
  // (Y); the excess order grows, and Y^k = 0 bounds the number of steps.
  const int max_steps = 1 << 12;
  for (int step = 0; e.degree() > d; ++step) {
    if (step == max_steps) throw Error("internal error: standardization did not terminate");
    const auto shift = static_cast<unsigned>(e.degree() - d);
    const AlgebraElement w = -(e.leading() * e.coeff(static_cast<std::size_t>(d)).frobenius(shift).inv());
    const TwistedPoly v = TwistedPoly::one(B) + TwistedPoly::monomial(B, w, shift);
    e = v * e * v.inverse();
    u = v * u;
  }
  std::vector<AlgebraElement> coeffs(e.coeffs().begin() + 1, e.coeffs().end());
  return {DrinfeldModule::make(B, e.coeff(0), std::move(coeffs)), u};
}

CharacteristicInfo characteristic_of(const DrinfeldModule& E, unsigned max_degree) {
  CharacteristicInfo info;
  info.searched_degree = max_degree;
  for (unsigned deg = 1; deg <= max_degree; ++deg) {
    for (const auto& pi : monic_irreducibles(E.base()->ground_ptr(), deg)) {
      if (!pi.evaluate(E.gamma()).is_unit()) {
        info.pi = pi;
        return info;
      }
    }
  }
  return info;
}

unsigned height_of(const DrinfeldModule& E, const APoly& pi) {
  if (!E.base()->is_field()) throw InvalidArgument("height is defined here for field bases only");
  if (pi.degree() < 1) throw InvalidArgument("height needs a nonconstant prime");
  if (!pi.evaluate(E.gamma()).is_zero()) throw NotCharacteristic(pi.to_string() + " is not the characteristic");
  const TwistedPoly e = E.e_of(pi);
  for (std::size_t i = 0; i < e.coeffs().size(); ++i) {
    if (e.coeffs()[i].is_unit()) {
      if (i % static_cast<std::size_t>(pi.degree()) != 0)
        throw Error("internal error: inseparable degree not a multiple of deg pi");
      return static_cast<unsigned>(i / static_cast<std::size_t>(pi.degree()));
    }
  }
  throw Error("internal error: e_pi has no unit coefficient");
}

}  // namespace drinfeld
