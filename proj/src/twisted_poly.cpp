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

#include "drinfeld/twisted_poly.hpp"

#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

int max_tau_degree(unsigned q) {
  std::uint64_t x = 1;
  int n = 0;
  while (x * q <= (std::uint64_t{1} << kMaxXDegreeLog2)) {
    x *= q;
    ++n;
  }
  return n;
}

}  // namespace

TwistedPoly::TwistedPoly(AlgebraPtr base, std::vector<AlgebraElement> coeffs)
    : base_(std::move(base)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) {
    if (c.algebra() == nullptr || !c.algebra()->same_as(*base_))
      throw InvalidArgument("coefficient does not belong to " + base_->describe());
  }
  trim();
}

TwistedPoly TwistedPoly::constant(AlgebraPtr base, const AlgebraElement& c) {
  return TwistedPoly(std::move(base), {c});
}

TwistedPoly TwistedPoly::one(AlgebraPtr base) {
  const AlgebraElement c = base->one();
  return TwistedPoly(std::move(base), {c});
}

TwistedPoly TwistedPoly::monomial(AlgebraPtr base, const AlgebraElement& c, unsigned i) {
  std::vector<AlgebraElement> cs(i + 1, base->zero());
  cs[i] = c;
  return TwistedPoly(std::move(base), std::move(cs));
}

void TwistedPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void TwistedPoly::check_same_base(const TwistedPoly& o) const {
  if (!base_->same_as(*o.base_))
    throw InvalidArgument("twisted polynomials over different bases: " + base_->describe() + " vs " +
                          o.base_->describe());
}

AlgebraElement TwistedPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : base_->zero(); }

AlgebraElement TwistedPoly::leading() const { return coeffs_.empty() ? base_->zero() : coeffs_.back(); }

TwistedPoly TwistedPoly::operator+(const TwistedPoly& o) const {
  check_same_base(o);
  TwistedPoly r(base_);
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), base_->zero());
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeff(i) + o.coeff(i);
  r.trim();
  return r;
}

TwistedPoly TwistedPoly::operator-(const TwistedPoly& o) const {
  check_same_base(o);
  TwistedPoly r(base_);
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), base_->zero());
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeff(i) - o.coeff(i);
  r.trim();
  return r;
}

TwistedPoly TwistedPoly::operator-() const {
  TwistedPoly r(base_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

TwistedPoly TwistedPoly::operator*(const TwistedPoly& o) const {
  check_same_base(o);
  if (is_zero() || o.is_zero()) return TwistedPoly(base_);
  const int deg = degree() + o.degree();
  if (deg > max_tau_degree(base_->q()))
    throw BoundExceeded("twisted product of tau-degree " + std::to_string(deg) + " exceeds the X-degree cap 2^" +
                        std::to_string(kMaxXDegreeLog2));
  TwistedPoly r(base_);
  r.coeffs_.assign(static_cast<std::size_t>(deg) + 1, base_->zero());
  // (a_i tau^i)(b_j tau^j) = a_i b_j^{q^i} tau^{i+j}; twist o's coefficients once per i.
  std::vector<AlgebraElement> twisted = o.coeffs_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0)
      for (auto& b : twisted) b = b.frobenius(1);
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < twisted.size(); ++j) r.coeffs_[i + j] += coeffs_[i] * twisted[j];
  }
  r.trim();
  return r;
}

TwistedPoly TwistedPoly::scaled(const AlgebraElement& c) const {
  TwistedPoly r(base_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& x : coeffs_) r.coeffs_.push_back(c * x);
  r.trim();
  return r;
}

bool TwistedPoly::operator==(const TwistedPoly& o) const {
  return base_->same_as(*o.base_) && coeffs_ == o.coeffs_;
}

AlgebraElement TwistedPoly::eval(const AlgebraElement& x) const {
  AlgebraElement acc = base_->zero();
  AlgebraElement power = x;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) power = power.frobenius(1);
    if (!coeffs_[i].is_zero()) acc += coeffs_[i] * power;
  }
  return acc;
}

FqLinearMap TwistedPoly::as_linear_map() const {
  FqLinearMap f(base_.get(), base_.get());
  for (std::size_t i = 0; i < base_->dim(); ++i) f.set_column(i, eval(base_->basis(i)));
  return f;
}

TwistedPoly TwistedPoly::base_change(const RingHom& hom) const {
  if (!hom.source()->same_as(*base_)) throw InvalidArgument("ring homomorphism has the wrong source");
  TwistedPoly r(hom.target());
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(hom(c));
  r.trim();
  return r;
}

std::pair<TwistedPoly, TwistedPoly> TwistedPoly::right_divide(const TwistedPoly& h) const {
  check_same_base(h);
  if (h.is_zero() || !h.leading().is_unit())
    throw NotAUnit("right division needs a divisor with unit leading coefficient");
  const int dh = h.degree();
  TwistedPoly rem = *this;
  TwistedPoly quo(base_);
  if (rem.degree() >= dh) quo.coeffs_.assign(static_cast<std::size_t>(rem.degree() - dh) + 1, base_->zero());
  const AlgebraElement lead = h.leading();
  while (rem.degree() >= dh) {
    const auto e = static_cast<unsigned>(rem.degree() - dh);
    // lc(rem) = g_e * lc(h)^{q^e}
    const AlgebraElement g = rem.leading() * lead.frobenius(e).inv();
    quo.coeffs_[e] += g;
    rem = rem - monomial(base_, g, e) * h;
  }
  quo.trim();
  return {quo, rem};
}

TwistedPoly TwistedPoly::normalize() const {
  if (is_zero() || !leading().is_unit()) throw NotAUnit("normalize needs a unit leading coefficient");
  return scaled(leading().inv());
}

bool TwistedPoly::is_monic() const { return !is_zero() && leading() == base_->one(); }

bool TwistedPoly::is_separable() const { return coeff(0).is_unit(); }

TwistedPoly TwistedPoly::inverse() const {
  if (!coeff(0).is_unit()) throw NotAUnit("twisted polynomial with non-unit constant term is not invertible");
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_nilpotent()) throw NotAUnit("twisted polynomial with a unit tau-coefficient is not invertible");
  // f = c (1 + N), N with nilpotent coefficients, N^k = 0.
  const AlgebraElement c_inv = coeff(0).inv();
  const TwistedPoly n = scaled(c_inv) - one(base_);
  TwistedPoly series = one(base_);
  TwistedPoly term = one(base_);
  for (unsigned j = 1; j <= base_->k(); ++j) {
    term = -(term * n);
    if (term.is_zero()) break;
    series = series + term;
  }
  if (!term.is_zero()) throw Error("internal error: twisted inverse series did not terminate");
  return series * constant(base_, c_inv);
}

std::string TwistedPoly::to_x_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  std::uint64_t exp = 1;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) exp *= base_->q();
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string c = coeffs_[i].to_string();
    const std::string x = exp == 1 ? "X" : "X^" + std::to_string(exp);
    if (c == "1") {
      os << x;
    } else if (c.find('+') != std::string::npos) {
      os << "(" << c << ")*" << x;
    } else {
      os << c << "*" << x;
    }
  }
  return os.str();
}

}  // namespace drinfeld
