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

#include "drinfeld/apoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

APoly::APoly(GroundFieldPtr field, ScalarPoly coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto c : c_)
    if (c >= field_->q()) throw InvalidArgument("coefficient out of range for F_q");
  poly::trim(c_);
}

APoly APoly::constant(GroundFieldPtr field, Scalar c) { return APoly(std::move(field), ScalarPoly{c}); }

APoly APoly::monomial(GroundFieldPtr field, unsigned n) {
  ScalarPoly c(n + 1, 0);
  c[n] = 1;
  return APoly(std::move(field), std::move(c));
}

APoly APoly::pow(unsigned n) const {
  APoly r = constant(field_, 1);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

bool APoly::operator<(const APoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

AlgebraElement APoly::evaluate(const AlgebraElement& x) const {
  const ArtinLocalAlgebra& alg = *x.algebra();
  if (!(alg.ground() == *field_)) throw InvalidArgument("evaluation point lives over a different F_q");
  AlgebraElement acc = alg.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + alg.scalar(c_[i]);
  return acc;
}

std::vector<std::pair<APoly, unsigned>> APoly::factor() const {
  if (is_zero()) throw InvalidArgument("cannot factor zero");
  std::vector<std::pair<APoly, unsigned>> out;
  APoly rest(field_, poly::make_monic(*field_, c_));
  for (unsigned d = 1; rest.degree() > 0 && 2 * d <= static_cast<unsigned>(rest.degree()); ++d) {
    for (const auto& pi : monic_irreducibles(field_, d)) {
      unsigned e = 0;
      while (pi.divides(rest)) {
        rest = rest / pi;
        ++e;
      }
      if (e > 0) out.emplace_back(pi, e);
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::string APoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Scalar c = c_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    std::string coeff;
    if (field_->s() == 1) {
      coeff = std::to_string(c);
    } else {
      const auto d = field_->digits(c);
      std::string acc;
      for (std::size_t t = 0; t < d.size(); ++t) {
        if (d[t] == 0) continue;
        if (!acc.empty()) acc += "+";
        if (t == 0 || d[t] != 1) acc += std::to_string(d[t]);
        if (t > 0) acc += t == 1 ? "z" : "z^" + std::to_string(t);
      }
      coeff = d.size() > 1 && acc.find('+') != std::string::npos ? "(" + acc + ")" : acc;
    }
    const std::string mono = i == 0 ? "" : (i == 1 ? "T" : "T^" + std::to_string(i));
    if (mono.empty()) {
      os << coeff;
    } else if (coeff == "1") {
      os << mono;
    } else {
      os << coeff << "*" << mono;
    }
  }
  return os.str();
}

namespace {

class APolyParser {
 public:
  APolyParser(GroundFieldPtr field, std::string_view text) : field_(std::move(field)), text_(text) {}

  APoly run() {
    APoly v = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  unsigned integer() {
    skip();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > 100000) fail("integer too large");
      ++pos_;
    }
    return static_cast<unsigned>(v);
  }
  APoly sum() {
    APoly acc(field_);
    bool first = true;
    for (;;) {
      bool negate = false;
      if (eat('-')) {
        negate = true;
      } else if (!first && !eat('+')) {
        break;
      } else if (first) {
        eat('+');
      }
      APoly t = product();
      acc = negate ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }
  APoly product() {
    APoly acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }
  APoly power() {
    APoly base = atom();
    if (eat('^')) base = base.pow(integer());
    return base;
  }
  APoly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      APoly v = sum();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return APoly::constant(field_, static_cast<Scalar>(integer() % field_->p()));
    if (c == 'T') {
      ++pos_;
      return APoly::monomial(field_, 1);
    }
    if (c == 'z') {
      ++pos_;
      if (field_->s() == 1) fail("generator z requires a non-prime ground field");
      return APoly::constant(field_, static_cast<Scalar>(field_->p()));
    }
    fail("unknown symbol");
  }

  GroundFieldPtr field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

APoly APoly::parse(GroundFieldPtr field, std::string_view text) { return APolyParser(std::move(field), text).run(); }

std::vector<APoly> monic_irreducibles(const GroundFieldPtr& field, unsigned degree) {
  std::vector<APoly> out;
  for (auto& f : poly::monic_of_degree(*field, degree))
    if (poly::is_irreducible(*field, f)) out.emplace_back(field, std::move(f));
  return out;
}

std::vector<APoly> residues_below(const GroundFieldPtr& field, unsigned n) {
  const unsigned q = field->q();
  std::size_t count = 1;
  for (unsigned i = 0; i < n; ++i) count *= q;
  std::vector<APoly> out;
  out.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    ScalarPoly c(n, 0);
    std::size_t v = idx;
    for (unsigned i = 0; i < n; ++i) {
      c[i] = static_cast<Scalar>(v % q);
      v /= q;
    }
    out.emplace_back(field, std::move(c));
  }
  return out;
}

}  // namespace drinfeld
