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

#include "drinfeld/ground_field.hpp"

#include <string>

#include "drinfeld/errors.hpp"

namespace drinfeld {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

unsigned checked_power(unsigned p, unsigned s) {
  unsigned long long q = 1;
  for (unsigned i = 0; i < s; ++i) {
    q *= p;
    if (q > 256) throw BoundExceeded("ground field larger than 256 elements is not supported");
  }
  return static_cast<unsigned>(q);
}

}  // namespace

std::shared_ptr<const GroundField> GroundField::make(unsigned p, unsigned s) {
  if (!is_prime(p)) throw InvalidArgument("characteristic " + std::to_string(p) + " is not prime");
  if (s == 0) throw InvalidArgument("field exponent must be at least 1");
  checked_power(p, s);
  if (s == 1) return std::shared_ptr<const GroundField>(new GroundField(p, 1, {0, 1}));
  auto prime = make(p, 1);
  const ScalarPoly f = poly::least_irreducible(*prime, s);
  std::vector<unsigned> modulus(f.begin(), f.end());
  return std::shared_ptr<const GroundField>(new GroundField(p, s, std::move(modulus)));
}

GroundField::GroundField(unsigned p, unsigned s, std::vector<unsigned> modulus)
    : p_(p), s_(s), q_(checked_power(p, s)), modulus_(std::move(modulus)) {
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  std::vector<std::vector<unsigned>> dig(q_);
  for (unsigned a = 0; a < q_; ++a) dig[a] = digits(static_cast<Scalar>(a));

  for (unsigned a = 0; a < q_; ++a) {
    std::vector<unsigned> n(s_);
    for (unsigned i = 0; i < s_; ++i) n[i] = (p_ - dig[a][i]) % p_;
    neg_[a] = from_digits(n);
    for (unsigned b = 0; b < q_; ++b) {
      std::vector<unsigned> sum(s_);
      for (unsigned i = 0; i < s_; ++i) sum[i] = (dig[a][i] + dig[b][i]) % p_;
      add_[a * q_ + b] = from_digits(sum);

      // Schoolbook product in F_p[z], reduced by the monic modulus.
      std::vector<unsigned> prod(2 * s_ - 1, 0);
      for (unsigned i = 0; i < s_; ++i)
        for (unsigned j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + dig[a][i] * dig[b][j]) % p_;
      for (unsigned t = 2 * s_ - 1; t-- > s_;) {
        const unsigned c = prod[t];
        if (c == 0) continue;
        for (unsigned i = 0; i <= s_; ++i) {
          unsigned& slot = prod[t - s_ + i];
          slot = (slot + p_ * p_ - c * modulus_[i] % p_) % p_;
        }
      }
      prod.resize(s_);
      mul_[a * q_ + b] = from_digits(prod);
    }
  }
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Scalar>(b);
}

Scalar GroundField::inv(Scalar a) const {
  if (a == 0) throw NotAUnit("zero has no inverse in F_q");
  return inv_[a];
}

std::vector<unsigned> GroundField::digits(Scalar a) const {
  std::vector<unsigned> out(s_);
  unsigned v = a;
  for (unsigned i = 0; i < s_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
  return out;
}

Scalar GroundField::from_digits(const std::vector<unsigned>& digits) const {
  unsigned v = 0;
  for (unsigned i = static_cast<unsigned>(digits.size()); i-- > 0;) v = v * p_ + digits[i] % p_;
  return static_cast<Scalar>(v);
}

namespace poly {

void trim(ScalarPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const ScalarPoly& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i] != 0) return static_cast<int>(i);
  return -1;
}

ScalarPoly add(const GroundField& F, const ScalarPoly& f, const ScalarPoly& g) {
  ScalarPoly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Scalar a = i < f.size() ? f[i] : 0;
    const Scalar b = i < g.size() ? g[i] : 0;
    r[i] = F.add(a, b);
  }
  trim(r);
  return r;
}

ScalarPoly sub(const GroundField& F, const ScalarPoly& f, const ScalarPoly& g) {
  ScalarPoly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Scalar a = i < f.size() ? f[i] : 0;
    const Scalar b = i < g.size() ? g[i] : 0;
    r[i] = F.sub(a, b);
  }
  trim(r);
  return r;
}

ScalarPoly mul(const GroundField& F, const ScalarPoly& f, const ScalarPoly& g) {
  if (f.empty() || g.empty()) return {};
  ScalarPoly r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(f[i], g[j]));
  }
  trim(r);
  return r;
}

std::pair<ScalarPoly, ScalarPoly> divmod(const GroundField& F, const ScalarPoly& f, const ScalarPoly& g) {
  const int dg = degree(g);
  if (dg < 0) throw InvalidArgument("polynomial division by zero");
  ScalarPoly rem = f;
  trim(rem);
  const int df = degree(rem);
  if (df < dg) return {{}, rem};
  ScalarPoly quo(static_cast<std::size_t>(df - dg + 1), 0);
  const Scalar lead_inv = F.inv(g[dg]);
  for (int t = df; t >= dg; --t) {
    const Scalar c = F.mul(rem[t], lead_inv);
    if (c == 0) continue;
    quo[t - dg] = c;
    for (int i = 0; i <= dg; ++i) rem[t - dg + i] = F.sub(rem[t - dg + i], F.mul(c, g[i]));
  }
  trim(rem);
  trim(quo);
  return {quo, rem};
}

ScalarPoly make_monic(const GroundField& F, const ScalarPoly& f) {
  const int d = degree(f);
  if (d < 0) return {};
  const Scalar c = F.inv(f[d]);
  ScalarPoly r(f.begin(), f.begin() + d + 1);
  for (auto& x : r) x = F.mul(x, c);
  return r;
}

std::vector<ScalarPoly> monic_of_degree(const GroundField& F, unsigned n) {
  const unsigned q = F.q();
  std::size_t count = 1;
  for (unsigned i = 0; i < n; ++i) count *= q;
  std::vector<ScalarPoly> out;
  out.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    ScalarPoly f(n + 1, 0);
    std::size_t v = idx;
    for (unsigned i = 0; i < n; ++i) {
      f[i] = static_cast<Scalar>(v % q);
      v /= q;
    }
    f[n] = 1;
    out.push_back(std::move(f));
  }
  return out;
}

bool is_irreducible(const GroundField& F, const ScalarPoly& f) {
  const int n = degree(f);
  if (n < 1) return false;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(n); ++d) {
    for (const auto& g : monic_of_degree(F, d)) {
      if (divmod(F, f, g).second.empty()) return false;
    }
  }
  return true;
}

ScalarPoly least_irreducible(const GroundField& F, unsigned n) {
  if (n == 0) throw InvalidArgument("irreducible of degree 0 requested");
  for (const auto& f : monic_of_degree(F, n)) {
    if (is_irreducible(F, f)) return f;
  }
  throw Error("internal error: no irreducible polynomial of degree " + std::to_string(n));
}

}  // namespace poly

}  // namespace drinfeld
