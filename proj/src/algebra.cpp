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

#include "drinfeld/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

// ---------------------------------------------------------------------------
// ArtinLocalAlgebra

AlgebraPtr ArtinLocalAlgebra::make(GroundFieldPtr ground, unsigned m, unsigned k, std::uint64_t max_card) {
  if (!ground) throw InvalidArgument("missing ground field");
  if (m == 0 || k == 0) throw InvalidArgument("extension degree and nilpotency index must be >= 1");
  if (static_cast<std::size_t>(m) * k > kMaxDim)
    throw BoundExceeded("algebra dimension " + std::to_string(m * k) + " exceeds " + std::to_string(kMaxDim));
  std::uint64_t card = 1;
  for (unsigned i = 0; i < m * k; ++i) {
    card *= ground->q();
    if (card > max_card)
      throw BoundExceeded("algebra of dimension " + std::to_string(m * k) + " over F_" +
                          std::to_string(ground->q()) + " exceeds the enumeration bound " +
                          std::to_string(max_card));
  }
  return AlgebraPtr(new ArtinLocalAlgebra(std::move(ground), m, k, max_card));
}

ArtinLocalAlgebra::ArtinLocalAlgebra(GroundFieldPtr ground, unsigned m, unsigned k, std::uint64_t max_card)
    : ground_(std::move(ground)), m_(m), k_(k), cardinality_(1), max_card_(max_card) {
  for (unsigned i = 0; i < m * k; ++i) cardinality_ *= ground_->q();
  modulus_ = m == 1 ? ScalarPoly{0, 1} : poly::least_irreducible(*ground_, m);

  const GroundField& F = *ground_;
  // w^m = -(f_0 + f_1 w + ... + f_{m-1} w^{m-1}); then shift repeatedly.
  std::vector<Scalar> cur(m);
  for (unsigned i = 0; i < m; ++i) cur[i] = F.neg(modulus_[i]);
  for (unsigned t = 0; t + 1 < m; ++t) {
    reduction_.push_back(cur);
    std::vector<Scalar> next(m, 0);
    const Scalar top = cur[m - 1];
    for (unsigned i = m - 1; i > 0; --i) next[i] = cur[i - 1];
    for (unsigned i = 0; i < m; ++i) next[i] = F.add(next[i], F.mul(top, F.neg(modulus_[i])));
    cur = std::move(next);
  }
}

void ArtinLocalAlgebra::mul_residue(const Scalar* a, const Scalar* b, Scalar* out) const {
  const GroundField& F = *ground_;
  std::array<Scalar, 2 * kMaxDim> prod{};
  for (unsigned i = 0; i < m_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
  }
  for (unsigned i = 0; i < m_; ++i) out[i] = prod[i];
  for (unsigned t = 0; t + 1 < m_; ++t) {
    const Scalar c = prod[m_ + t];
    if (c == 0) continue;
    const auto& red = reduction_[t];
    for (unsigned i = 0; i < m_; ++i) out[i] = F.add(out[i], F.mul(c, red[i]));
  }
}

AlgebraElement ArtinLocalAlgebra::scalar(Scalar c) const {
  AlgebraElement x(this);
  x[0] = c;
  return x;
}

AlgebraElement ArtinLocalAlgebra::basis(std::size_t index) const {
  if (index >= dim()) throw InvalidArgument("basis index out of range");
  AlgebraElement x(this);
  x[index] = 1;
  return x;
}

AlgebraElement ArtinLocalAlgebra::omega() const {
  if (m_ == 1) return one();
  return basis(1);
}

AlgebraElement ArtinLocalAlgebra::nil_generator() const {
  if (k_ == 1) return zero();
  return basis(m_);
}

AlgebraElement ArtinLocalAlgebra::from_coordinates(const std::vector<Scalar>& coords) const {
  if (coords.size() > dim()) throw InvalidArgument("too many coordinates for " + describe());
  AlgebraElement x(this);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= q()) throw InvalidArgument("coordinate out of range for F_q");
    x[i] = coords[i];
  }
  return x;
}

AlgebraElement ArtinLocalAlgebra::from_index(std::uint64_t index) const {
  AlgebraElement x(this);
  for (std::size_t i = 0; i < dim(); ++i) {
    x[i] = static_cast<Scalar>(index % q());
    index /= q();
  }
  return x;
}

AlgebraElement ArtinLocalAlgebra::from_fp_coordinates(const std::vector<unsigned>& digits) const {
  const unsigned s = ground_->s();
  if (digits.size() > dim() * s) throw InvalidArgument("too many F_p coordinates for " + describe());
  AlgebraElement x(this);
  for (std::size_t i = 0; i < dim(); ++i) {
    std::vector<unsigned> d(s, 0);
    for (unsigned t = 0; t < s; ++t) {
      const std::size_t pos = i * s + t;
      if (pos < digits.size()) {
        if (digits[pos] >= ground_->p()) throw InvalidArgument("F_p coordinate out of range");
        d[t] = digits[pos];
      }
    }
    x[i] = ground_->from_digits(d);
  }
  return x;
}

std::vector<AlgebraElement> ArtinLocalAlgebra::enumerate_elements() const {
  if (cardinality_ > max_card_) throw BoundExceeded("enumeration bound exceeded for " + describe());
  std::vector<AlgebraElement> out;
  out.reserve(cardinality_);
  for (std::uint64_t i = 0; i < cardinality_; ++i) out.push_back(from_index(i));
  return out;
}

std::vector<AlgebraElement> ArtinLocalAlgebra::maximal_ideal() const {
  std::uint64_t residue_card = 1;
  for (unsigned i = 0; i < m_; ++i) residue_card *= q();
  const std::uint64_t count = cardinality_ / residue_card;
  std::vector<AlgebraElement> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(from_index(i * residue_card));
  return out;
}

std::string ArtinLocalAlgebra::describe() const {
  std::ostringstream os;
  os << "F_" << q();
  if (m_ > 1) os << "^" << m_;
  if (k_ > 1) os << "[Y]/(Y^" << k_ << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const ArtinLocalAlgebra& alg, std::string_view text) : alg_(alg), text_(text) {}

  AlgebraElement run() {
    AlgebraElement v = sum();
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

  std::uint64_t integer() {
    skip();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > (std::uint64_t{1} << 40)) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  AlgebraElement sum() {
    AlgebraElement acc = alg_.zero();
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
      AlgebraElement t = product();
      acc = negate ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  AlgebraElement product() {
    AlgebraElement acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  AlgebraElement power() {
    AlgebraElement base = atom();
    if (eat('^')) base = base.pow(integer());
    return base;
  }

  AlgebraElement atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      AlgebraElement v = sum();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto v = integer() % alg_.ground().p();
      return alg_.scalar(static_cast<Scalar>(v));
    }
    if (c == 'w') {
      ++pos_;
      return alg_.omega();
    }
    // UTF-8 omega.
    if (text_.substr(pos_, 2) == "\xCF\x89") {
      pos_ += 2;
      return alg_.omega();
    }
    if (c == 'Y' || c == 'e') {
      ++pos_;
      return alg_.nil_generator();
    }
    // UTF-8 epsilon.
    if (text_.substr(pos_, 2) == "\xCE\xB5") {
      pos_ += 2;
      return alg_.nil_generator();
    }
    if (c == 'z') {
      ++pos_;
      if (alg_.ground().s() == 1) fail("generator z requires a non-prime ground field");
      return alg_.scalar(static_cast<Scalar>(alg_.ground().p()));
    }
    fail("unknown symbol");
  }

  const ArtinLocalAlgebra& alg_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement ArtinLocalAlgebra::parse(std::string_view text) const { return ExpressionParser(*this, text).run(); }

// ---------------------------------------------------------------------------
// AlgebraElement

std::size_t AlgebraElement::dim() const { return alg_ ? alg_->dim() : 0; }

bool AlgebraElement::is_zero() const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool AlgebraElement::is_unit() const {
  for (unsigned i = 0; i < alg_->m(); ++i)
    if (c_[i] != 0) return true;
  return false;
}

unsigned AlgebraElement::order() const {
  const unsigned m = alg_->m();
  for (unsigned j = 0; j < alg_->k(); ++j)
    for (unsigned i = 0; i < m; ++i)
      if (c_[i + m * j] != 0) return j;
  return alg_->k();
}

std::uint64_t AlgebraElement::index() const {
  std::uint64_t v = 0;
  const unsigned q = alg_->q();
  for (std::size_t i = dim(); i-- > 0;) v = v * q + c_[i];
  return v;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  return r += o;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  return r -= o;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  const GroundField& F = alg_->ground();
  for (std::size_t i = 0; i < dim(); ++i) c_[i] = F.add(c_[i], o.c_[i]);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  const GroundField& F = alg_->ground();
  for (std::size_t i = 0; i < dim(); ++i) c_[i] = F.sub(c_[i], o.c_[i]);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r(alg_);
  const GroundField& F = alg_->ground();
  for (std::size_t i = 0; i < dim(); ++i) r.c_[i] = F.neg(c_[i]);
  return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  const unsigned m = alg_->m();
  const unsigned k = alg_->k();
  const GroundField& F = alg_->ground();
  AlgebraElement r(alg_);
  std::array<Scalar, kMaxDim> tmp{};
  for (unsigned a = 0; a < k; ++a) {
    const Scalar* xa = &c_[a * m];
    bool nonzero = false;
    for (unsigned i = 0; i < m; ++i) nonzero |= xa[i] != 0;
    if (!nonzero) continue;
    for (unsigned b = 0; a + b < k; ++b) {
      alg_->mul_residue(xa, &o.c_[b * m], tmp.data());
      Scalar* dst = &r.c_[(a + b) * m];
      for (unsigned i = 0; i < m; ++i) dst[i] = F.add(dst[i], tmp[i]);
    }
  }
  return r;
}

AlgebraElement AlgebraElement::scaled(Scalar c) const {
  AlgebraElement r(alg_);
  const GroundField& F = alg_->ground();
  for (std::size_t i = 0; i < dim(); ++i) r.c_[i] = F.mul(c, c_[i]);
  return r;
}

AlgebraElement AlgebraElement::pow(std::uint64_t n) const {
  AlgebraElement result = alg_->one();
  AlgebraElement base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

AlgebraElement AlgebraElement::inv() const {
  if (!is_unit()) throw NotAUnit(to_string() + " is not a unit in " + alg_->describe());
  const unsigned m = alg_->m();
  AlgebraElement residue(alg_);
  for (unsigned i = 0; i < m; ++i) residue.c_[i] = c_[i];
  std::uint64_t field_order = 1;
  for (unsigned i = 0; i < m; ++i) field_order *= alg_->q();
  const AlgebraElement residue_inv = residue.pow(field_order - 2);
  // x = r (1 + n) with n nilpotent, n^k = 0.
  const AlgebraElement n = residue_inv * *this - alg_->one();
  AlgebraElement series = alg_->one();
  AlgebraElement term = alg_->one();
  for (unsigned j = 1; j < alg_->k(); ++j) {
    term = -(term * n);
    series += term;
  }
  return series * residue_inv;
}

AlgebraElement AlgebraElement::frobenius(unsigned j) const {
  AlgebraElement r = *this;
  for (unsigned t = 0; t < j; ++t) r = r.pow(alg_->q());
  return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  if (dim() != o.dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

std::strong_ordering AlgebraElement::operator<=>(const AlgebraElement& o) const {
  if (dim() != o.dim()) return dim() <=> o.dim();
  for (std::size_t i = dim(); i-- > 0;) {
    if (c_[i] != o.c_[i]) return c_[i] <=> o.c_[i];
  }
  return std::strong_ordering::equal;
}

std::string AlgebraElement::to_string() const {
  if (!alg_) return "<null>";
  const unsigned m = alg_->m();
  const GroundField& F = alg_->ground();
  std::ostringstream os;
  bool first = true;
  for (std::size_t idx = 0; idx < dim(); ++idx) {
    const Scalar c = c_[idx];
    if (c == 0) continue;
    const std::size_t i = idx % m;
    const std::size_t j = idx / m;
    if (!first) os << " + ";
    first = false;
    std::string coeff;
    if (F.s() == 1) {
      coeff = std::to_string(c);
    } else {
      const auto d = F.digits(c);
      std::ostringstream cs;
      bool f2 = true;
      for (std::size_t t = 0; t < d.size(); ++t) {
        if (d[t] == 0) continue;
        if (!f2) cs << "+";
        f2 = false;
        if (t == 0 || d[t] != 1) cs << d[t];
        if (t > 0) cs << (t == 1 ? "z" : "z^" + std::to_string(t));
      }
      coeff = "(" + cs.str() + ")";
    }
    std::string mono;
    if (i > 0) mono += i == 1 ? "w" : "w^" + std::to_string(i);
    if (j > 0) {
      if (!mono.empty()) mono += "*";
      mono += j == 1 ? "Y" : "Y^" + std::to_string(j);
    }
    if (mono.empty()) {
      os << coeff;
    } else if (coeff == "1") {
      os << mono;
    } else {
      os << coeff << "*" << mono;
    }
  }
  return first ? "0" : os.str();
}

std::vector<unsigned> AlgebraElement::fp_coordinates() const {
  std::vector<unsigned> out;
  const GroundField& F = alg_->ground();
  out.reserve(dim() * F.s());
  for (std::size_t i = 0; i < dim(); ++i) {
    const auto d = F.digits(c_[i]);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// FqLinearMap

FqLinearMap::FqLinearMap(const ArtinLocalAlgebra* source, const ArtinLocalAlgebra* target)
    : source_(source), target_(target), rows_(target->dim()), cols_(source->dim()), a_(rows_ * cols_, 0) {}

FqLinearMap FqLinearMap::identity(const ArtinLocalAlgebra* alg) {
  FqLinearMap f(alg, alg);
  for (std::size_t i = 0; i < f.rows_; ++i) f.at(i, i) = 1;
  return f;
}

void FqLinearMap::set_column(std::size_t c, const AlgebraElement& image) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = image[r];
}

AlgebraElement FqLinearMap::apply(const AlgebraElement& x) const {
  const GroundField& F = target_->ground();
  AlgebraElement y(target_);
  for (std::size_t c = 0; c < cols_; ++c) {
    const Scalar xc = x[c];
    if (xc == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) y[r] = F.add(y[r], F.mul(at(r, c), xc));
  }
  return y;
}

FqLinearMap FqLinearMap::operator*(const FqLinearMap& other) const {
  if (cols_ != other.rows_) throw InvalidArgument("incompatible linear maps");
  const GroundField& F = target_->ground();
  FqLinearMap out(other.source_, target_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < other.cols_; ++c) {
      Scalar acc = 0;
      for (std::size_t t = 0; t < cols_; ++t) acc = F.add(acc, F.mul(at(r, t), other.at(t, c)));
      out.at(r, c) = acc;
    }
  return out;
}

bool FqLinearMap::operator==(const FqLinearMap& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

namespace {

// Row-reduces in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(const GroundField& F, std::vector<Scalar>& a, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && a[sel * cols + col] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != row)
      for (std::size_t c = 0; c < cols; ++c) std::swap(a[sel * cols + c], a[row * cols + c]);
    const Scalar inv = F.inv(a[row * cols + col]);
    for (std::size_t c = 0; c < cols; ++c) a[row * cols + c] = F.mul(a[row * cols + c], inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row) continue;
      const Scalar factor = a[r * cols + col];
      if (factor == 0) continue;
      for (std::size_t c = 0; c < cols; ++c)
        a[r * cols + c] = F.sub(a[r * cols + c], F.mul(factor, a[row * cols + c]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<AlgebraElement> FqLinearMap::kernel_basis() const {
  const GroundField& F = source_->ground();
  std::vector<Scalar> a = a_;
  const auto pivots = rref(F, a, rows_, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<AlgebraElement> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    AlgebraElement v(source_);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(a[r * cols_ + free]);
    basis.push_back(v);
  }
  return basis;
}

std::size_t FqLinearMap::rank() const {
  std::vector<Scalar> a = a_;
  return rref(source_->ground(), a, rows_, cols_).size();
}

std::vector<AlgebraElement> span_elements(const ArtinLocalAlgebra& alg, const std::vector<AlgebraElement>& basis) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    count *= alg.q();
    if (count > alg.max_card()) throw BoundExceeded("span of size > enumeration bound");
  }
  const unsigned q = alg.q();
  std::vector<AlgebraElement> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    AlgebraElement v = alg.zero();
    std::uint64_t t = idx;
    for (const auto& b : basis) {
      const auto c = static_cast<Scalar>(t % q);
      t /= q;
      if (c != 0) v += b.scaled(c);
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AlgebraElement> linear_kernel(const FqLinearMap& f) { return span_elements(*f.source(), f.kernel_basis()); }

// ---------------------------------------------------------------------------
// RingHom

RingHom::RingHom(AlgebraPtr source, AlgebraPtr target, FqLinearMap matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {}

RingHom RingHom::identity(const AlgebraPtr& alg) { return RingHom(alg, alg, FqLinearMap::identity(alg.get())); }

RingHom RingHom::reduction(const AlgebraPtr& alg) {
  auto residue = ArtinLocalAlgebra::make(alg->ground_ptr(), alg->m(), 1, alg->max_card());
  FqLinearMap f(alg.get(), residue.get());
  for (unsigned i = 0; i < alg->m(); ++i) f.set_column(i, residue->basis(i));
  return RingHom(alg, residue, std::move(f));
}

RingHom RingHom::extension(const AlgebraPtr& alg, unsigned factor, std::uint64_t max_card) {
  if (factor == 0) throw InvalidArgument("extension factor must be >= 1");
  auto target = ArtinLocalAlgebra::make(alg->ground_ptr(), alg->m() * factor, alg->k(), max_card);
  if (factor == 1) return RingHom(alg, target, FqLinearMap::identity(alg.get()));

  // Least root of the modulus of l inside l'.
  const ScalarPoly& f = alg->residue_modulus();
  std::uint64_t residue_card = 1;
  for (unsigned i = 0; i < target->m(); ++i) residue_card *= target->q();
  AlgebraElement root(target.get());
  bool found = false;
  for (std::uint64_t idx = 0; idx < residue_card && !found; ++idx) {
    const AlgebraElement r = target->from_index(idx);
    AlgebraElement acc = target->zero();
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * r + target->scalar(f[i]);
    if (acc.is_zero()) {
      root = r;
      found = true;
    }
  }
  if (!found) throw Error("internal error: residue modulus has no root in the extension");

  const AlgebraElement Y = target->nil_generator();
  FqLinearMap map(alg.get(), target.get());
  AlgebraElement y_pow = target->one();
  for (unsigned j = 0; j < alg->k(); ++j) {
    AlgebraElement w_pow = target->one();
    for (unsigned i = 0; i < alg->m(); ++i) {
      map.set_column(i + alg->m() * j, w_pow * y_pow);
      w_pow = w_pow * root;
    }
    y_pow = y_pow * Y;
  }
  return RingHom(alg, target, std::move(map));
}

}  // namespace drinfeld
