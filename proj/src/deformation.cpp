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

#include "drinfeld/deformation.hpp"

#include <map>
#include <numeric>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

constexpr std::uint64_t kMaxIsomorphisms = std::uint64_t{1} << 22;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Keeps the smaller index as root so representatives are least members.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

using Key = std::vector<std::uint64_t>;

Key key_of(const TwistedPoly& e) {
  Key k;
  for (std::size_t i = 1; i < e.coeffs().size(); ++i) k.push_back(e.coeffs()[i].index());
  return k;
}

struct Isomorphism {
  TwistedPoly u;
  TwistedPoly u_inv;
};

std::vector<Isomorphism> generator_isomorphisms(const AlgebraPtr& B, unsigned iso_degree) {
  std::vector<Isomorphism> out;
  const auto ideal = B->maximal_ideal();
  for (unsigned i = 0; i <= iso_degree; ++i) {
    for (const auto& n : ideal) {
      if (n.is_zero()) continue;
      TwistedPoly u = TwistedPoly::one(B) + TwistedPoly::monomial(B, n, i);
      TwistedPoly inv = u.inverse();
      out.push_back({std::move(u), std::move(inv)});
    }
  }
  return out;
}

std::vector<Isomorphism> all_isomorphisms(const AlgebraPtr& B, unsigned iso_degree) {
  const auto ideal = B->maximal_ideal();
  std::uint64_t total = 1;
  for (unsigned i = 0; i <= iso_degree; ++i) {
    total *= ideal.size();
    if (total > kMaxIsomorphisms) throw BoundExceeded("brute-force isomorphism search too large");
  }
  std::vector<Isomorphism> out;
  out.reserve(total);
  std::vector<std::size_t> idx(iso_degree + 1, 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    std::vector<AlgebraElement> cs;
    cs.push_back(B->one() + ideal[idx[0]]);
    for (unsigned i = 1; i <= iso_degree; ++i) cs.push_back(ideal[idx[i]]);
    TwistedPoly u(B, std::move(cs));
    TwistedPoly inv = u.inverse();
    out.push_back({std::move(u), std::move(inv)});
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (++idx[j] < ideal.size()) break;
      idx[j] = 0;
    }
  }
  return out;
}

}  // namespace

DeformationProblem::DeformationProblem(DrinfeldModule E0, AlgebraPtr B, const AlgebraElement& gamma_lift)
    : E0_(std::move(E0)), B_(std::move(B)), gamma_lift_(gamma_lift), reduction_(RingHom::reduction(B_)) {
  if (!E0_.base()->is_field()) throw InvalidArgument("the special fiber must live over a field");
  if (!E0_.is_standard()) throw InvalidArgument("the special fiber must be in standard form");
  if (!(B_->ground() == E0_.base()->ground()) || B_->m() != E0_.base()->m())
    throw InvalidArgument("deformation base must have residue field " + E0_.base()->describe());
  if (gamma_lift.algebra() == nullptr || !gamma_lift.algebra()->same_as(*B_))
    throw InvalidArgument("gamma lift must be an element of the deformation base");
  if (!(reduction_(gamma_lift) == E0_.gamma()))
    throw InvalidArgument("gamma lift does not reduce to gamma_0(T)");
  std::vector<Scalar> coords(B_->dim());
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = gamma_lift[i];
  gamma_lift_ = B_->from_coordinates(coords);
}

AlgebraElement DeformationProblem::lift(const AlgebraElement& x) const {
  AlgebraElement y = B_->zero();
  for (unsigned i = 0; i < B_->m(); ++i) y[i] = x[i];
  return y;
}

std::vector<DrinfeldModule> enumerate_deformations(const DeformationProblem& P) {
  const AlgebraPtr& B = P.base();
  const unsigned d = P.special_fiber().rank();
  const auto ideal = B->maximal_ideal();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) {
    total *= ideal.size();
    if (total > B->max_card()) throw BoundExceeded("|m_B|^d exceeds the enumeration bound");
  }
  std::vector<AlgebraElement> base_coeffs;
  for (unsigned i = 1; i <= d; ++i) base_coeffs.push_back(P.lift(P.special_fiber().e_T().coeff(i)));

  std::vector<DrinfeldModule> out;
  out.reserve(total);
  std::vector<std::size_t> idx(d, 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    std::vector<AlgebraElement> cs;
    for (unsigned i = 0; i < d; ++i) cs.push_back(base_coeffs[i] + ideal[idx[i]]);
    out.push_back(DrinfeldModule::make(B, P.gamma_lift(), std::move(cs)));
    for (std::size_t j = d; j-- > 0;) {
      if (++idx[j] < ideal.size()) break;
      idx[j] = 0;
    }
  }
  return out;
}

TwistedPoly conjugate(const TwistedPoly& e, const TwistedPoly& u) { return u * e * u.inverse(); }

std::vector<DeformationClass> deformation_classes(const DeformationProblem& P, unsigned iso_degree,
                                                  OrbitMethod method) {
  const auto defs = enumerate_deformations(P);
  const int d = static_cast<int>(P.special_fiber().rank());
  std::map<Key, std::size_t> index;
  for (std::size_t i = 0; i < defs.size(); ++i) index.emplace(key_of(defs[i].e_T()), i);

  const auto isos = method == OrbitMethod::Generators ? generator_isomorphisms(P.base(), iso_degree)
                                                      : all_isomorphisms(P.base(), iso_degree);
  UnionFind uf(defs.size());
  for (std::size_t i = 0; i < defs.size(); ++i) {
    for (const auto& iso : isos) {
      const TwistedPoly c = iso.u * defs[i].e_T() * iso.u_inv;
      if (c.degree() != d) continue;
      const auto it = index.find(key_of(c));
      if (it != index.end()) uf.unite(i, it->second);
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < defs.size(); ++i) groups[uf.find(i)].push_back(i);
  std::vector<DeformationClass> out;
  for (auto& [root, members] : groups) out.push_back({defs[root], std::move(members)});
  return out;
}

LevelLiftClasses level_deformation_classes(const DeformationProblem& P, const APoly& a,
                                           const LevelStructureCandidate& iota0, LevelMode mode,
                                           unsigned iso_degree) {
  const LevelProblem special(P.special_fiber(), a);
  if (!special.is_well_defined(iota0) || !special.satisfies(iota0, LevelMode::B))
    throw InvalidArgument("iota0 is not a level structure of the special fiber");

  const auto defs = enumerate_deformations(P);
  const int d = static_cast<int>(P.special_fiber().rank());
  std::map<Key, std::size_t> def_index;
  for (std::size_t i = 0; i < defs.size(); ++i) def_index.emplace(key_of(defs[i].e_T()), i);

  LevelLiftClasses out;
  std::map<std::pair<std::size_t, Key>, std::size_t> node_index;
  for (std::size_t i = 0; i < defs.size(); ++i) {
    const LevelProblem problem(defs[i], a);
    // Torsion points over B lying above each special image.
    std::vector<std::vector<AlgebraElement>> fibers(iota0.basis_images.size());
    for (const auto& y : problem.torsion().points)
      for (std::size_t j = 0; j < fibers.size(); ++j)
        if (P.reduction()(y) == iota0.basis_images[j]) fibers[j].push_back(y);

    std::uint64_t total = 1;
    for (const auto& f : fibers) total *= f.size();
    std::vector<std::size_t> idx(fibers.size(), 0);
    for (std::uint64_t n = 0; n < total; ++n) {
      LevelStructureCandidate c;
      for (std::size_t j = 0; j < fibers.size(); ++j) c.basis_images.push_back(fibers[j][idx[j]]);
      if (problem.satisfies(c, mode)) {
        Key k;
        for (const auto& y : c.basis_images) k.push_back(y.index());
        node_index.emplace(std::make_pair(i, std::move(k)), out.pairs.size());
        out.pairs.push_back({i, std::move(c)});
      }
      for (std::size_t j = fibers.size(); j-- > 0;) {
        if (++idx[j] < fibers[j].size()) break;
        idx[j] = 0;
      }
    }
  }

  const auto isos = generator_isomorphisms(P.base(), iso_degree);
  UnionFind uf(out.pairs.size());
  for (std::size_t n = 0; n < out.pairs.size(); ++n) {
    const auto& [def, structure] = out.pairs[n];
    for (const auto& iso : isos) {
      const TwistedPoly c = iso.u * defs[def].e_T() * iso.u_inv;
      if (c.degree() != d) continue;
      const auto it = def_index.find(key_of(c));
      if (it == def_index.end()) continue;
      Key k;
      for (const auto& y : structure.basis_images) k.push_back(iso.u.eval(y).index());
      const auto node = node_index.find(std::make_pair(it->second, k));
      if (node == node_index.end()) {
        ++out.transport_misses;
        continue;
      }
      uf.unite(n, node->second);
    }
  }
  for (std::size_t n = 0; n < out.pairs.size(); ++n)
    if (uf.find(n) == n) ++out.classes;
  return out;
}

QuotientIsogeny quotient_isogeny(const DrinfeldModule& E, const DivisionPolynomial& h) {
  const TwistedPoly& ker = h.h;
  const auto [f_T, rem] = (ker * E.e_T()).right_divide(ker);
  if (!rem.is_zero())
    throw KernelNotStable("h e_T is not right-divisible by h; remainder " + rem.to_x_string());
  std::vector<AlgebraElement> cs(f_T.coeffs().begin() + 1, f_T.coeffs().end());
  DrinfeldModule F = DrinfeldModule::make(E.base(), f_T.coeff(0), std::move(cs));

  bool identities = F.rank() == E.rank();
  const auto& field = E.base()->ground_ptr();
  for (const char* a_text : {"T", "T+1", "T^2"}) {
    const APoly a = APoly::parse(field, a_text);
    identities = identities && (ker * E.e_of(a) == F.e_of(a) * ker);
  }
  const bool gamma_ok = F.gamma() == E.gamma();
  return {std::move(F), ker, f_T, ker.is_separable(), identities, gamma_ok};
}

}  // namespace drinfeld
