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

#include "doctest.h"
#include "drinfeld/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace drinfeld {
namespace {

using testing::algebra;
using testing::el;
using testing::tw;

// Every twisted polynomial of degree <= 2 over B; q^{3 dim} of them.
std::vector<TwistedPoly> all_upto_degree_2(const AlgebraPtr& B) {
  std::vector<TwistedPoly> out;
  const auto els = B->enumerate_elements();
  for (const auto& a : els)
    for (const auto& b : els)
      for (const auto& c : els) out.emplace_back(B, std::vector<AlgebraElement>{a, b, c});
  return out;
}

TEST_CASE("tw_mul examples") {
  auto F2 = algebra(2, 1, 1);
  const auto t = tw(F2, {"0", "1"});
  CHECK(t * t == tw(F2, {"0", "0", "1"}));
  CHECK((t * t).to_x_string() == "X^4");
  auto D = algebra(2, 1, 2);
  CHECK((tw(D, {"0", "1"}) * tw(D, {"Y"})).is_zero());
  const auto s = tw(F2, {"1", "1"});
  CHECK(s * s == tw(F2, {"1", "0", "1"}));
}

TEST_CASE("tw_eval examples") {
  auto D = algebra(2, 1, 2);
  CHECK(tw(D, {"0", "1"}).eval(el(D, "Y")).is_zero());
  CHECK(tw(D, {"Y", "1"}).eval(el(D, "Y")).is_zero());
  auto F4 = algebra(2, 2, 1);
  CHECK(tw(F4, {"1", "1"}).eval(el(F4, "w")) == F4->one());
}

TEST_CASE("as_linear_map examples") {
  auto F2 = algebra(2, 1, 1);
  CHECK(tw(F2, {"1"}).as_linear_map() == FqLinearMap::identity(F2.get()));
  auto F4 = algebra(2, 2, 1);
  const auto frob = tw(F4, {"0", "1"}).as_linear_map();
  // 1 -> 1, w -> w^2 = 1 + w.
  CHECK(frob.at(0, 0) == 1);
  CHECK(frob.at(1, 0) == 0);
  CHECK(frob.at(0, 1) == 1);
  CHECK(frob.at(1, 1) == 1);
  CHECK(frob.rank() == 2);
  auto D = algebra(2, 1, 2);
  const auto m = tw(D, {"Y", "1"}).as_linear_map();
  CHECK(m.kernel_basis().size() == 1);
  CHECK(linear_kernel(m) == testing::elems(D, {"0", "Y"}));
}

TEST_CASE("tw_right_divide examples") {
  auto F2 = algebra(2, 1, 1);
  const auto h = tw(F2, {"1", "1"});
  auto [g, r] = h.right_divide(h);
  CHECK(g == TwistedPoly::one(F2));
  CHECK(r.is_zero());
  auto [g2, r2] = tw(F2, {"0", "0", "1"}).right_divide(tw(F2, {"0", "1"}));
  CHECK(g2 == tw(F2, {"0", "1"}));
  CHECK(r2.is_zero());
  auto [g3, r3] = tw(F2, {"0", "1", "1"}).right_divide(h);
  CHECK(g3 == tw(F2, {"0", "1"}));
  CHECK(r3.is_zero());
  auto D = algebra(2, 1, 2);
  CHECK_THROWS_AS(tw(D, {"1", "1"}).right_divide(tw(D, {"1", "Y"})), NotAUnit);
}

TEST_CASE("normalize examples") {
  auto F4 = algebra(2, 2, 1);
  const auto f = tw(F4, {"w", "1"});
  CHECK(f.normalize() == f);
  CHECK(tw(F4, {"0", "w"}).normalize() == tw(F4, {"0", "1"}));
  auto D = algebra(2, 1, 2);
  CHECK(tw(D, {"1", "1+Y"}).normalize() == tw(D, {"1+Y", "1"}));
  CHECK_THROWS_AS(tw(D, {"1", "Y"}).normalize(), NotAUnit);
}

TEST_CASE("is_separable examples") {
  auto F2 = algebra(2, 1, 1);
  CHECK(tw(F2, {"1", "1"}).is_separable());
  CHECK_FALSE(tw(F2, {"0", "1"}).is_separable());
  auto D = algebra(2, 1, 2);
  CHECK_FALSE(tw(D, {"Y", "1"}).is_separable());
}

TEST_CASE("exhaustive: product is composition and associative, |B| <= 4, degree <= 2") {
  for (const auto& B : {algebra(2, 1, 1), algebra(2, 2, 1), algebra(2, 1, 2), algebra(3, 1, 1)}) {
    CAPTURE(B->describe());
    const auto polys = all_upto_degree_2(B);
    const std::size_t step = polys.size() > 64 ? 7 : 1;
    for (std::size_t i = 0; i < polys.size(); i += step) {
      for (std::size_t j = 0; j < polys.size(); j += step) {
        const auto& f = polys[i];
        const auto& g = polys[j];
        CHECK(oracle::x_form(f * g) == oracle::compose(B, oracle::x_form(f), oracle::x_form(g)));
      }
    }
    for (std::size_t i = 0; i < polys.size(); i += 5)
      for (std::size_t j = 1; j < polys.size(); j += 11)
        for (std::size_t l = 2; l < polys.size(); l += 13)
          CHECK((polys[i] * polys[j]) * polys[l] == polys[i] * (polys[j] * polys[l]));
  }
}

TEST_CASE("division round trip and linear-map homomorphism") {
  for (const auto& B : {algebra(2, 1, 2), algebra(3, 1, 2), algebra(2, 2, 2), algebra(2, 1, 3)}) {
    const auto polys = all_upto_degree_2(B);
    for (std::size_t i = 0; i < polys.size(); i += 37) {
      for (std::size_t j = 3; j < polys.size(); j += 53) {
        const auto& f = polys[i] * polys[(i + j) % polys.size()];
        const auto& h = polys[j];
        CHECK(f.as_linear_map() == polys[i].as_linear_map() * polys[(i + j) % polys.size()].as_linear_map());
        if (h.is_zero() || !h.leading().is_unit()) continue;
        auto [g, r] = f.right_divide(h);
        CHECK(g * h + r == f);
        CHECK(r.degree() < h.degree());
        const auto n = h.normalize();
        CHECK(n.is_monic());
        CHECK(n.normalize() == n);
        CHECK(linear_kernel(h.as_linear_map()) == linear_kernel(n.as_linear_map()));
      }
    }
  }
}

TEST_CASE("inverse of 1 + nilpotent") {
  for (const auto& B : {algebra(2, 1, 2), algebra(3, 1, 3), algebra(2, 2, 2)}) {
    for (const auto& n : B->maximal_ideal()) {
      for (unsigned i = 0; i <= 3; ++i) {
        const auto u = TwistedPoly::one(B) + TwistedPoly::monomial(B, n, i);
        const auto v = u.inverse();
        CHECK(u * v == TwistedPoly::one(B));
        CHECK(v * u == TwistedPoly::one(B));
      }
    }
    CHECK_THROWS_AS(tw(B, {"1", "1"}).inverse(), NotAUnit);
  }
}

TEST_CASE("degree cap") {
  auto F2 = algebra(2, 1, 1);
  const auto big = TwistedPoly::monomial(F2, F2->one(), 15);
  CHECK_THROWS_AS(big * big, BoundExceeded);
}

TEST_CASE("x-string") {
  auto F4 = algebra(2, 2, 1);
  CHECK(tw(F4, {"w", "1"}).to_x_string() == "w*X + X^2");
  CHECK(TwistedPoly(F4).to_x_string() == "0");
}

}  // namespace
}  // namespace drinfeld
