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

std::vector<AlgebraPtr> small_algebras() {
  return {algebra(2, 1, 1), algebra(2, 2, 1), algebra(2, 1, 2), algebra(2, 1, 3), algebra(2, 2, 2),
          algebra(3, 1, 1), algebra(3, 2, 1), algebra(3, 1, 2), algebra(3, 1, 3), algebra(3, 2, 2),
          algebra(2, 3, 1), algebra(2, 1, 2, 2), algebra(5, 1, 2)};
}

TEST_CASE("ground fields") {
  auto F4 = GroundField::make(2, 2);
  CHECK(F4->q() == 4);
  CHECK(F4->modulus() == std::vector<unsigned>{1, 1, 1});
  // z^2 = z + 1.
  CHECK(F4->mul(2, 2) == 3);
  for (unsigned a = 1; a < 4; ++a) CHECK(F4->mul(static_cast<Scalar>(a), F4->inv(static_cast<Scalar>(a))) == 1);
  auto F9 = GroundField::make(3, 2);
  // Least monic irreducible quadratic over F_3 in colex order is z^2 + 1.
  CHECK(F9->modulus() == std::vector<unsigned>{1, 0, 1});
  CHECK_THROWS_AS(GroundField::make(4, 1), InvalidArgument);
  CHECK_THROWS_AS(GroundField::make(2, 9), BoundExceeded);
}

TEST_CASE("least irreducibles") {
  auto F2 = GroundField::make(2);
  CHECK(poly::least_irreducible(*F2, 2) == ScalarPoly{1, 1, 1});
  CHECK(poly::least_irreducible(*F2, 3) == ScalarPoly{1, 1, 0, 1});
  auto F3 = GroundField::make(3);
  CHECK(poly::least_irreducible(*F3, 2) == ScalarPoly{1, 0, 1});
  for (unsigned n = 1; n <= 4; ++n) {
    int count = 0;
    for (const auto& f : poly::monic_of_degree(*F2, n)) count += poly::is_irreducible(*F2, f);
    CHECK(count == std::vector<int>{0, 2, 1, 2, 3}[n]);
  }
}

TEST_CASE("algebra_new examples") {
  auto F2 = algebra(2, 1, 1);
  CHECK(F2->cardinality() == 2);
  auto F4 = algebra(2, 2, 1);
  CHECK(F4->cardinality() == 4);
  CHECK(F4->residue_modulus() == ScalarPoly{1, 1, 1});
  auto D = algebra(2, 1, 2);
  CHECK(D->cardinality() == 4);
  const auto els = D->enumerate_elements();
  REQUIRE(els.size() == 4);
  CHECK(els[0] == el(D, "0"));
  CHECK(els[1] == el(D, "1"));
  CHECK(els[2] == el(D, "Y"));
  CHECK(els[3] == el(D, "1+Y"));
  CHECK(D->describe() == "F_2[Y]/(Y^2)");
  CHECK_THROWS_AS(algebra(2, 8, 3), BoundExceeded);
  CHECK_THROWS_AS(algebra(2, 1, 0), InvalidArgument);
}

TEST_CASE("elem_arith examples") {
  auto D = algebra(2, 1, 2);
  CHECK((el(D, "Y") * el(D, "Y")).is_zero());
  CHECK(el(D, "1+Y").inv() == el(D, "1+Y"));
  CHECK_THROWS_AS(el(D, "Y").inv(), NotAUnit);
  auto F4 = algebra(2, 2, 1);
  CHECK(el(F4, "w") * el(F4, "w^2") == F4->one());
  CHECK(el(F4, "w^2") == el(F4, "w+1"));
  CHECK(el(D, "1+Y").pow(2) == D->one());
}

TEST_CASE("is_unit examples") {
  auto D = algebra(2, 1, 2);
  CHECK(el(D, "1+Y").is_unit());
  CHECK(el(D, "Y").is_nilpotent());
  CHECK(D->zero().is_nilpotent());
  CHECK(el(algebra(2, 2, 1), "w").is_unit());
}

TEST_CASE("frobenius examples") {
  auto D = algebra(2, 1, 2);
  CHECK(el(D, "Y").frobenius(1).is_zero());
  CHECK(el(D, "1+Y").frobenius(1) == D->one());
  CHECK(el(D, "1+Y").frobenius(0) == el(D, "1+Y"));
  auto F4 = algebra(2, 2, 1);
  CHECK(el(F4, "w").frobenius(1) == el(F4, "w^2"));
  CHECK(el(F4, "w").frobenius(2) == el(F4, "w"));
}

TEST_CASE("linear_kernel examples") {
  auto F4 = algebra(2, 2, 1);
  auto kid = linear_kernel(FqLinearMap::identity(F4.get()));
  REQUIRE(kid.size() == 1);
  CHECK(kid[0].is_zero());
  auto D = algebra(2, 1, 2);
  CHECK(linear_kernel(FqLinearMap::zero(D.get())).size() == 4);
  const auto f = testing::tw(D, {"Y", "1"});  // X^2 + Y X
  CHECK(linear_kernel(f.as_linear_map()) == testing::elems(D, {"0", "Y"}));
}

TEST_CASE("ring axioms and Frobenius additivity, exhaustive") {
  for (const auto& B : small_algebras()) {
    if (B->cardinality() > 256) continue;
    CAPTURE(B->describe());
    const auto els = B->enumerate_elements();
    for (const auto& x : els) {
      CHECK((x.is_unit() != x.is_nilpotent()));
      if (x.is_unit()) CHECK(x * x.inv() == B->one());
      for (const auto& y : els) {
        CHECK((x + y).frobenius(1) == x.frobenius(1) + y.frobenius(1));
        CHECK(x * y == y * x);
        CHECK((x * y).is_unit() == (x.is_unit() && y.is_unit()));
        CHECK(x + y - y == x);
      }
    }
  }
}

TEST_CASE("associativity and distributivity on sampled triples") {
  for (const auto& B : small_algebras()) {
    const auto els = B->enumerate_elements();
    const std::size_t step = els.size() > 16 ? els.size() / 16 : 1;
    for (std::size_t i = 0; i < els.size(); i += step)
      for (std::size_t j = 0; j < els.size(); j += step)
        for (std::size_t l = 0; l < els.size(); l += step) {
          const auto &x = els[i], &y = els[j], &z = els[l];
          CHECK((x * y) * z == x * (y * z));
          CHECK(x * (y + z) == x * y + x * z);
        }
  }
}

TEST_CASE("index and coordinates round trip") {
  for (const auto& B : small_algebras()) {
    const auto els = B->enumerate_elements();
    CHECK(els.size() == B->cardinality());
    for (std::size_t i = 0; i < els.size(); ++i) {
      CHECK(els[i].index() == i);
      CHECK(B->from_index(i) == els[i]);
      CHECK(B->from_fp_coordinates(els[i].fp_coordinates()) == els[i]);
      CHECK(B->parse(els[i].to_string()) == els[i]);
    }
  }
}

TEST_CASE("reduction is a ring homomorphism detecting units") {
  for (const auto& B : small_algebras()) {
    if (B->cardinality() > 256) continue;
    const RingHom red = RingHom::reduction(B);
    CHECK(red.target()->is_field());
    const auto els = B->enumerate_elements();
    for (const auto& x : els) {
      CHECK(x.is_unit() == red(x).is_unit());
      for (const auto& y : els) {
        CHECK(red(x * y) == red(x) * red(y));
        CHECK(red(x + y) == red(x) + red(y));
      }
    }
  }
}

TEST_CASE("extension embeddings are ring homomorphisms") {
  for (const auto& B : {algebra(2, 1, 1), algebra(2, 2, 1), algebra(3, 1, 2), algebra(2, 2, 2)}) {
    for (unsigned f : {2u, 3u}) {
      const RingHom emb = RingHom::extension(B, f, kDefaultMaxCard);
      CHECK(emb.target()->m() == B->m() * f);
      const auto els = B->enumerate_elements();
      std::set<std::uint64_t> images;
      for (const auto& x : els) {
        images.insert(emb(x).index());
        for (const auto& y : els) CHECK(emb(x * y) == emb(x) * emb(y));
      }
      CHECK(images.size() == els.size());
    }
  }
}

TEST_CASE("linear_kernel agrees with brute force") {
  for (const auto& B : small_algebras()) {
    if (B->cardinality() > 4096) continue;
    const auto els = B->enumerate_elements();
    // A handful of additive polynomials with mixed unit/nilpotent coefficients.
    for (std::size_t i = 0; i < els.size(); i += std::max<std::size_t>(1, els.size() / 7)) {
      for (std::size_t j = 1; j < els.size(); j += std::max<std::size_t>(1, els.size() / 5)) {
        const TwistedPoly f(B, {els[i], els[j], els[(i + j) % els.size()]});
        CHECK(linear_kernel(f.as_linear_map()) == oracle::brute_kernel(f));
      }
    }
  }
}

TEST_CASE("linear map composition is the matrix product") {
  auto B = algebra(3, 1, 2);
  const auto f = testing::tw(B, {"Y", "1", "2*Y"});
  const auto g = testing::tw(B, {"1+Y", "Y"});
  CHECK((f * g).as_linear_map() == f.as_linear_map() * g.as_linear_map());
  for (const auto& x : B->enumerate_elements()) CHECK(f.as_linear_map().apply(x) == f.eval(x));
}

TEST_CASE("parse errors") {
  auto B = algebra(2, 1, 2);
  CHECK_THROWS_AS(B->parse("1+"), ParseError);
  CHECK_THROWS_AS(B->parse("q"), ParseError);
  CHECK_THROWS_AS(B->parse("(Y"), ParseError);
  CHECK(B->parse("Y^2").is_zero());
  CHECK(B->parse("e") == B->parse("Y"));
}

}  // namespace
}  // namespace drinfeld
