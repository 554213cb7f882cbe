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

#include <set>

#include "doctest.h"
#include "drinfeld/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace drinfeld {
namespace {

using testing::algebra;
using testing::apoly;
using testing::el;
using testing::elems;
using testing::module;
using testing::tw;

TEST_CASE("division_poly examples") {
  auto F4 = algebra(2, 2, 1);
  CHECK(division_poly(module(F4, "w", {"1"}), apoly(F4, "T")).h == tw(F4, {"w", "1"}));
  auto D = algebra(2, 1, 2);
  CHECK(division_poly(module(D, "Y", {"1"}), apoly(D, "T^2")).h.to_x_string() == "Y*X^2 + X^4");
  auto F2 = algebra(2, 1, 1);
  CHECK(division_poly(module(F2, "0", {"0", "1"}), apoly(F2, "T")).h.to_x_string() == "X^4");
  // Non-monic leading coefficient gets normalized.
  const auto h = division_poly(module(F4, "1", {"w"}), apoly(F4, "T")).h;
  CHECK(h.is_monic());
  CHECK(h == tw(F4, {"w^2", "1"}));
  CHECK_THROWS_AS(division_poly(module(D, "Y", {"1", "Y"}), apoly(D, "T")), NotAUnit);
}

TEST_CASE("torsion_points examples") {
  auto F2 = algebra(2, 1, 1);
  const auto C = module(F2, "0", {"1"});
  const auto to = RingHom::extension(F2, 8, kDefaultMaxCard);
  const auto t = torsion_points(C, apoly(F2, "T"), to);
  REQUIRE(t.size() == 1);
  CHECK(t.points[0].is_zero());
  auto F4 = algebra(2, 2, 1);
  CHECK(torsion_points(module(F4, "w", {"1"}), apoly(F4, "T")).points == elems(F4, {"0", "w"}));
  auto D = algebra(2, 1, 2);
  CHECK(torsion_points(module(D, "Y", {"1"}), apoly(D, "T")).points == elems(D, {"0", "Y"}));
}

TEST_CASE("splitting_extension examples") {
  auto F2 = algebra(2, 1, 1);
  auto s = splitting_extension(module(F2, "1", {"1"}), apoly(F2, "T"));
  CHECK(s.factor == 1);
  CHECK(s.count == 2);
  s = splitting_extension(module(F2, "1", {"0", "1"}), apoly(F2, "T"));
  CHECK(s.factor == 2);
  CHECK(s.count == 4);
  s = splitting_extension(module(F2, "0", {"1"}), apoly(F2, "T"));
  CHECK(s.factor == 1);
  CHECK(s.count == 1);
  // X^4 + X^2 + X over F_2 (rank 2, gamma 1): roots live in F_8? e_T = X + X^2 + X^4.
  s = splitting_extension(module(F2, "1", {"1", "1"}), apoly(F2, "T"));
  CHECK(s.count == 4);
  CHECK(separable_count(module(F2, "1", {"1", "1"}), apoly(F2, "T")) == 4);
  CHECK_THROWS_AS(splitting_extension(module(F2, "1", {"1", "1"}), apoly(F2, "T^3"), 2), BoundExceeded);
  CHECK_THROWS_AS(splitting_extension(module(algebra(2, 1, 2), "Y", {"1"}), apoly(F2, "T")), InvalidArgument);
}

TEST_CASE("separable_count") {
  auto F2 = algebra(2, 1, 1);
  CHECK(separable_count(module(F2, "0", {"1"}), apoly(F2, "T^2")) == 1);
  CHECK(separable_count(module(F2, "0", {"1", "1"}), apoly(F2, "T^2")) == 4);
  CHECK(separable_count(module(F2, "0", {"1", "1"}), apoly(F2, "T^2+T")) == 2 * 4);
  CHECK(separable_count(module(F2, "0", {"0", "1"}), apoly(F2, "T+1")) == 4);
}

TEST_CASE("module_structure examples") {
  auto F4 = algebra(2, 2, 1);
  auto r = module_structure(module(F4, "w", {"1"}), apoly(F4, "T"), 1, RingHom::identity(F4));
  CHECK(r.structure.describe() == "(A/T)^1");
  CHECK(r.matches_prediction);
  CHECK_FALSE(r.at_characteristic);
  auto F2 = algebra(2, 1, 1);
  r = module_structure(module(F2, "0", {"1"}), apoly(F2, "T"), 2, RingHom::identity(F2));
  CHECK(r.structure.describe() == "trivial");
  CHECK(r.at_characteristic);
  CHECK(r.height == 1);
  CHECK(r.matches_prediction);
  const auto E = module(F2, "0", {"1", "1"});
  r = module_structure(E, apoly(F2, "T"), 1, splitting_extension(E, apoly(F2, "T")).embedding);
  CHECK(r.structure.describe() == "(A/T)^1");
  CHECK(r.height == 1);
  CHECK(r.expected_rank == 1);
  CHECK(r.matches_prediction);
  // Off characteristic, rank 2, T^2: (A/T^2)^2 over a large enough field.
  const auto G = module(F2, "1", {"0", "1"});
  const auto split = splitting_extension(G, apoly(F2, "T^2"));
  r = module_structure(G, apoly(F2, "T"), 2, split.embedding);
  CHECK(r.structure.describe() == "(A/T^2)^2");
  CHECK(r.filtration_counts == std::vector<std::uint64_t>{4, 16});
  CHECK_THROWS_AS(module_structure(G, apoly(F2, "T"), 2, RingHom::identity(F2)), BoundExceeded);
}

TEST_CASE("module structure of a non-free module is described") {
  ModuleStructure m{APoly::parse(GroundField::make(2), "T"), {2, 1}};
  CHECK(m.describe() == "(A/T^2)^1 + (A/T)^1");
  CHECK_FALSE(m.free_rank(2).has_value());
  ModuleStructure f{APoly::parse(GroundField::make(2), "T+1"), {2, 2}};
  CHECK(f.free_rank(2) == 2u);
  CHECK(f.describe() == "(A/(T + 1)^2)^2");
}

TEST_CASE("property_checks examples") {
  auto F2 = algebra(2, 1, 1);
  const auto C1 = module(F2, "1", {"1"});
  auto rep = property_checks(C1, apoly(F2, "T"), apoly(F2, "T+1"), RingHom::extension(F2, 2, kDefaultMaxCard));
  // gamma(T) = 1 puts the characteristic at T + 1, so E[T + 1] = {0}.
  CHECK(rep.ok());
  CHECK(rep.count_a == 2);
  CHECK(rep.count_b == 1);
  CHECK(rep.count_ab == 2);
  auto F4 = algebra(2, 2, 1);
  const auto W = module(F4, "w", {"1", "1"});
  rep = property_checks(W, apoly(F4, "T"), apoly(F4, "T+1"), splitting_extension(W, apoly(F4, "T^2+T")).embedding);
  CHECK(rep.ok());
  CHECK(rep.count_a == 4);
  CHECK(rep.count_b == 4);
  CHECK(rep.count_ab == 16);
  rep = property_checks(module(F2, "0", {"1"}), apoly(F2, "T"), apoly(F2, "T+1"), RingHom::identity(F2));
  CHECK(rep.ok());
  CHECK_FALSE(division_poly(module(F2, "0", {"1"}), apoly(F2, "T")).h.is_separable());
  auto D = algebra(2, 1, 2);
  const auto E = module(D, "Y", {"1"});
  rep = property_checks(E, apoly(D, "T"), apoly(D, "T+1"), RingHom::identity(D));
  CHECK(rep.ok());
  CHECK(division_poly(E, apoly(D, "T")).h.base_change(RingHom::reduction(D)) ==
        division_poly(E.base_change(RingHom::reduction(D)), apoly(D, "T")).h);
  CHECK_THROWS_AS(property_checks(E, apoly(D, "T"), apoly(D, "T^2"), RingHom::identity(D)), InvalidArgument);
}

TEST_CASE("torsion sets: oracle, A-module closure, divisibility and tower") {
  for (const auto& B : {algebra(2, 1, 1), algebra(2, 2, 1), algebra(2, 1, 2), algebra(2, 1, 3), algebra(2, 2, 2),
                        algebra(3, 1, 1), algebra(3, 2, 1), algebra(3, 1, 2), algebra(3, 1, 3), algebra(3, 2, 2)}) {
    for (const char* g : {"0", "Y", "1", "1+Y"}) {
      for (const auto& cs : std::vector<std::vector<std::string>>{{"1"}, {"0", "1"}, {"1", "1"}}) {
        const auto E = module(B, g, cs);
        CAPTURE(E.describe());
        const auto& field = B->ground_ptr();
        std::vector<APoly> ideals{apoly(B, "T"), apoly(B, "T+1"), APoly(field, poly::least_irreducible(*field, 2))};
        for (std::size_t i = 0; i < 3; ++i) ideals.push_back(ideals[i] * ideals[i]);
        for (const auto& a : ideals) {
          const auto t = torsion_points(E, a);
          CHECK(t.points == oracle::brute_kernel(E.e_of(a)));
          std::uint64_t full = 1;
          for (int i = 0; i < static_cast<int>(E.rank()) * a.degree(); ++i) full *= B->q();
          if (B->is_field()) CHECK(full % t.size() == 0);
          (void)log_q(t.size(), B->q());
          for (const char* b : {"T", "T+1"}) {
            const auto e_b = E.e_of(apoly(B, b));
            for (const auto& x : t.points) CHECK(t.contains(e_b.eval(x)));
          }
          for (std::size_t i = 0; i < t.points.size(); i += 3)
            for (std::size_t j = 0; j < t.points.size(); j += 5) CHECK(t.contains(t.points[i] + t.points[j]));
        }
        for (std::size_t i = 0; i < 3; ++i) {
          auto [g2, r] = division_poly(E, ideals[i + 3]).h.right_divide(division_poly(E, ideals[i]).h);
          CHECK(r.is_zero());
        }
      }
    }
  }
}

TEST_CASE("full count exactly when split and prime to the characteristic") {
  auto F2 = algebra(2, 1, 1);
  for (const auto& E : {module(F2, "1", {"1"}), module(F2, "1", {"0", "1"}), module(F2, "0", {"1", "1"})}) {
    for (const char* a_text : {"T", "T+1", "T^2+T+1", "T^2"}) {
      const auto a = apoly(F2, a_text);
      if (E.rank() == 2 && a.degree() == 2 && a.is_irreducible()) continue;
      const auto s = splitting_extension(E, a);
      std::uint64_t full = 1;
      for (int i = 0; i < static_cast<int>(E.rank()) * a.degree(); ++i) full *= 2;
      const bool prime_to_char = a.evaluate(E.gamma()).is_unit();
      CHECK((s.count == full) == prime_to_char);
    }
  }
}

TEST_CASE("coprime splitting is a bijection on points") {
  auto F4 = algebra(2, 2, 1);
  const auto E = module(F4, "w", {"1", "1"});
  const auto a = apoly(F4, "T");
  const auto b = apoly(F4, "T+1");
  const auto to = splitting_extension(E, a * b).embedding;
  const auto ta = torsion_points(E, a, to);
  const auto tb = torsion_points(E, b, to);
  const auto tab = torsion_points(E, a * b, to);
  std::set<std::uint64_t> sums;
  for (const auto& x : ta.points)
    for (const auto& y : tb.points) {
      CHECK(tab.contains(x + y));
      sums.insert((x + y).index());
    }
  CHECK(sums.size() == tab.size());
  CHECK(tab.size() == ta.size() * tb.size());
}

}  // namespace
}  // namespace drinfeld
