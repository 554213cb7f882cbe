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

#include <algorithm>

#include "doctest.h"
#include "drinfeld/errors.hpp"
#include "experiment.hpp"

namespace drinfeld::experiments {
namespace {

json small_config() {
  return json::parse(R"({
    "cases": [{"p": 2, "base": [1, 2], "coefficients": ["1"], "gamma": "Y", "ideal": "T"}],
    "grid": {"axes": ["p", "ideal"], "p": [2, 3], "coefficients": [["1"]], "gamma": "1",
             "ideal": ["T", "T+1"]}
  })");
}

TEST_CASE("grid expansion order") {
  const Config c = parse_config(small_config());
  REQUIRE(c.cases.size() == 5);
  CHECK(c.cases[0].at("gamma") == "Y");
  CHECK(c.cases[1].at("p") == 2);
  CHECK(c.cases[1].at("ideal") == "T");
  CHECK(c.cases[2].at("ideal") == "T+1");
  CHECK(c.cases[3].at("p") == 3);
  CHECK(c.cases[4].at("coefficients") == json::array({"1"}));
  CHECK(c.bounds.max_card == kDefaultMaxCard);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config(json::parse(R"({"bogus": 1})")), ParseError);
  CHECK_THROWS_AS(parse_config(json::parse(R"([1, 2])")), ParseError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"bounds": {"max_card": -4}})")), ParseError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"grid": {"axes": ["p"], "p": 2}})")), ParseError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"grid": {"p": []}})")), ParseError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ParseError);

  const json bad_base = {{"cases", {{{"p", 4}, {"coefficients", {"1"}}, {"gamma", "0"}, {"ideal", "T"}}}}};
  CHECK_THROWS_AS(run(Command::Equivalence, parse_config(bad_base)), Error);
  const json bad_gamma = {{"cases", {{{"p", 2}, {"coefficients", {"1"}}, {"gamma", "Y+"}, {"ideal", "T"}}}}};
  CHECK_THROWS_AS(run(Command::Equivalence, parse_config(bad_gamma)), ParseError);
}

TEST_CASE("building blocks") {
  const json c = {{"p", 3}, {"base", {2, 2}}, {"coefficients", {"0", "1"}}, {"gamma", json::array({1, 0, 1, 0})}};
  const AlgebraPtr B = base_of(c, kDefaultMaxCard, "c");
  CHECK(B->cardinality() == 81);
  const DrinfeldModule E = module_of(B, c, "c");
  CHECK(E.rank() == 2);
  CHECK(E.gamma() == B->parse("1+Y"));
  const auto F2 = GroundField::make(2);
  CHECK(apoly_of(F2, "irreducible:2", "x") == APoly::parse(F2, "T^2+T+1"));
  CHECK(apoly_of(F2, json::array({1, 1}), "x") == APoly::parse(F2, "T+1"));
  CHECK(ideal_of(F2, {{"prime", "T+1"}, {"exponent", 3}}, "x") == APoly::parse(F2, "T^3+T^2+T+1"));
  CHECK_THROWS_AS(apoly_of(F2, "irreducible:0", "x"), ParseError);
}

TEST_CASE("command names") {
  for (auto c : {Command::Torsion, Command::Equivalence, Command::Tangent, Command::Isogeny})
    CHECK(command_from_string(to_string(c)) == c);
  CHECK_FALSE(command_from_string("level").has_value());
}

TEST_CASE("duplicates collapse on fields") {
  const json cfg = {{"grid",
                     {{"p", 2},
                      {"base", {{1, 1}, {1, 2}}},
                      {"coefficients", {{"1"}}},
                      {"gamma", {"0", "Y"}},
                      {"ideal", "T"}}}};
  const RunResult r = run(Command::Equivalence, parse_config(cfg));
  const auto& p = r.document["payload"];
  CHECK(p["cases"].size() == 3);
  REQUIRE(p["duplicates"].size() == 1);
  CHECK(p["duplicates"][0]["duplicate_of"] == 0);
}

TEST_CASE("expectations") {
  json cfg = small_config();
  cfg["cases"][0]["expect"] = {{"count_a", 1}, {"sets_equal", true}};
  RunResult r = run(Command::Equivalence, parse_config(cfg));
  CHECK(r.failed == 0);
  CHECK(r.document["payload"]["cases"][0]["expectation_mismatches"].empty());

  cfg["cases"][0]["expect"] = {{"count_a", 2}};
  r = run(Command::Equivalence, parse_config(cfg));
  CHECK(r.failed == 1);
  const auto& m = r.document["payload"]["cases"][0]["expectation_mismatches"];
  REQUIRE(m.size() == 1);
  CHECK(m[0]["actual"] == 1);

  cfg["cases"][0]["expect"] = "count_a";
  CHECK_THROWS_AS(run(Command::Equivalence, parse_config(cfg)), ParseError);
}

TEST_CASE("bounds are per case") {
  const json cfg = {{"bounds", {{"max_card", 16}}},
                    {"cases",
                     {{{"p", 2}, {"coefficients", {"1"}}, {"gamma", "1"}, {"ideal", "T"}},
                      {{"p", 2}, {"base", {2, 3}}, {"coefficients", {"1"}}, {"gamma", "1"}, {"ideal", "T"}}}}};
  const RunResult r = run(Command::Equivalence, parse_config(cfg));
  const auto& cases = r.document["payload"]["cases"];
  CHECK(cases[0]["status"] == "pass");
  CHECK(cases[1]["status"] == "bound_exceeded");
  CHECK(r.failed == 0);
  CHECK(r.bound_exceeded == 1);
  CHECK(r.document["payload"]["summary"]["all_pass"] == false);
}

TEST_CASE("payload is independent of jobs and timing") {
  const Config c = parse_config(small_config());
  const RunResult a = run(Command::Equivalence, c, {1, std::nullopt});
  const RunResult b = run(Command::Equivalence, c, {3, std::nullopt});
  CHECK(dump(a.document["payload"]) == dump(b.document["payload"]));
  CHECK(a.document["payload_hash"] == b.document["payload_hash"]);
  CHECK(a.document["payload_hash"] == hex64(fnv1a(a.document["payload"].dump())));
  CHECK(a.document.contains("timing"));
  CHECK_FALSE(a.document["payload"].contains("timing"));
  CHECK(to_csv(a) == to_csv(b));
}

TEST_CASE("csv export") {
  const RunResult r = run(Command::Isogeny, parse_config(json::parse(R"({
    "cases": [{"p": 2, "coefficients": ["1"], "gamma": "1", "prime": "T", "exponent": 2}]})")));
  const std::string csv = to_csv(r);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  CHECK(csv.rfind("a_implies_b,", 0) == std::string::npos);
  CHECK(csv.find(",case,") != std::string::npos);
  CHECK(csv.find("\"") != std::string::npos);
}

TEST_CASE("hash helpers") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(hex64(fnv1a("a")) == "af63dc4c8601ec8c");
}

TEST_CASE("each command runs on a small case") {
  const json field = {{"p", 2}, {"m", 2}, {"coefficients", {"1"}}, {"gamma", "w"}, {"prime", "T"}};
  for (auto cmd : {Command::Torsion, Command::Isogeny}) {
    const RunResult r = run(cmd, parse_config({{"cases", {field}}}));
    CHECK(r.failed == 0);
    CHECK(r.document["payload"]["cases"][0]["status"] == "pass");
  }
  const json tangent = {{"p", 2}, {"m", 1}, {"k", 2}, {"coefficients", {"1", "1"}}, {"gamma", "1"},
                        {"level_ideal", "T"}};
  const RunResult t = run(Command::Tangent, parse_config({{"cases", {tangent}}}));
  const auto& rec = t.document["payload"]["cases"][0];
  CHECK(rec["status"] == "pass");
  CHECK(rec["classes"] == 2);
  CHECK(rec["expected_classes"] == 2);
}

}  // namespace
}  // namespace drinfeld::experiments
