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

#include "experiment.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "drinfeld/errors.hpp"

namespace drinfeld::experiments {

const char* to_string(Command c) {
  switch (c) {
    case Command::Torsion:
      return "torsion";
    case Command::Equivalence:
      return "equivalence";
    case Command::Tangent:
      return "tangent";
    case Command::Isogeny:
      return "isogeny";
  }
  return "?";
}

std::optional<Command> command_from_string(const std::string& name) {
  for (auto c : {Command::Torsion, Command::Equivalence, Command::Tangent, Command::Isogeny})
    if (name == to_string(c)) return c;
  return std::nullopt;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 0xf];
  return s;
}

// ---------------------------------------------------------------------------
// Config parsing

namespace {

bool is_count(const json& v) { return v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0); }

unsigned get_unsigned(const json& c, const char* key, unsigned fallback, const std::string& where) {
  if (!c.contains(key)) return fallback;
  const json& v = c.at(key);
  if (!is_count(v)) throw ParseError(where + "." + key + ": expected a non-negative integer");
  return v.get<unsigned>();
}

std::uint64_t get_u64(const json& c, const char* key, std::uint64_t fallback, const std::string& where) {
  if (!c.contains(key)) return fallback;
  const json& v = c.at(key);
  if (!is_count(v)) throw ParseError(where + "." + key + ": expected a non-negative integer");
  return v.get<std::uint64_t>();
}

std::vector<json> expand_grid(const json& grid) {
  if (!grid.is_object()) throw ParseError("grid: expected an object");
  std::vector<std::string> axes;
  if (grid.contains("axes")) {
    if (!grid.at("axes").is_array()) throw ParseError("grid.axes: expected an array of keys");
    for (const auto& a : grid.at("axes")) {
      if (!a.is_string()) throw ParseError("grid.axes: expected an array of keys");
      if (!grid.contains(a.get<std::string>()) || !grid.at(a.get<std::string>()).is_array())
        throw ParseError("grid.axes: '" + a.get<std::string>() + "' is not an array-valued grid entry");
      axes.push_back(a.get<std::string>());
    }
  }
  json shared = json::object();
  for (const auto& [key, value] : grid.items()) {
    if (key == "axes") continue;
    if (value.is_array()) {
      if (value.empty()) throw ParseError("grid." + key + ": empty axis");
      if (std::find(axes.begin(), axes.end(), key) == axes.end()) axes.push_back(key);
    } else {
      shared[key] = value;
    }
  }
  std::vector<json> out{shared};
  for (const auto& axis : axes) {
    std::vector<json> next;
    for (const auto& partial : out)
      for (const auto& v : grid.at(axis)) {
        json c = partial;
        c[axis] = v;
        next.push_back(std::move(c));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

Config parse_config(const json& doc) {
  if (!doc.is_object()) throw ParseError("config: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "bounds" && key != "cases" && key != "grid" && key != "description")
      throw ParseError("config: unknown key '" + key + "'");
  }
  Config cfg;
  if (doc.contains("bounds")) {
    const json& b = doc.at("bounds");
    if (!b.is_object()) throw ParseError("bounds: expected an object");
    cfg.bounds.max_card = get_u64(b, "max_card", cfg.bounds.max_card, "bounds");
    cfg.bounds.iso_degree = get_unsigned(b, "iso_degree", cfg.bounds.iso_degree, "bounds");
    cfg.bounds.split_degree = get_unsigned(b, "split_degree", cfg.bounds.split_degree, "bounds");
    cfg.bounds.char_degree = get_unsigned(b, "char_degree", cfg.bounds.char_degree, "bounds");
  }
  if (doc.contains("cases")) {
    if (!doc.at("cases").is_array()) throw ParseError("cases: expected an array");
    for (std::size_t i = 0; i < doc.at("cases").size(); ++i) {
      if (!doc.at("cases")[i].is_object()) throw ParseError("cases[" + std::to_string(i) + "]: expected an object");
      cfg.cases.push_back(doc.at("cases")[i]);
    }
  }
  if (doc.contains("grid")) {
    for (auto& c : expand_grid(doc.at("grid"))) cfg.cases.push_back(std::move(c));
  }
  if (cfg.cases.empty()) throw ParseError("config: no cases");
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_config(doc);
}

json default_config(Command c) {
  const json bases = json::array({json::array({1, 1}), json::array({2, 1}), json::array({1, 2}), json::array({1, 3}),
                                  json::array({2, 2})});
  const json shapes = json::array({json::array({"1"}), json::array({"0", "1"}), json::array({"1", "1"})});
  const json gammas = json::array({"0", "Y", "1", "1+Y"});
  const json primes = json::array({"T", "T+1", "irreducible:2"});
  json grid = {{"axes", {"p", "base", "coefficients", "gamma", "prime", "exponent"}},
               {"p", {2, 3}},
               {"base", bases},
               {"coefficients", shapes},
               {"gamma", gammas},
               {"prime", primes},
               {"exponent", {1, 2}}};
  switch (c) {
    case Command::Equivalence:
    case Command::Torsion:
      return {{"description", std::string(to_string(c)) + " grid"}, {"bounds", json::object()}, {"grid", grid}};
    case Command::Isogeny:
      return {{"description", "isogeny grid"},
              {"bounds", json::object()},
              {"cases", json::array({{{"p", 2}, {"gamma", "0"}, {"coefficients", {"1"}}, {"prime", "T"}, {"exponent", 0}},
                                     {{"p", 2}, {"m", 2}, {"gamma", "w"}, {"coefficients", {"1"}}, {"prime", "T"}}})},
              {"grid", grid}};
    case Command::Tangent:
      return {{"description", "tangent grid"},
              {"bounds", json::object()},
              {"grid",
               {{"axes", {"p", "m", "coefficients", "gamma", "lift"}},
                {"p", {2, 3}},
                {"m", {1, 2}},
                {"k", 2},
                {"coefficients", shapes},
                {"gamma", {"0", "1"}},
                {"lift", {"0", "Y"}},
                {"level_ideal", "T"},
                {"iota_samples", 2}}}};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Case building blocks

AlgebraPtr base_of(const json& c, std::uint64_t max_card, const std::string& where) {
  if (!c.contains("p")) throw ParseError(where + ": missing p");
  const unsigned p = get_unsigned(c, "p", 0, where);
  const unsigned s = get_unsigned(c, "s", 1, where);
  unsigned m = get_unsigned(c, "m", 1, where);
  unsigned k = get_unsigned(c, "k", 1, where);
  if (c.contains("base")) {
    const json& b = c.at("base");
    if (!b.is_array() || b.size() != 2 || !is_count(b[0]) || !is_count(b[1]))
      throw ParseError(where + ".base: expected [m, k]");
    m = b[0].get<unsigned>();
    k = b[1].get<unsigned>();
  }
  try {
    return ArtinLocalAlgebra::make(GroundField::make(p, s), m, k, max_card);
  } catch (const InvalidArgument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

AlgebraElement element_of(const AlgebraPtr& B, const json& v, const std::string& where) {
  try {
    if (v.is_string()) return B->parse(v.get<std::string>());
    if (v.is_number_integer()) return B->parse(std::to_string(v.get<long long>()));
    if (v.is_array()) {
      std::vector<unsigned> digits;
      for (const auto& d : v) {
        if (!is_count(d)) throw ParseError("expected F_p digits");
        digits.push_back(d.get<unsigned>());
      }
      return B->from_fp_coordinates(digits);
    }
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected an expression string or an array of F_p coordinates");
}

DrinfeldModule module_of(const AlgebraPtr& B, const json& c, const std::string& where) {
  const json gamma = c.contains("gamma") ? c.at("gamma") : json("0");
  if (!c.contains("coefficients") || !c.at("coefficients").is_array())
    throw ParseError(where + ".coefficients: expected an array");
  std::vector<AlgebraElement> cs;
  for (std::size_t i = 0; i < c.at("coefficients").size(); ++i)
    cs.push_back(element_of(B, c.at("coefficients")[i], where + ".coefficients[" + std::to_string(i) + "]"));
  try {
    return DrinfeldModule::make(B, element_of(B, gamma, where + ".gamma"), std::move(cs));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

APoly apoly_of(const GroundFieldPtr& F, const json& v, const std::string& where) {
  if (v.is_string()) {
    const std::string text = v.get<std::string>();
    const std::string tag = "irreducible:";
    if (text.rfind(tag, 0) == 0) {
      unsigned n = 0;
      try {
        n = static_cast<unsigned>(std::stoul(text.substr(tag.size())));
      } catch (const std::exception&) {
        throw ParseError(where + ": bad degree in '" + text + "'");
      }
      if (n == 0) throw ParseError(where + ": degree must be positive");
      return APoly(F, poly::least_irreducible(*F, n));
    }
    try {
      return APoly::parse(F, text);
    } catch (const Error& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (v.is_array()) {
    ScalarPoly cs;
    for (const auto& x : v) {
      if (!is_count(x) || x.get<unsigned>() >= F->q())
        throw ParseError(where + ": coefficients must be integers below q");
      cs.push_back(static_cast<Scalar>(x.get<unsigned>()));
    }
    return APoly(F, cs);
  }
  throw ParseError(where + ": expected a polynomial in T");
}

APoly ideal_of(const GroundFieldPtr& F, const json& c, const std::string& where) {
  if (c.contains("ideal")) {
    APoly a = apoly_of(F, c.at("ideal"), where + ".ideal");
    if (!a.is_monic()) throw ParseError(where + ".ideal: generator must be monic");
    return a;
  }
  if (!c.contains("prime")) throw ParseError(where + ": missing ideal or prime");
  const APoly pi = apoly_of(F, c.at("prime"), where + ".prime");
  if (!pi.is_monic() || pi.degree() < 1 || !pi.is_irreducible())
    throw ParseError(where + ".prime: " + pi.to_string() + " is not a monic irreducible");
  return pi.pow(get_unsigned(c, "exponent", 1, where));
}

// ---------------------------------------------------------------------------
// Commands

namespace {

json element_json(const AlgebraElement& x) { return {{"fp", x.fp_coordinates()}, {"expr", x.to_string()}}; }

json images_json(const LevelStructureCandidate& c) {
  json out = json::array();
  for (const auto& y : c.basis_images) out.push_back(element_json(y));
  return out;
}

json factorization_json(const APoly& a) {
  json out = json::array();
  for (const auto& [pi, n] : a.factor()) out.push_back({{"prime", pi.to_string()}, {"exponent", n}});
  return out;
}

// Standardizes silently non-standard input and records the fact.
DrinfeldModule standard_module(const AlgebraPtr& B, const json& c, const std::string& where, json& rec) {
  DrinfeldModule E = module_of(B, c, where);
  rec["standardized"] = !E.is_standard();
  if (!E.is_standard()) E = standardize(E).module;
  return E;
}

void module_fields(json& rec, const DrinfeldModule& E) {
  rec["base"] = E.base()->describe();
  rec["non_reduced"] = !E.base()->is_field();
  rec["rank"] = E.rank();
  rec["gamma"] = element_json(E.gamma());
  rec["e_T"] = E.e_T().to_x_string();
}

APoly coprime_partner(const GroundFieldPtr& F, const APoly& a) {
  for (const char* t : {"T", "T+1"}) {
    const APoly b = APoly::parse(F, t);
    if (!b.divides(a)) return b;
  }
  return APoly(F, poly::least_irreducible(*F, 2));
}

struct CaseOutcome {
  json record;
  std::string key;
};

std::string module_key(const DrinfeldModule& E) {
  std::string k = E.base()->describe() + "|";
  for (const auto& c : E.e_T().coeffs()) k += std::to_string(c.index()) + ",";
  return k;
}

json run_equivalence(const json& c, const Bounds& b, const std::string& where) {
  json rec;
  const AlgebraPtr B = base_of(c, b.max_card, where);
  const DrinfeldModule E = standard_module(B, c, where, rec);
  const APoly a = ideal_of(B->ground_ptr(), c, where);
  if (a.degree() < 1) throw ParseError(where + ": level ideal must be a proper nonzero ideal");
  module_fields(rec, E);
  rec["ideal"] = a.to_string();
  rec["factorization"] = factorization_json(a);
  const EquivalenceReport r = equivalence_report(E, a);
  rec["prime_ideal"] = r.prime_ideal;
  rec["definitions_coincide"] = r.prime_ideal;
  rec["torsion_count"] = r.torsion_count;
  rec["candidates"] = r.candidates;
  rec["count_a"] = r.set_a.size();
  rec["count_b"] = r.set_b.size();
  rec["sets_equal"] = r.sets_equal;
  rec["a_implies_b"] = r.a_implies_b;
  rec["hash_a"] = hex64(r.hash_a);
  rec["hash_b"] = hex64(r.hash_b);
  rec["predicted_count"] = r.predicted_count ? json(*r.predicted_count) : json(nullptr);
  rec["count_matches"] = r.count_matches;
  rec["witness"] = r.witness ? json{{"side", r.witness_side}, {"images", images_json(*r.witness)}} : json(nullptr);
  json structures = json::array();
  for (std::size_t i = 0; i < r.set_a.size() && i < 8; ++i) structures.push_back(images_json(r.set_a[i]));
  rec["first_structures"] = structures;
  rec["status"] = r.ok() ? "pass" : "fail";
  return rec;
}

json run_torsion(const json& c, const Bounds& b, const std::string& where) {
  json rec;
  const AlgebraPtr B = base_of(c, b.max_card, where);
  const DrinfeldModule E = standard_module(B, c, where, rec);
  const GroundFieldPtr& F = B->ground_ptr();
  if (!c.contains("prime")) throw ParseError(where + ": missing prime");
  const APoly pi = apoly_of(F, c.at("prime"), where + ".prime");
  if (!pi.is_monic() || pi.degree() < 1 || !pi.is_irreducible())
    throw ParseError(where + ".prime: " + pi.to_string() + " is not a monic irreducible");
  const unsigned n = get_unsigned(c, "exponent", 1, where);
  if (n == 0) throw ParseError(where + ".exponent: must be at least 1");
  const APoly a = pi.pow(n);
  module_fields(rec, E);
  rec["prime"] = pi.to_string();
  rec["exponent"] = n;
  rec["ideal"] = a.to_string();
  const auto h = division_poly(E, a);
  rec["division_polynomial"] = h.h.to_x_string();
  rec["division_degree_log_q"] = h.h.degree();
  rec["torsion_count_base"] = torsion_points(E, a).size();
  const auto ch = characteristic_of(E, b.char_degree);
  rec["characteristic"] = ch.pi ? json(ch.pi->to_string()) : json(nullptr);
  const bool at_char = pi.evaluate(E.gamma()).is_nilpotent();
  rec["at_characteristic"] = at_char;

  bool ok = true;
  RingHom to = RingHom::identity(B);
  rec["status"] = "pass";
  if (B->is_field()) {
    rec["height"] = at_char ? json(height_of(E, pi)) : json(nullptr);
    try {
      const auto split = splitting_extension(E, a, b.split_degree, b.max_card);
      to = split.embedding;
      rec["splitting"] = {{"factor", split.factor}, {"field", split.embedding.target()->describe()},
                          {"count", split.count}};
      const auto ms = module_structure(E, pi, n, to);
      rec["structure"] = ms.structure.describe();
      rec["exponents"] = ms.structure.exponents;
      rec["filtration_counts"] = ms.filtration_counts;
      rec["expected_rank"] = ms.expected_rank;
      rec["structure_matches"] = ms.matches_prediction;
      ok = ok && ms.matches_prediction;
    } catch (const BoundExceeded& e) {
      rec["splitting"] = nullptr;
      rec["structure"] = nullptr;
      rec["status"] = "bound_exceeded";
      rec["message"] = e.what();
    }
  } else {
    rec["height"] = nullptr;
    rec["splitting"] = nullptr;
    rec["structure"] = nullptr;
  }
  const APoly partner = coprime_partner(F, a);
  const auto pr = property_checks(E, a, partner, to);
  rec["properties"] = {{"coprime_with", partner.to_string()}, {"over", to.target()->describe()},
                       {"degree_ok", pr.degree_ok},           {"coprime_split_ok", pr.coprime_split_ok},
                       {"etale_ok", pr.etale_ok},             {"base_change_ok", pr.base_change_ok},
                       {"count_a", pr.count_a},               {"count_b", pr.count_b},
                       {"count_ab", pr.count_ab},             {"failures", pr.failures}};
  ok = ok && pr.ok();
  if (!ok) rec["status"] = "fail";
  return rec;
}

json run_isogeny(const json& c, const Bounds& b, const std::string& where) {
  json rec;
  const AlgebraPtr B = base_of(c, b.max_card, where);
  const DrinfeldModule E = standard_module(B, c, where, rec);
  const GroundFieldPtr& F = B->ground_ptr();
  if (!c.contains("prime")) throw ParseError(where + ": missing prime");
  const APoly pi = apoly_of(F, c.at("prime"), where + ".prime");
  if (!pi.is_monic() || pi.degree() < 1 || !pi.is_irreducible())
    throw ParseError(where + ".prime: " + pi.to_string() + " is not a monic irreducible");
  const unsigned n = get_unsigned(c, "exponent", 1, where);
  const APoly a = pi.pow(n);
  module_fields(rec, E);
  rec["prime"] = pi.to_string();
  rec["exponent"] = n;
  rec["ideal"] = a.to_string();
  const auto h = division_poly(E, a);
  rec["kernel"] = h.h.to_x_string();
  const bool unit = n == 0 || pi.evaluate(E.gamma()).is_unit();
  rec["gamma_prime_unit"] = unit;
  try {
    const QuotientIsogeny q = quotient_isogeny(E, h);
    rec["f_T"] = q.f_T.to_x_string();
    rec["target"] = q.target.describe();
    rec["target_rank"] = q.target.rank();
    rec["remainder"] = "0";
    rec["kernel_separable"] = q.kernel_separable;
    rec["separability_matches"] = q.kernel_separable == unit;
    rec["identities_hold"] = q.identities_hold;
    rec["gamma_preserved"] = q.gamma_preserved;
    const bool ok = q.identities_hold && q.kernel_separable == unit && q.gamma_preserved;
    rec["status"] = ok ? "pass" : "fail";
  } catch (const KernelNotStable& e) {
    rec["remainder"] = e.what();
    rec["status"] = "fail";
  }
  return rec;
}

std::vector<std::size_t> spread(std::size_t n, std::size_t samples) {
  std::vector<std::size_t> out;
  if (n == 0) return out;
  if (samples == 0 || samples >= n) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(i);
    return out;
  }
  for (std::size_t i = 0; i < samples; ++i) out.push_back(i * (n - 1) / (samples > 1 ? samples - 1 : 1));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json run_tangent(const json& c, const Bounds& b, const std::string& where) {
  json rec;
  json field_spec = c;
  field_spec["k"] = 1;
  field_spec.erase("base");
  const AlgebraPtr l = base_of(field_spec, b.max_card, where);
  const unsigned k = get_unsigned(c, "k", 2, where);
  if (k < 1) throw ParseError(where + ".k: must be at least 1");
  json ring_spec = field_spec;
  ring_spec["k"] = k;
  const AlgebraPtr B = base_of(ring_spec, b.max_card, where);
  const DrinfeldModule E0 = module_of(l, c, where);
  AlgebraElement lift = B->zero();
  if (c.contains("gamma_lift")) {
    lift = element_of(B, c.at("gamma_lift"), where + ".gamma_lift");
  } else {
    // gamma_0 placed in the Y^0 block, plus an optional offset.
    const AlgebraElement g0 = E0.gamma();
    for (unsigned i = 0; i < l->dim(); ++i) lift[i] = g0[i];
    if (c.contains("lift")) lift += element_of(B, c.at("lift"), where + ".lift");
  }
  std::optional<DeformationProblem> P;
  try {
    P.emplace(E0, B, lift);
  } catch (const InvalidArgument& e) {
    throw ParseError(where + ": " + e.what());
  }
  const unsigned d = E0.rank();
  const unsigned D = b.iso_degree ? b.iso_degree : 2 * d;
  rec["residue_field"] = l->describe();
  rec["base"] = B->describe();
  rec["rank"] = d;
  rec["special_fiber"] = E0.e_T().to_x_string();
  rec["gamma_lift"] = element_json(lift);
  rec["iso_degree"] = D;
  rec["status"] = "pass";
  bool ok = true;
  const auto defs = enumerate_deformations(*P);
  rec["deformations"] = defs.size();
  const auto classes = deformation_classes(*P, D);
  const auto classes_next = deformation_classes(*P, D + 1);
  rec["classes"] = classes.size();
  rec["classes_next_bound"] = classes_next.size();
  rec["bound_stable"] = classes.size() == classes_next.size();
  ok = ok && classes.size() == classes_next.size();
  if (k == 2) {
    std::uint64_t expected = 1;
    for (unsigned i = 0; i + 1 < d; ++i) expected *= l->cardinality();
    rec["expected_classes"] = expected;
    rec["tangent_matches"] = expected == classes.size();
    ok = ok && expected == classes.size();
  } else {
    rec["expected_classes"] = nullptr;
    rec["tangent_matches"] = nullptr;
  }
  json lifts = json::array();
  if (c.contains("level_ideal")) {
    const APoly a = apoly_of(l->ground_ptr(), c.at("level_ideal"), where + ".level_ideal");
    if (!a.is_monic() || a.degree() < 1) throw ParseError(where + ".level_ideal: expected a monic nonconstant generator");
    rec["level_ideal"] = a.to_string();
    const LevelProblem L(E0, a);
    const auto iotas = L.enumerate(LevelMode::B);
    rec["special_level_structures"] = iotas.size();
    for (std::size_t i : spread(iotas.size(), get_unsigned(c, "iota_samples", 0, where))) {
      const auto la = level_deformation_classes(*P, a, iotas[i], LevelMode::A, D);
      const auto lb = level_deformation_classes(*P, a, iotas[i], LevelMode::B, D);
      const bool same = la.pairs == lb.pairs && la.classes == lb.classes;
      lifts.push_back({{"iota0", images_json(iotas[i])},
                       {"pairs_a", la.pairs.size()},
                       {"pairs_b", lb.pairs.size()},
                       {"classes_a", la.classes},
                       {"classes_b", lb.classes},
                       {"sets_equal", same},
                       {"transport_misses", la.transport_misses + lb.transport_misses}});
      ok = ok && same && la.transport_misses == 0 && lb.transport_misses == 0;
    }
  } else {
    rec["level_ideal"] = nullptr;
  }
  rec["level_lifts"] = lifts;
  if (!ok) rec["status"] = "fail";
  return rec;
}

std::string case_key(Command cmd, const json& c, const Bounds& b, const std::string& where) {
  const AlgebraPtr B = base_of(c, b.max_card, where);
  switch (cmd) {
    case Command::Tangent: {
      json f = c;
      f.erase("base");
      return f.dump();
    }
    case Command::Equivalence: {
      DrinfeldModule E = module_of(B, c, where);
      return module_key(E) + "|" + ideal_of(B->ground_ptr(), c, where).to_string();
    }
    case Command::Torsion:
    case Command::Isogeny: {
      DrinfeldModule E = module_of(B, c, where);
      const APoly pi = apoly_of(B->ground_ptr(), c.contains("prime") ? c.at("prime") : json("T"), where + ".prime");
      return module_key(E) + "|" + pi.to_string() + "^" + std::to_string(get_unsigned(c, "exponent", 1, where));
    }
  }
  return {};
}

// Optional "expect": {"field": value, ...} pins record fields; any mismatch
// turns the case into a failure.
void check_expectations(const json& c, json& rec, const std::string& where) {
  if (!c.contains("expect")) return;
  if (!c.at("expect").is_object()) throw ParseError(where + ".expect: expected an object");
  json mismatches = json::array();
  for (const auto& [key, value] : c.at("expect").items()) {
    const json actual = rec.contains(key) ? rec.at(key) : json(nullptr);
    if (actual != value) mismatches.push_back({{"field", key}, {"expected", value}, {"actual", actual}});
  }
  rec["expectation_mismatches"] = mismatches;
  if (!mismatches.empty() && rec.at("status") == "pass") rec["status"] = "fail";
}

json run_case(Command cmd, const json& c, const Bounds& b, const std::string& where) {
  switch (cmd) {
    case Command::Equivalence:
      return run_equivalence(c, b, where);
    case Command::Torsion:
      return run_torsion(c, b, where);
    case Command::Isogeny:
      return run_isogeny(c, b, where);
    case Command::Tangent:
      return run_tangent(c, b, where);
  }
  return {};
}

void flatten(const json& j, const std::string& prefix, std::map<std::string, std::string>& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (j.is_string()) {
    out[prefix] = j.get<std::string>();
  } else if (j.is_null()) {
    out[prefix] = "";
  } else {
    out[prefix] = j.dump();
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

RunResult run(Command cmd, const Config& config, const RunOptions& opts) {
  Bounds bounds = config.bounds;
  if (opts.max_card) bounds.max_card = *opts.max_card;

  // Deduplicate in config order; grid cases that coincide on a field base
  // (Y = 0 there) collapse onto the first occurrence.
  std::vector<std::size_t> selected;
  json duplicates = json::array();
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < config.cases.size(); ++i) {
    const std::string where = "cases[" + std::to_string(i) + "]";
    std::string key;
    try {
      key = case_key(cmd, config.cases[i], bounds, where);
    } catch (const BoundExceeded&) {
      key = "#" + std::to_string(i);
    }
    const auto [it, fresh] = seen.emplace(key, i);
    if (fresh) {
      selected.push_back(i);
    } else {
      duplicates.push_back({{"case", i}, {"duplicate_of", it->second}});
    }
  }

  std::vector<json> records(selected.size());
  std::vector<double> millis(selected.size(), 0.0);
  std::vector<std::exception_ptr> errors(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t n = next++; n < selected.size(); n = next++) {
      const std::size_t i = selected[n];
      const std::string where = "cases[" + std::to_string(i) + "]";
      const auto start = std::chrono::steady_clock::now();
      try {
        json rec;
        try {
          rec = run_case(cmd, config.cases[i], bounds, where);
          check_expectations(config.cases[i], rec, where);
        } catch (const BoundExceeded& e) {
          rec = {{"status", "bound_exceeded"}, {"message", e.what()}};
        }
        json out = {{"case", i}, {"input", config.cases[i]}};
        out.update(rec);
        records[n] = std::move(out);
      } catch (...) {
        errors[n] = std::current_exception();
      }
      millis[n] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const unsigned jobs = std::max(1u, opts.jobs);
  const auto start = std::chrono::steady_clock::now();
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  const double total = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  RunResult result;
  std::size_t passed = 0;
  for (const auto& r : records) {
    const std::string status = r.at("status").get<std::string>();
    passed += status == "pass";
    result.failed += status == "fail";
    result.bound_exceeded += status == "bound_exceeded";
  }
  json summary = {{"cases", records.size()},
                  {"passed", passed},
                  {"failed", result.failed},
                  {"bound_exceeded", result.bound_exceeded},
                  {"duplicates_skipped", duplicates.size()},
                  {"all_pass", result.failed == 0 && result.bound_exceeded == 0}};
  json payload = {{"command", to_string(cmd)},
                  {"bounds",
                   {{"max_card", bounds.max_card},
                    {"iso_degree", bounds.iso_degree},
                    {"split_degree", bounds.split_degree},
                    {"char_degree", bounds.char_degree}}},
                  {"cases", records},
                  {"duplicates", duplicates},
                  {"summary", summary}};
  json timing = {{"jobs", jobs}, {"total_ms", total}, {"case_ms", millis}};
  result.document = {{"command", to_string(cmd)},
                     {"payload", payload},
                     {"payload_hash", hex64(fnv1a(payload.dump()))},
                     {"timing", timing}};

  std::vector<std::map<std::string, std::string>> flat;
  std::set<std::string> keys;
  for (const auto& r : records) {
    std::map<std::string, std::string> row;
    flatten(r, "", row);
    for (const auto& [key, value] : row) keys.insert(key);
    flat.push_back(std::move(row));
  }
  result.csv_header.assign(keys.begin(), keys.end());
  for (auto& row : flat) {
    std::vector<std::string> cells;
    for (const auto& key : result.csv_header) cells.push_back(row.count(key) ? row[key] : "");
    result.csv_rows.push_back(std::move(cells));
  }
  return result;
}

std::string to_csv(const RunResult& r) {
  std::ostringstream out;
  for (std::size_t i = 0; i < r.csv_header.size(); ++i) out << (i ? "," : "") << csv_cell(r.csv_header[i]);
  out << "\n";
  for (const auto& row : r.csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << "\n";
  }
  return out.str();
}

}  // namespace drinfeld::experiments
