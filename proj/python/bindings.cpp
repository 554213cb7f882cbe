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

// Python bindings. Ideals are passed as strings in T ("T^2+1"); elements may
// be given as Element objects, expression strings or integers (indices).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "drinfeld/deformation.hpp"
#include "drinfeld/errors.hpp"
#include "experiment.hpp"

namespace py = pybind11;

namespace drinfeld::python {
namespace {

struct Algebra {
  AlgebraPtr ptr;
};

// Elements point at their algebra; the wrapper keeps it alive.
struct Element {
  AlgebraPtr alg;
  AlgebraElement x;
};

Element wrap(const AlgebraPtr& B, const AlgebraElement& x) { return {B, x}; }

std::vector<Element> wrap_all(const AlgebraPtr& B, const std::vector<AlgebraElement>& xs) {
  std::vector<Element> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(wrap(B, x));
  return out;
}

AlgebraElement to_element(const AlgebraPtr& B, const py::handle& h) {
  if (py::isinstance<Element>(h)) {
    const auto& e = h.cast<const Element&>();
    if (!e.alg->same_as(*B)) throw InvalidArgument("element of " + e.alg->describe() + " used in " + B->describe());
    return B->from_fp_coordinates(e.x.fp_coordinates());
  }
  if (py::isinstance<py::str>(h)) return B->parse(h.cast<std::string>());
  if (py::isinstance<py::int_>(h)) {
    const auto i = h.cast<std::uint64_t>();
    if (i >= B->cardinality()) throw InvalidArgument("element index out of range");
    return B->from_index(i);
  }
  throw InvalidArgument("expected an Element, an expression string or an index");
}

std::vector<AlgebraElement> to_elements(const AlgebraPtr& B, const py::sequence& seq) {
  std::vector<AlgebraElement> out;
  for (const auto& h : seq) out.push_back(to_element(B, h));
  return out;
}

APoly to_apoly(const DrinfeldModule& E, const std::string& a) { return APoly::parse(E.base()->ground_ptr(), a); }

LevelMode to_mode(const std::string& m) {
  if (m == "A") return LevelMode::A;
  if (m == "B") return LevelMode::B;
  throw InvalidArgument("mode must be 'A' or 'B'");
}

Element binary(const Element& a, const py::handle& b, AlgebraElement (*op)(const AlgebraElement&,
                                                                           const AlgebraElement&)) {
  return wrap(a.alg, op(a.x, to_element(a.alg, b)));
}

py::list images_list(const AlgebraPtr& B, const std::vector<LevelStructureCandidate>& set) {
  py::list out;
  for (const auto& c : set) out.append(wrap_all(B, c.basis_images));
  return out;
}

std::optional<experiments::Command> command_of(const std::string& name) {
  return experiments::command_from_string(name);
}

}  // namespace
}  // namespace drinfeld::python

PYBIND11_MODULE(_core, m) {
  using namespace drinfeld;
  using namespace drinfeld::python;
  m.doc() = "Drinfeld modules over finite local algebras: torsion, level structures, deformations";

  py::register_exception<Error>(m, "DrinfeldError", PyExc_ValueError);
  py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Algebra>(m, "Algebra")
      .def(py::init([](unsigned p, unsigned m, unsigned k, unsigned s, std::uint64_t max_card) {
             return Algebra{ArtinLocalAlgebra::make(GroundField::make(p, s), m, k, max_card)};
           }),
           py::arg("p"), py::arg("m") = 1, py::arg("k") = 1, py::arg("s") = 1, py::arg("max_card") = kDefaultMaxCard)
      .def_property_readonly("q", [](const Algebra& a) { return a.ptr->q(); })
      .def_property_readonly("m", [](const Algebra& a) { return a.ptr->m(); })
      .def_property_readonly("k", [](const Algebra& a) { return a.ptr->k(); })
      .def_property_readonly("cardinality", [](const Algebra& a) { return a.ptr->cardinality(); })
      .def_property_readonly("is_field", [](const Algebra& a) { return a.ptr->is_field(); })
      .def("element", [](const Algebra& a, const py::object& v) { return wrap(a.ptr, to_element(a.ptr, v)); })
      .def("elements", [](const Algebra& a) { return wrap_all(a.ptr, a.ptr->enumerate_elements()); })
      .def("maximal_ideal", [](const Algebra& a) { return wrap_all(a.ptr, a.ptr->maximal_ideal()); })
      .def("__repr__", [](const Algebra& a) { return a.ptr->describe(); });

  py::class_<Element>(m, "Element")
      .def_property_readonly("index", [](const Element& e) { return e.x.index(); })
      .def_property_readonly("is_unit", [](const Element& e) { return e.x.is_unit(); })
      .def_property_readonly("is_zero", [](const Element& e) { return e.x.is_zero(); })
      .def_property_readonly("algebra", [](const Element& e) { return Algebra{e.alg}; })
      .def("inverse", [](const Element& e) { return wrap(e.alg, e.x.inv()); })
      .def("frobenius", [](const Element& e, unsigned j) { return wrap(e.alg, e.x.frobenius(j)); }, py::arg("j") = 1)
      .def("__add__", [](const Element& a, const py::object& b) { return binary(a, b, [](auto& x, auto& y) { return x + y; }); })
      .def("__radd__", [](const Element& a, const py::object& b) { return binary(a, b, [](auto& x, auto& y) { return y + x; }); })
      .def("__sub__", [](const Element& a, const py::object& b) { return binary(a, b, [](auto& x, auto& y) { return x - y; }); })
      .def("__rsub__", [](const Element& a, const py::object& b) { return binary(a, b, [](auto& x, auto& y) { return y - x; }); })
      .def("__mul__", [](const Element& a, const py::object& b) { return binary(a, b, [](auto& x, auto& y) { return x * y; }); })
      .def("__rmul__", [](const Element& a, const py::object& b) { return binary(a, b, [](auto& x, auto& y) { return y * x; }); })
      .def("__neg__", [](const Element& a) { return wrap(a.alg, -a.x); })
      .def("__pow__", [](const Element& a, std::uint64_t n) { return wrap(a.alg, a.x.pow(n)); })
      .def("__eq__", [](const Element& a, const py::object& b) {
        try {
          return a.x == to_element(a.alg, b);
        } catch (const Error&) {
          return false;
        }
      })
      .def("__hash__", [](const Element& a) { return py::hash(py::make_tuple(a.alg->describe(), a.x.index())); })
      .def("__str__", [](const Element& e) { return e.x.to_string(); })
      .def("__repr__", [](const Element& e) { return "Element(" + e.x.to_string() + ")"; });

  py::class_<TwistedPoly>(m, "TwistedPoly")
      .def(py::init([](const Algebra& a, const py::sequence& cs) { return TwistedPoly(a.ptr, to_elements(a.ptr, cs)); }),
           py::arg("algebra"), py::arg("coefficients"))
      .def_property_readonly("degree", &TwistedPoly::degree)
      .def_property_readonly("coefficients", [](const TwistedPoly& f) { return wrap_all(f.base(), f.coeffs()); })
      .def("__call__", [](const TwistedPoly& f, const py::object& x) { return wrap(f.base(), f.eval(to_element(f.base(), x))); })
      .def("__add__", &TwistedPoly::operator+)
      .def("__sub__", py::overload_cast<const TwistedPoly&>(&TwistedPoly::operator-, py::const_))
      .def("__mul__", &TwistedPoly::operator*)
      .def("__eq__", &TwistedPoly::operator==)
      .def("right_divide", &TwistedPoly::right_divide)
      .def("inverse", &TwistedPoly::inverse)
      .def_property_readonly("is_separable", &TwistedPoly::is_separable)
      .def("__str__", &TwistedPoly::to_x_string)
      .def("__repr__", [](const TwistedPoly& f) { return "TwistedPoly(" + f.to_x_string() + ")"; });

  py::class_<DrinfeldModule>(m, "DrinfeldModule")
      .def(py::init([](const Algebra& a, const py::object& gamma, const py::sequence& cs) {
             return DrinfeldModule::make(a.ptr, to_element(a.ptr, gamma), to_elements(a.ptr, cs));
           }),
           py::arg("algebra"), py::arg("gamma"), py::arg("coefficients"))
      .def_property_readonly("algebra", [](const DrinfeldModule& E) { return Algebra{E.base()}; })
      .def_property_readonly("rank", &DrinfeldModule::rank)
      .def_property_readonly("gamma", [](const DrinfeldModule& E) { return wrap(E.base(), E.gamma()); })
      .def_property_readonly("e_T", &DrinfeldModule::e_T)
      .def_property_readonly("is_standard", &DrinfeldModule::is_standard)
      .def("e", [](const DrinfeldModule& E, const std::string& a) { return E.e_of(to_apoly(E, a)); }, py::arg("a"))
      .def("standardize", [](const DrinfeldModule& E) {
        auto s = standardize(E);
        return py::make_tuple(s.module, s.u);
      })
      .def("characteristic", [](const DrinfeldModule& E, unsigned max_degree) -> std::optional<std::string> {
             const auto c = characteristic_of(E, max_degree);
             if (!c.pi) return std::nullopt;
             return c.pi->to_string();
           },
           py::arg("max_degree") = 4)
      .def("height", [](const DrinfeldModule& E, const std::string& pi) { return height_of(E, to_apoly(E, pi)); })
      .def("__repr__", &DrinfeldModule::describe);

  m.def("division_polynomial", [](const DrinfeldModule& E, const std::string& a) { return division_poly(E, to_apoly(E, a)).h; },
        py::arg("module"), py::arg("a"));
  m.def("torsion_points",
        [](const DrinfeldModule& E, const std::string& a) { return wrap_all(E.base(), torsion_points(E, to_apoly(E, a)).points); },
        py::arg("module"), py::arg("a"));
  m.def("level_structures",
        [](const DrinfeldModule& E, const std::string& a, const std::string& mode) {
          return images_list(E.base(), LevelProblem(E, to_apoly(E, a)).enumerate(to_mode(mode)));
        },
        py::arg("module"), py::arg("a"), py::arg("mode") = "B");
  m.def("is_level_structure",
        [](const DrinfeldModule& E, const std::string& a, const py::sequence& images, const std::string& mode) {
          const LevelProblem P(E, to_apoly(E, a));
          LevelStructureCandidate c{to_elements(E.base(), images)};
          return P.is_well_defined(c) && P.satisfies(c, to_mode(mode));
        },
        py::arg("module"), py::arg("a"), py::arg("images"), py::arg("mode") = "B");
  m.def("equivalence",
        [](const DrinfeldModule& E, const std::string& a) {
          const auto r = equivalence_report(E, to_apoly(E, a));
          py::dict d;
          d["count_a"] = r.set_a.size();
          d["count_b"] = r.set_b.size();
          d["sets_equal"] = r.sets_equal;
          d["a_implies_b"] = r.a_implies_b;
          d["torsion_count"] = r.torsion_count;
          d["predicted_count"] = r.predicted_count;
          d["count_matches"] = r.count_matches;
          return d;
        },
        py::arg("module"), py::arg("a"));
  m.def("deformation_classes",
        [](const DrinfeldModule& E0, unsigned k, const py::object& offset, unsigned iso_degree) {
          auto B = ArtinLocalAlgebra::make(E0.base()->ground_ptr(), E0.base()->m(), k, E0.base()->max_card());
          AlgebraElement lift = to_element(B, offset);
          for (unsigned i = 0; i < E0.base()->dim(); ++i) lift[i] += E0.gamma()[i];
          const DeformationProblem P(E0, B, lift);
          const auto classes = deformation_classes(P, iso_degree ? iso_degree : 2 * E0.rank());
          std::vector<DrinfeldModule> reps;
          for (const auto& c : classes) reps.push_back(c.representative);
          return reps;
        },
        py::arg("special_fiber"), py::arg("k") = 2, py::arg("offset") = "0", py::arg("iso_degree") = 0);
  m.def("quotient_isogeny",
        [](const DrinfeldModule& E, const std::string& a) {
          const auto q = quotient_isogeny(E, division_poly(E, to_apoly(E, a)));
          py::dict d;
          d["target"] = q.target;
          d["kernel"] = q.kernel;
          d["f_T"] = q.f_T;
          d["kernel_separable"] = q.kernel_separable;
          d["identities_hold"] = q.identities_hold;
          d["gamma_preserved"] = q.gamma_preserved;
          return d;
        },
        py::arg("module"), py::arg("a"));
  m.def("run_command",
        [](const std::string& command, const std::string& config, unsigned jobs) {
          const auto cmd = command_of(command);
          if (!cmd) throw ParseError("unknown command '" + command + "'");
          const auto doc = config.empty() ? experiments::default_config(*cmd) : experiments::json::parse(config);
          const auto result = experiments::run(*cmd, experiments::parse_config(doc), {jobs, std::nullopt});
          return experiments::dump(result.document);
        },
        py::arg("command"), py::arg("config") = "", py::arg("jobs") = 1);
  m.def("default_config", [](const std::string& command) {
    const auto cmd = command_of(command);
    if (!cmd) throw ParseError("unknown command '" + command + "'");
    return experiments::dump(experiments::default_config(*cmd));
  });
}
