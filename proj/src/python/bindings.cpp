#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ybe/algebra.hpp"
#include "ybe/error.hpp"
#include "ybe/extensions.hpp"
#include "ybe/orbits.hpp"
#include "ybe/properties.hpp"
#include "ybe/racks.hpp"
#include "ybe/search.hpp"
#include "ybe/solution_file.hpp"

namespace py = pybind11;
using namespace ybe;

namespace {

py::dict flags_dict(const QuadraticSet& qs) {
  const auto rep = check_conditions(qs);
  py::dict d;
  for (Property p : all_properties())
    d[py::str(std::string(property_name(p)))] = py::make_tuple(rep.holds(p), rep[p].witness);
  return d;
}

std::vector<std::string> groebner_strings(const QuadraticSet& qs, int max_degree, std::vector<int> ordering,
                                          int min_degree) {
  const auto gb = groebner(reduced_relations(qs, std::move(ordering)), max_degree);
  std::vector<std::string> out;
  for (const auto& p : gb.of_degree_at_least(min_degree)) out.push_back(format_polynomial(p, qs.size(), 1));
  return out;
}

}  // namespace

PYBIND11_MODULE(_ybe, m) {
  m.doc() = "Finite quadratic sets, their braid relation checks and Yang-Baxter algebras";

  static py::exception<Error> error_type(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = error_kind_name(e.kind());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<QuadraticSet>(m, "QuadraticSet")
      .def_static("from_table", &QuadraticSet::from_table, py::arg("n"), py::arg("table"),
                  "table[x * n + y] = r(x, y), labels from 0")
      .def_static("trivial", &QuadraticSet::trivial, py::arg("n"))
      .def_static("from_json", [](const std::string& text) { return SolutionFile::parse(text).qs; })
      .def_static("load", [](const std::string& path) { return SolutionFile::load(path).qs; })
      .def("to_json", [](const QuadraticSet& qs) { return SolutionFile{qs, {}}.serialize(); })
      .def_property_readonly("n", &QuadraticSet::size)
      .def_property_readonly("table", &QuadraticSet::table)
      .def("r", &QuadraticSet::r, py::arg("x"), py::arg("y"))
      .def("relabel", [](const QuadraticSet& qs, std::vector<int> images) { return qs.relabel(Permutation(std::move(images))); })
      .def("__eq__", [](const QuadraticSet& a, const QuadraticSet& b) { return a == b; })
      .def("__repr__", [](const QuadraticSet& qs) { return "<QuadraticSet n=" + std::to_string(qs.size()) + ">"; });

  m.def("check_conditions", &flags_dict, py::arg("qs"), "Property name -> (holds, witness)");
  m.def("order_of_r", &order_of_r, py::arg("qs"));
  m.def("r_orbit_lengths", [](const QuadraticSet& qs) { return r_orbits(qs).lengths; }, py::arg("qs"));
  m.def("graded_dims", [](const QuadraticSet& qs, int max_degree) { return graded_dims(qs, max_degree); },
        py::arg("qs"), py::arg("max_degree"));
  m.def("groebner", &groebner_strings, py::arg("qs"), py::arg("max_degree") = 6,
        py::arg("ordering") = std::vector<int>{}, py::arg("min_degree") = 2,
        "Basis elements of degree >= min_degree as 1-based 'word-word' strings");
  m.def("is_pbw", [](const QuadraticSet& qs) { return is_pbw(qs).pbw; }, py::arg("qs"));
  m.def("dihedral_quandle", [](int p) { return dihedral_quandle(p).base; }, py::arg("p"));
  m.def("affine_quandle", [](int n, int g) { return affine_quandle(n, g).base; }, py::arg("n"), py::arg("g"));
  m.def("canonical_form", &canonical_form, py::arg("qs"));
  m.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"));
  m.def("enumerate", [](int n, const std::string& filter) { return enumerate_all(n, SearchFilter::parse(filter)); },
        py::arg("n"), py::arg("filter") = "", "One canonical set per isomorphism class");
  m.def(
      "extend",
      [](const QuadraticSet& x, const QuadraticSet& y, const std::string& sigma, const std::string& tau) {
        return build_sigma_tau({x, y, Permutation::from_cycles(x.size(), sigma), Permutation::from_cycles(y.size(), tau)});
      },
      py::arg("x"), py::arg("y"), py::arg("sigma") = "()", py::arg("tau") = "()");
  m.def("is_indecomposable", [](const QuadraticSet& qs) { return is_indecomposable(qs).indecomposable; },
        py::arg("qs"));
}
