#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orad/body_io.hpp"
#include "orad/grassmann.hpp"
#include "orad/orlicz.hpp"
#include "orad/radii.hpp"
#include "orad/verify.hpp"

namespace py = pybind11;
using namespace orad;

namespace {

SearchBudget budget_from(int starts, int max_iters, std::uint64_t seed) {
  SearchBudget b;
  b.starts = starts;
  b.max_iters = max_iters;
  b.seed = seed;
  return b;
}

py::dict report_dict(const RadiiReport& r) {
  py::dict d;
  d["i"] = r.i;
  d["value"] = r.value;
  d["lower"] = r.lower;
  d["upper"] = r.upper;
  d["bound"] = to_string(r.bound_kind);
  d["frame"] = r.subspace.frame();
  return d;
}

ConvexBody as_body(py::object o) {
  if (py::isinstance<OrliczSumBody>(o)) return o.cast<const OrliczSumBody&>().as_body();
  return o.cast<ConvexBody>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Orlicz sums of convex bodies and their successive radii";

  // Translators run most recent first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<OrliczFunction>(m, "Phi")
      .def(py::init([](const std::string& d) { return parse_phi(d); }), py::arg("descriptor"))
      .def("__call__", &OrliczFunction::operator())
      .def("inverse", &OrliczFunction::inverse)
      .def_property_readonly("half_inverse", &OrliczFunction::half_inverse)
      .def_property_readonly("slab_radius", [](const OrliczFunction& f) { return f.constants().slab_radius; })
      .def_property_readonly("descriptor", &OrliczFunction::descriptor)
      .def("__repr__", [](const OrliczFunction& f) { return "Phi('" + f.descriptor() + "')"; });
  m.def("default_phis", &default_phi_set);

  py::class_<ConvexBody>(m, "Body")
      .def_static("from_vertices", &ConvexBody::from_vertices, py::arg("points"), "Vertices as columns.")
      .def_static("load", &load_body, py::arg("path"))
      .def_property_readonly("dimension", &ConvexBody::dimension)
      .def_property_readonly("is_polytope", &ConvexBody::is_polytope)
      .def_property_readonly("vertices", &ConvexBody::vertices)
      .def("support", &ConvexBody::support, py::arg("u"))
      .def("touching_point", &ConvexBody::touching_point, py::arg("u"))
      .def("save", [](const ConvexBody& b, const std::string& path) { save_body(b, path); });

  m.def("segment", &make_segment, py::arg("a"), py::arg("b"));
  m.def("cube", &make_cube, py::arg("axes"), py::arg("half_width") = 1.0, py::arg("center"));
  m.def("simplex", &make_simplex_Kn, py::arg("n"));
  m.def("random_polytope", &random_polytope, py::arg("n"), py::arg("vertices"), py::arg("seed") = 0);
  m.def("reflect", &reflect);
  m.def("minkowski_sum", &minkowski_sum);

  m.def("orlicz_support", &orlicz_support, py::arg("hK"), py::arg("hL"), py::arg("phi"));
  m.def("orlicz_norm", &orlicz_norm, py::arg("x"), py::arg("phi"));

  py::class_<OrliczSumBody>(m, "OrliczSum")
      .def(py::init(&orlicz_sum), py::arg("K"), py::arg("L"), py::arg("phi"))
      .def_property_readonly("dimension", &OrliczSumBody::dimension)
      .def("support", &OrliczSumBody::support, py::arg("u"))
      .def("touching_point", &OrliczSumBody::touching_point, py::arg("u"))
      .def("support_table", &OrliczSumBody::support_table, py::arg("directions"))
      .def("as_body", &OrliczSumBody::as_body);

  m.def("circumradius", [](py::object b) { return circumradius(as_body(b)).radius; });
  m.def("inradius", [](py::object b) { return inradius(as_body(b)).radius; });
  m.def("width", [](py::object b) { return width(as_body(b)).value; });
  m.def("diameter", [](py::object b) { return diameter(as_body(b)).value; });

  m.def(
      "outer_radius",
      [](py::object b, int i, int starts, int max_iters, std::uint64_t seed) {
        return report_dict(successive_outer_radius(as_body(b), i, budget_from(starts, max_iters, seed)));
      },
      py::arg("body"), py::arg("i"), py::arg("starts") = 64, py::arg("max_iters") = 200, py::arg("seed") = 1);
  m.def(
      "inner_radius",
      [](py::object b, int i, int starts, int max_iters, std::uint64_t seed) {
        return report_dict(successive_inner_radius(as_body(b), i, budget_from(starts, max_iters, seed)));
      },
      py::arg("body"), py::arg("i"), py::arg("starts") = 64, py::arg("max_iters") = 200, py::arg("seed") = 1);
  m.def(
      "radii",
      [](py::object b, int starts, int max_iters, std::uint64_t seed) {
        const RadiiSweep s = successive_radii(as_body(b), budget_from(starts, max_iters, seed));
        std::vector<double> outer, inner;
        for (const auto& r : s.outer) outer.push_back(r.value);
        for (const auto& r : s.inner) inner.push_back(r.value);
        return py::make_tuple(outer, inner);
      },
      py::arg("body"), py::arg("starts") = 64, py::arg("max_iters") = 200, py::arg("seed") = 1);

  m.def(
      "verify",
      [](std::vector<std::string> claims, std::vector<std::string> phis, std::vector<int> dims, std::uint64_t seed) {
        SuiteConfig cfg;
        cfg.claims = std::move(claims);
        if (!phis.empty()) {
          cfg.phis.clear();
          for (const auto& p : phis) cfg.phis.push_back(parse_phi(p));
        }
        cfg.dims = std::move(dims);
        cfg.seed = seed;
        SuiteReport rep;
        {
          py::gil_scoped_release release;
          rep = run_suite(cfg);
        }
        py::list rows;
        for (const auto& r : rep.results) {
          py::dict d;
          d["claim_id"] = r.claim_id;
          d["lhs"] = r.lhs;
          d["rhs"] = r.rhs;
          d["relation"] = to_string(r.relation);
          d["slack"] = r.slack;
          d["tolerance"] = r.tolerance;
          d["status"] = to_string(r.status);
          rows.append(d);
        }
        return rows;
      },
      py::arg("claims") = std::vector<std::string>{}, py::arg("phis") = std::vector<std::string>{},
      py::arg("dims") = std::vector<int>{2, 3, 4}, py::arg("seed") = 1);
}
