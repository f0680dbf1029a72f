// Python extension pmgraph._core. Numbers cross the boundary as strings;
// the pure-Python layer converts them to Fraction / float / Decimal.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pmg/errors.hpp"
#include "pmg/families.hpp"
#include "pmg/graph.hpp"
#include "pmg/invariants.hpp"
#include "pmg/io.hpp"
#include "pmg/linalg.hpp"

namespace py = pybind11;

namespace {

using StringMatrix = std::vector<std::vector<std::string>>;

template <class S>
StringMatrix to_strings(const pmg::DenseMatrix<S>& m, int digits) {
  StringMatrix out(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = pmg::format_scalar(m(i, j), digits);
  }
  return out;
}

template <class S>
py::tuple system_matrices(const pmg::PMGraph& graph, pmg::InverseVariant variant, int digits) {
  pmg::LaplacianSystem<S> sys = pmg::make_laplacian_system<S>(graph, variant);
  return py::make_tuple(sys.ordering, to_strings(sys.laplacian, digits), to_strings(sys.pseudo_inverse, digits));
}

py::tuple matrices(const pmg::PMGraph& graph, const std::string& mode, int digits, const std::string& inverse) {
  pmg::InverseVariant variant = pmg::parse_inverse_variant(inverse);
  switch (pmg::parse_mode(mode)) {
    case pmg::ScalarMode::exact:
      return system_matrices<pmg::Rational>(graph, variant, digits);
    case pmg::ScalarMode::machine:
      return system_matrices<double>(graph, variant, digits);
    case pmg::ScalarMode::bigfloat: {
      pmg::PrecisionScope scope(static_cast<unsigned>(digits));
      return system_matrices<pmg::BigFloat>(graph, variant, digits);
    }
  }
  return py::tuple();
}

std::string tau(const pmg::PMGraph& graph, const std::string& mode, int digits) {
  switch (pmg::parse_mode(mode)) {
    case pmg::ScalarMode::exact:
      return pmg::to_string(pmg::compute_tau<pmg::Rational>(graph));
    case pmg::ScalarMode::machine:
      return pmg::format_scalar(pmg::compute_tau<double>(graph), digits);
    case pmg::ScalarMode::bigfloat: {
      pmg::PrecisionScope scope(static_cast<unsigned>(digits));
      return pmg::format_scalar(pmg::compute_tau<pmg::BigFloat>(graph), digits);
    }
  }
  return {};
}

py::dict report_dict(const pmg::FormattedReport& r) {
  py::dict out;
  out["mode"] = r.mode;
  out["g"] = r.g;
  out["gbar"] = r.gbar;
  py::dict values, ratios;
  for (const auto& [k, v] : r.values) values[py::str(k)] = v;
  for (const auto& [k, v] : r.ratios) ratios[py::str(k)] = v;
  out["values"] = values;
  out["ratios"] = ratios;
  py::dict measures;
  for (const auto& m : r.measures) {
    py::dict points;
    for (const auto& pm : m.point_masses) points[py::str(pm.vertex)] = pm.mass;
    py::list densities;
    for (const auto& ed : m.edge_densities) {
      densities.append(py::make_tuple(ed.u, ed.v, ed.length, ed.density));
    }
    py::dict entry;
    entry["point_masses"] = points;
    entry["edge_densities"] = densities;
    measures[py::str(m.kind)] = entry;
  }
  out["measures"] = measures;
  out["warnings"] = r.warnings;
  return out;
}

py::dict compute(const pmg::PMGraph& graph, const std::string& mode, int digits, const std::string& loop_strategy,
                 const std::string& inverse, bool measures, bool strict) {
  pmg::RunOptions options;
  options.mode = pmg::parse_mode(mode);
  options.digits = digits;
  options.compute.loop_strategy = pmg::parse_loop_strategy(loop_strategy);
  options.compute.inverse = pmg::parse_inverse_variant(inverse);
  options.compute.measures = measures;
  options.compute.strict = strict;
  pmg::FormattedReport report;
  {
    py::gil_scoped_release release;
    report = pmg::run_compute(graph, options);
  }
  return report_dict(report);
}

py::object to_fraction(const pmg::Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(pmg::to_string(r));
}

std::vector<pmg::Rational> rationals(const std::vector<std::string>& items) {
  std::vector<pmg::Rational> out;
  for (const auto& s : items) out.push_back(pmg::parse_rational(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Invariants of polarized metrized graphs";

  auto base = py::register_exception<pmg::Error>(m, "PmgError", PyExc_ValueError);
  py::register_exception<pmg::ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<pmg::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<pmg::NumericError>(m, "NumericError", base.ptr());

  py::class_<pmg::PMGraph>(m, "Graph")
      .def(py::init<>())
      .def(
          "add_vertex", [](pmg::PMGraph& g, std::string id, long q) { return g.add_vertex(std::move(id), q); },
          py::arg("id"), py::arg("q") = 0)
      .def(
          "add_edge",
          [](pmg::PMGraph& g, const std::string& u, const std::string& v, const py::object& length) {
            return g.add_edge(u, v, pmg::parse_rational(std::string(py::str(length))));
          },
          py::arg("u"), py::arg("v"), py::arg("length"))
      .def_property_readonly("vertices",
                             [](const pmg::PMGraph& g) {
                               std::vector<std::pair<std::string, long>> out;
                               for (const auto& v : g.vertices()) out.emplace_back(v.id, v.q);
                               return out;
                             })
      .def_property_readonly("edges",
                             [](const pmg::PMGraph& g) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (const auto& e : g.edges()) {
                                 out.emplace_back(g.vertex(e.u).id, g.vertex(e.v).id, pmg::to_string(e.length));
                               }
                               return out;
                             })
      .def("genus",
           [](const pmg::PMGraph& g) {
             pmg::require_valid(g, false);
             pmg::GenusData d = pmg::genus(g);
             return py::make_tuple(d.g, d.gbar, d.deg_k);
           })
      .def("total_length", [](const pmg::PMGraph& g) { return to_fraction(pmg::total_length(g)); })
      .def("canonical_weights", &pmg::canonical_weights)
      .def("validate",
           [](const pmg::PMGraph& g, bool require_effective) {
             std::vector<std::tuple<std::string, std::string, std::string>> out;
             for (const auto& v : pmg::validate(g, require_effective).violations) {
               out.emplace_back(std::string(pmg::to_string(v.code)), v.subject, v.message);
             }
             return out;
           },
           py::arg("require_effective") = true)
      .def("to_json", &pmg::write_graph)
      .def_static("from_json", [](const std::string& text) { return pmg::parse_graph(text); })
      .def("__eq__", [](const pmg::PMGraph& a, const pmg::PMGraph& b) { return a == b; })
      .def("__len__", &pmg::PMGraph::vertex_count);

  m.def(
      "ladder", [](long n, const std::string& a, const std::string& b) {
        return pmg::families::ladder(n, pmg::parse_rational(a), pmg::parse_rational(b));
      },
      py::arg("n"), py::arg("a") = "1", py::arg("b") = "1");
  m.def(
      "complete_graph",
      [](long n, const std::vector<std::string>& lengths, const std::vector<long>& q) {
        return pmg::families::complete_graph(n, rationals(lengths), q);
      },
      py::arg("n"), py::arg("lengths"), py::arg("q") = std::vector<long>{});
  m.def(
      "bouquet", [](const std::vector<std::string>& loops, long q) { return pmg::families::bouquet(rationals(loops), q); },
      py::arg("loops"), py::arg("q") = 0);
  m.def(
      "circle", [](const std::string& length) { return pmg::families::circle(pmg::parse_rational(length)); },
      py::arg("length") = "1");
  m.def(
      "example3",
      [](const std::vector<std::string>& p) {
        if (p.size() != 5) throw pmg::Error(pmg::ErrorCode::BadParameterCount, "example3 takes five lengths");
        auto r = rationals(p);
        return pmg::families::example3(r[0], r[1], r[2], r[3], r[4]);
      },
      py::arg("lengths"));

  m.def("compute", &compute, py::arg("graph"), py::arg("mode") = "exact", py::arg("digits") = 17,
        py::arg("loop_strategy") = "analytic", py::arg("inverse") = "minus-j", py::arg("measures") = false,
        py::arg("strict") = false);
  m.def("matrices", &matrices, py::arg("graph"), py::arg("mode") = "exact", py::arg("digits") = 17,
        py::arg("inverse") = "minus-j");
  m.def("tau", &tau, py::arg("graph"), py::arg("mode") = "exact", py::arg("digits") = 17);
}
