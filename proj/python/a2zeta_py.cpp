// Python bindings for the main operations. Complexes and reports travel as
// JSON strings so the module stays dependency-free on the python side.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "a2zeta/builders.hpp"
#include "a2zeta/cover.hpp"
#include "a2zeta/lfun.hpp"

namespace py = pybind11;
using namespace a2zeta;

namespace {

QuotientComplex parse(const std::string& complex_json) { return complex_from_json(complex_json); }

Representation rep_of(const QuotientComplex& c, const std::string& spec) {
  return resolve_representation(c.group(), spec);
}

}  // namespace

PYBIND11_MODULE(_a2zeta, m) {
  m.doc() = "exact L-functions of rank-2 quotient complexes";

  m.def(
      "build_complex",
      [](long q, const std::string& voltage) {
        if (q != 2) throw DomainError("only q=2 has a built-in presentation");
        return complex_to_json(one_vertex_complex_q2(voltage == "trivial"));
      },
      py::arg("q") = 2, py::arg("voltage") = "z3",
      "one-vertex complex as a JSON string; voltage is 'z3' or 'trivial'");

  m.def(
      "build_cover",
      [](const std::string& complex_json) { return complex_to_json(build_natural_cover(parse(complex_json))); },
      py::arg("complex_json"),
      "cover along the voltage group's own permutation action");

  m.def(
      "validate_complex",
      [](const std::string& complex_json) {
        ValidationReport r = validate(parse(complex_json));
        return py::make_tuple(r.pass(), r.summary());
      },
      py::arg("complex_json"));

  m.def(
      "euler_characteristic",
      [](const std::string& complex_json) { return euler_characteristic(parse(complex_json)); },
      py::arg("complex_json"));

  m.def(
      "lfun_report",
      [](const std::string& complex_json, const std::string& rep) {
        QuotientComplex c = parse(complex_json);
        return report_to_json(compute_l_report(c, rep_of(c, rep)));
      },
      py::arg("complex_json"), py::arg("rep") = "trivial",
      "P0, P1, P2 and degrees as a JSON report");

  m.def(
      "run_checks",
      [](const std::string& complex_json, const std::string& rep, int n_max) {
        QuotientComplex c = parse(complex_json);
        LReport r = run_full_checks(c, rep_of(c, rep), n_max);
        return py::make_tuple(r.all_pass(), report_to_json(r));
      },
      py::arg("complex_json"), py::arg("rep") = "trivial", py::arg("n_max") = 6,
      "full identity suite; returns (all_pass, report_json)");

  m.def(
      "geodesic_tallies",
      [](const std::string& complex_json, const std::string& rep, int n_max) {
        QuotientComplex c = parse(complex_json);
        GeodesicTally t = geodesic_oracle(c, rep_of(c, rep), n_max);
        std::vector<std::vector<std::string>> edge, chamber;
        for (int n = 1; n <= n_max; ++n) {
          edge.push_back(poly_to_strings(t.edge[n]));
          chamber.push_back(poly_to_strings(t.chamber[n]));
        }
        return py::make_tuple(edge, chamber);
      },
      py::arg("complex_json"), py::arg("rep") = "trivial", py::arg("n_max") = 6,
      "closed-walk tallies per length, coefficients as exact rational strings");

  m.def("presentation_q2", [] { return presentation_to_json(find_triangle_presentation(2)); });

  m.def(
      "lattice_oracle",
      [](long q) {
        OracleReport r = local_lattice_oracle(q);
        return py::make_tuple(r.pass, r.summary());
      },
      py::arg("q"), "exhaustive neighborhood counts in the rank-3 local model");
}
