// Thin bindings: every call returns the same JSON the command-line tool emits,
// serialised to a string; the Python package decodes it.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "exspec/acceptance.hpp"
#include "exspec/canonical.hpp"
#include "exspec/report.hpp"

namespace py = pybind11;
using namespace exspec;
using report::json;

namespace {

std::string dump(const json& j) { return j.dump(); }

std::string build(const std::string& descriptor) {
  const auto d = parse_descriptor(descriptor);
  return dump({{"descriptor", to_string(d)}, {"order", order(d)}, {"graph6", to_graph6(build_family(d))}});
}

std::string spectrum(const std::string& g6, bool numeric, double tolerance) {
  const auto s = spectrum_summary(from_graph6(g6), numeric ? SpectrumMode::Numeric : SpectrumMode::Exact, tolerance);
  json j = report::spectrum(s);
  j["graph6"] = g6;
  return dump(j);
}

std::string classify_graph(const std::string& g6) {
  const Graph g = from_graph6(g6);
  json j = report::classification(classify(g), degree_certificates(g));
  j["graph6"] = g6;
  return dump(j);
}

std::string certify(const std::string& descriptor) { return dump(report::certification(certify_family(parse_descriptor(descriptor)))); }

std::string cospectral(const std::string& descriptor) {
  const auto d = parse_descriptor(descriptor);
  json arr = json::array();
  for (const auto& w : cospectral_mates(d)) arr.push_back(report::witness(w));
  return dump({{"descriptor", to_string(d)}, {"witnesses", std::move(arr)}});
}

std::string survey_json(std::size_t n, std::size_t jobs, bool allow_n10) {
  EnumerationOptions opt;
  opt.jobs = jobs;
  opt.allow_n10 = allow_n10;
  return dump(report::survey(survey(n, opt)));
}

std::string acceptance(std::vector<int> only, std::size_t jobs) {
  AcceptanceOptions opt;
  opt.jobs = jobs;
  opt.only = std::move(only);
  json arr = json::array();
  for (const auto& r : run_acceptance(opt))
    arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
  return dump(arr);
}

}  // namespace

PYBIND11_MODULE(_exspec, m) {
  py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);
  py::register_exception<EnumerationCapError>(m, "EnumerationCapError", PyExc_ValueError);

  using R = py::call_guard<py::gil_scoped_release>;
  m.def("build", &build, py::arg("descriptor"), R());
  m.def("spectrum", &spectrum, py::arg("graph6"), py::arg("numeric") = false, py::arg("tolerance") = kClusterTolerance, R());
  m.def("classify", &classify_graph, py::arg("graph6"), R());
  m.def("certify", &certify, py::arg("descriptor"), R());
  m.def("quotient_polys", [] { return dump(report::quotient_cases(verify_quotient_polynomials())); }, R());
  m.def("cospectral", &cospectral, py::arg("descriptor"), R());
  m.def("ds", [](const std::string& d) { return dump(report::ds(is_determined_by_spectrum(parse_descriptor(d)))); },
        py::arg("descriptor"), R());
  m.def("survey", &survey_json, py::arg("n"), py::arg("jobs") = 1, py::arg("allow_n10") = false, R());
  m.def("connected_graphs", [](std::size_t n, bool allow_n10) {
    std::vector<std::string> out;
    for (const auto& g : connected_graphs(n, allow_n10)) out.push_back(to_graph6(g));
    return out;
  }, py::arg("n"), py::arg("allow_n10") = false, R());
  m.def("canonical_form", [](const std::string& g6) { return canonical_form(from_graph6(g6)).graph6; }, py::arg("graph6"), R());
  m.def("char_poly", [](const std::string& g6) { return char_poly(from_graph6(g6).adjacency_matrix()).coeff_strings(); },
        py::arg("graph6"), R());
  m.def("acceptance", &acceptance, py::arg("only") = std::vector<int>{}, py::arg("jobs") = 1, R());
}
