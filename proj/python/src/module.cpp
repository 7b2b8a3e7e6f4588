#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "zpr/cli.hpp"
#include "zpr/document.hpp"
#include "zpr/errors.hpp"
#include "zpr/text.hpp"

namespace py = pybind11;

namespace {

std::vector<zpr::PolyVec> rows(const zpr::Ring& ring, const std::vector<std::string>& text) {
  std::vector<zpr::PolyVec> out;
  for (const auto& t : text) out.push_back(zpr::parse_vector(ring, t));
  return out;
}

// Structured results cross the boundary as JSON text; the Python side decodes them.
std::string gb_json(const zpr::Ring& ring, const std::vector<std::string>& generators, const std::string& order) {
  return zpr::dump(zpr::gb_document(zpr::buchberger(rows(ring, generators), zpr::parse_order(order))));
}

std::string pbasis_json(const zpr::Ring& ring, const std::vector<std::string>& generators, const std::string& order) {
  const auto G = zpr::buchberger(rows(ring, generators), zpr::parse_order(order));
  return zpr::dump(zpr::pbasis_document(zpr::build_p_basis(G)));
}

std::string lrr_json(const zpr::Ring& ring, const std::vector<std::int64_t>& seq, bool monic_only, bool verify) {
  const zpr::SequenceInput S(ring, seq);
  zpr::LrrReport report{zpr::shortest_lrr(S), monic_only, std::nullopt, std::nullopt};
  report.solutions = zpr::enumerate_shortest(report.solution, monic_only);
  if (verify) report.oracle = zpr::brute_force_shortest(S);
  return zpr::dump(zpr::lrr_document(report));
}

py::tuple run_cli(const std::vector<std::string>& args, const std::string& input) {
  std::vector<const char*> argv{"zpr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = zpr::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Groebner bases, p-bases and shortest linear recurrences over Z_{p^r}";

  auto base = py::register_exception<zpr::Error>(m, "ZprError", PyExc_ValueError);
  py::register_exception<zpr::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<zpr::EnumerationTooLarge>(m, "EnumerationTooLarge", base.ptr());
  py::register_exception<zpr::IterationLimitExceeded>(m, "IterationLimitExceeded", base.ptr());

  py::class_<zpr::Ring>(m, "Ring")
      .def(py::init<std::uint32_t, std::uint32_t>(), py::arg("p"), py::arg("r"))
      .def_static("from_modulus", &zpr::Ring::from_modulus)
      .def_property_readonly("p", &zpr::Ring::p)
      .def_property_readonly("r", &zpr::Ring::r)
      .def_property_readonly("modulus", &zpr::Ring::modulus)
      .def("order", &zpr::Ring::order)
      .def("inverse", &zpr::Ring::inverse)
      .def("digits", &zpr::Ring::p_adic_digits)
      .def("__repr__", &zpr::Ring::name)
      .def(py::self == py::self);

  m.def("gb_json", &gb_json, py::arg("ring"), py::arg("generators"), py::arg("order") = "top");
  m.def("pbasis_json", &pbasis_json, py::arg("ring"), py::arg("generators"), py::arg("order") = "top");
  m.def("lrr_json", &lrr_json, py::arg("ring"), py::arg("sequence"), py::arg("monic_only") = true,
        py::arg("verify") = false);
  m.def("run_cli", &run_cli, py::arg("args"), py::arg("stdin") = "");
}
