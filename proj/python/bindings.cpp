#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "graphmonoid/api.hpp"
#include "graphmonoid/error.hpp"

namespace py = pybind11;
using graphmonoid::api::json;

namespace {

// Documents cross the boundary as JSON text; the Python layer does the
// (de)serialization so that no C++ types leak into user code.
json load(const std::string& text, const char* what) {
  return graphmonoid::io::parse(text, what);
}

std::string dump(const json& j) { return j.dump(); }

graphmonoid::api::Options options(std::optional<std::size_t> budget,
                                  std::uint64_t seed) {
  graphmonoid::api::Options o;
  if (budget) o.budget = *budget;
  o.seed = seed;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  namespace api = graphmonoid::api;
  m.doc() = "Native core of the graphmonoid package (JSON text in and out).";

  auto error = py::register_exception<graphmonoid::Error>(m, "Error", PyExc_RuntimeError);
  auto invalid = py::register_exception<graphmonoid::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  // Truncation problems are reported as invalid input with extra detail.
  py::register_exception<graphmonoid::TruncationError>(m, "TruncationError", invalid.ptr());
  py::register_exception<graphmonoid::BudgetExhausted>(m, "BudgetExhausted", error.ptr());

  m.def("validate", [](const std::string& g) { return dump(api::validate(load(g, "graph"))); },
        py::arg("graph"));
  m.def("present", [](const std::string& g) { return dump(api::present(load(g, "graph"))); },
        py::arg("graph"));
  m.def(
      "normal_form",
      [](const std::string& g, const std::string& x, std::optional<std::size_t> budget) {
        return dump(api::normal_form(load(g, "graph"), load(x, "element"), options(budget, 0)));
      },
      py::arg("graph"), py::arg("element"), py::arg("budget") = py::none());
  m.def(
      "equal",
      [](const std::string& g, const std::string& x, const std::string& y,
         std::optional<std::size_t> budget) {
        return dump(api::equal(load(g, "graph"), load(x, "lhs"), load(y, "rhs"),
                               options(budget, 0)));
      },
      py::arg("graph"), py::arg("lhs"), py::arg("rhs"), py::arg("budget") = py::none());
  m.def(
      "desingularize",
      [](const std::string& g, std::size_t level) {
        return dump(api::desingularize(load(g, "graph"), level));
      },
      py::arg("graph"), py::arg("level"));
  m.def(
      "phi",
      [](const std::string& g, const std::string& x, std::optional<std::size_t> level) {
        return dump(api::phi(load(g, "graph"), load(x, "element"), level));
      },
      py::arg("graph"), py::arg("element"), py::arg("level") = py::none());
  m.def(
      "psi",
      [](const std::string& g, const std::string& x, std::size_t level) {
        return dump(api::psi(load(g, "graph"), load(x, "element"), level));
      },
      py::arg("graph"), py::arg("element"), py::arg("level"));
  m.def(
      "ck_check",
      [](const std::string& s, const std::string& t, const std::string& f) {
        return dump(api::ck_check(load(s, "source"), load(t, "target"), load(f, "morphism")));
      },
      py::arg("source"), py::arg("target"), py::arg("morphism"));
  m.def(
      "induced_map",
      [](const std::string& s, const std::string& t, const std::string& f) {
        return dump(api::induced_map(load(s, "source"), load(t, "target"), load(f, "morphism")));
      },
      py::arg("source"), py::arg("target"), py::arg("morphism"));
  m.def("colimit", [](const std::string& c) { return dump(api::colimit(load(c, "chain"))); },
        py::arg("chain"));
  m.def(
      "continuity_check",
      [](const std::string& c, std::size_t degree, std::optional<std::size_t> budget) {
        py::gil_scoped_release release;
        return dump(api::continuity_check(load(c, "chain"), degree, options(budget, 0)));
      },
      py::arg("chain"), py::arg("degree") = 3, py::arg("budget") = py::none());
  m.def(
      "oracle_check",
      [](const std::string& g, std::size_t samples, std::size_t max_degree,
         std::uint64_t seed, std::optional<std::size_t> budget) {
        py::gil_scoped_release release;
        return dump(api::oracle_check(load(g, "graph"), samples, max_degree,
                                      options(budget, seed)));
      },
      py::arg("graph"), py::arg("samples") = 50, py::arg("max_degree") = 5,
      py::arg("seed") = 0, py::arg("budget") = py::none());
}
