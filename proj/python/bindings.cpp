#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "septel/cli.hpp"

namespace py = pybind11;

namespace {

/// Results cross the boundary as JSON text; the Python side decodes them.
std::pair<std::string, int> run_query(const std::string& query_json) {
  septel::Outcome o = septel::run_command(septel::query_from_json(nlohmann::json::parse(query_json)));
  return {o.result.dump(), o.exit_code};
}

std::vector<std::pair<std::string, int>> run_lines(const std::vector<std::string>& lines) {
  std::vector<std::pair<std::string, int>> out;
  for (auto& o : septel::run_batch(lines)) out.emplace_back(o.result.dump(), o.exit_code);
  return out;
}

}  // namespace

PYBIND11_MODULE(_septel, m) {
  m.doc() = "Separability deciders for functions of t with parameters";
  m.def("run_query", &run_query, py::arg("query_json"), py::call_guard<py::gil_scoped_release>(),
        "Run one JSON query; returns (result JSON, exit code).");
  m.def("run_batch", &run_lines, py::arg("lines"), py::call_guard<py::gil_scoped_release>());
  m.def(
      "verify_certificate",
      [](const std::string& expr, const std::vector<std::string>& vars, const std::string& op, const std::string& kind,
         const std::string& cls) { return septel::verify_certificate(expr, vars, op, septel::parse_kind(kind), cls); },
      py::arg("expr"), py::arg("vars"), py::arg("op"), py::arg("kind") = "D", py::arg("cls") = "rational");
  m.attr("__version__") = septel::version();
}
