#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <vector>

#include "json.hpp"
#include "locdim/batch.hpp"
#include "locdim/constructor.hpp"
#include "locdim/errors.hpp"
#include "locdim/generators.hpp"
#include "locdim/graph6.hpp"
#include "locdim/oracle.hpp"
#include "locdim/packing.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const std::string& dump) {
  return py::module_::import("json").attr("loads")(dump);
}

locdim::VertexSet set_from_list(const locdim::Graph& g, const std::vector<int>& w) {
  for (int v : w)
    if (v < 0 || v >= g.order())
      throw locdim::InputContractError("vertex " + std::to_string(v) +
                                       " out of range");
  return locdim::to_vertex_set(w);
}

}  // namespace

PYBIND11_MODULE(locdim, m) {
  m.doc() = "local metric dimension toolkit: half-order certificates for "
            "K4-free graphs, exact search, and the known bounds";

  py::class_<locdim::Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<locdim::Edge>& edges) {
             return locdim::Graph(n, edges);
           }),
           py::arg("n"), py::arg("edges") = std::vector<locdim::Edge>{})
      .def_property_readonly("n", &locdim::Graph::order)
      .def("edge_count", &locdim::Graph::edge_count)
      .def("edges", &locdim::Graph::edges)
      .def("has_edge", &locdim::Graph::has_edge)
      .def("neighbors", &locdim::Graph::neighbor_list)
      .def("degree", &locdim::Graph::degree)
      .def("__eq__", [](const locdim::Graph& a, const locdim::Graph& b) { return a == b; })
      .def("__repr__", [](const locdim::Graph& g) {
        std::ostringstream out;
        out << "Graph(n=" << g.order() << ", m=" << g.edge_count() << ")";
        return out.str();
      });

  m.def("parse_graph6", &locdim::parse_graph6, py::arg("text"));
  m.def("write_graph6", &locdim::write_graph6, py::arg("g"));
  m.def("distances_from", &locdim::distances_from, py::arg("g"), py::arg("source"));
  m.def("is_connected", &locdim::is_connected, py::arg("g"));
  m.def("clique_number", &locdim::clique_number, py::arg("g"));
  m.def("has_k4", &locdim::has_k4, py::arg("g"));

  m.def(
      "is_local_resolving",
      [](const locdim::Graph& g, const std::vector<int>& w) -> py::object {
        const auto verdict = locdim::is_local_resolving(g, set_from_list(g, w));
        if (verdict.ok) return py::none();
        return py::make_tuple(verdict.u, verdict.v);
      },
      py::arg("g"), py::arg("w"),
      "None when W locally resolves g, otherwise the first failing edge");

  m.def(
      "local_metric_dimension",
      [](const locdim::Graph& g, int cap) {
        const auto r = locdim::local_metric_dimension(g, {cap});
        return py::make_tuple(r.k, r.witness);
      },
      py::arg("g"), py::arg("cap") = 16,
      "(dim_l, smallest witness) by exhaustive search");

  m.def(
      "check_known_bounds",
      [](const locdim::Graph& g, int cap) {
        return json_to_py(locdim::bounds_report_json(
            locdim::check_known_bounds(g, {cap})));
      },
      py::arg("g"), py::arg("cap") = 16);

  m.def(
      "local_vertex_division",
      [](const locdim::Graph& g) {
        const auto d = locdim::local_vertex_division(g);
        py::list out;
        std::istringstream lines(locdim::division_trace_json(d));
        std::string line;
        while (std::getline(lines, line)) out.append(json_to_py(line));
        return out;
      },
      py::arg("g"), "the division's placements as a list of dicts");

  m.def(
      "check_division_facts",
      [](const locdim::Graph& g) {
        const auto d = locdim::local_vertex_division(g);
        const auto report = locdim::check_division_facts(g, d);
        py::list out;
        for (const auto& c : report.checks) {
          py::dict e;
          e["name"] = c.name;
          e["pass"] = c.pass;
          e["witness"] = c.witness;
          out.append(e);
        }
        return out;
      },
      py::arg("g"));

  m.def(
      "construct_certificate",
      [](const locdim::Graph& g, bool strict, bool include_trace) {
        locdim::ConstructOptions opt;
        opt.strict = strict;
        return json_to_py(
            locdim::certificate_json(locdim::construct_certificate(g, opt),
                                     include_trace));
      },
      py::arg("g"), py::arg("strict") = false, py::arg("trace") = true,
      "verified certificate dict with W, bound verdicts and the step trace");

  m.def("friendship_graph", &locdim::friendship_graph, py::arg("k"));
  m.def("random_k4_free", &locdim::random_k4_free, py::arg("n"), py::arg("p"),
        py::arg("seed"));
  m.def("named_graph", &locdim::named_graph, py::arg("name"));

  m.def(
      "run_batch",
      [](const std::string& graph6_lines, int jobs, int exact_cap, bool strict) {
        std::istringstream in(graph6_lines);
        std::ostringstream out;
        locdim::BatchOptions opt;
        opt.jobs = jobs;
        opt.exact_cap = exact_cap;
        opt.strict = strict;
        const auto summary = locdim::run_batch(in, out, opt);
        return py::make_tuple(out.str(), json_to_py(summary.to_json()));
      },
      py::arg("graph6_lines"), py::arg("jobs") = 1, py::arg("exact_cap") = 16,
      py::arg("strict") = false,
      "(report JSON lines, summary dict) for a graph6 stream");
}
