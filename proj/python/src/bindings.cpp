#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "normgraph/enumerate.hpp"
#include "normgraph/gee.hpp"
#include "normgraph/io.hpp"
#include "normgraph/norm.hpp"
#include "normgraph/oracle.hpp"
#include "normgraph/reduction.hpp"
#include "normgraph/survey.hpp"
#include "normgraph/topology.hpp"

namespace py = pybind11;
using namespace normgraph;

namespace {

py::list edge_pairs(const std::vector<Edge>& edges) {
  py::list out;
  for (const Edge& e : edges) out.append(py::make_tuple(e.u, e.v));
  return out;
}

py::list witness_pairs(const Graph& host, const EdgeVector& w) {
  py::list out;
  for (EdgeId id : w.edge_ids()) out.append(py::make_tuple(host.edges()[id].u, host.edges()[id].v));
  return out;
}

ReductionMode reduction_mode(const std::string& s) {
  if (s == "rules") return ReductionMode::kRules;
  if (s == "oracle") return ReductionMode::kOracle;
  throw py::value_error("reduction_mode must be 'rules' or 'oracle'");
}

BoundaryMode boundary_mode(const std::string& s) {
  if (s == "loose") return BoundaryMode::kLoose;
  if (s == "strict") return BoundaryMode::kStrict;
  throw py::value_error("boundary_mode must be 'loose' or 'strict'");
}

std::vector<RemovalPolicy> policies(const std::vector<std::string>& names) {
  std::vector<RemovalPolicy> out;
  for (const std::string& p : names) {
    if (p == "union") {
      out.push_back(RemovalPolicy::kUnion);
    } else if (p == "sum") {
      out.push_back(RemovalPolicy::kSum);
    } else {
      throw py::value_error("policy must be 'union' or 'sum'");
    }
  }
  return out;
}

TheoremOptions theorem_options(const std::string& reduction, const std::string& boundary,
                               const std::vector<std::string>& policy_names, bool exhaustive, long long timeout_ms) {
  TheoremOptions o;
  o.reduction = reduction_mode(reduction);
  o.boundary = boundary_mode(boundary);
  o.policies = policies(policy_names);
  o.search = exhaustive ? SearchMode::kExhaustive : SearchMode::kGreedy;
  o.oracle.timeout_ms = timeout_ms;
  return o;
}

const char* oracle_status(const OracleResult& r) {
  switch (r.status) {
    case OracleStatus::kHamiltonian:
      return "hamiltonian";
    case OracleStatus::kNonHamiltonian:
      return "nonHamiltonian";
    case OracleStatus::kTimeout:
      return "timeout";
  }
  return "timeout";
}

py::dict reduction_dict(const ReductionReport& r) {
  py::dict d;
  d["forced_edges"] = edge_pairs(r.forced_edges);
  d["deleted_edges"] = edge_pairs(r.deleted_edges);
  d["early_verdict"] = r.early_verdict ? py::cast(*r.early_verdict) : py::none();
  d["output"] = r.output;
  d["origin"] = r.origin;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hamiltonicity of norm graphs via cycle-space reduction";

  static py::exception<GraphError> graph_error(m, "GraphError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GraphError& e) {
      py::object exc = py::handle(graph_error.ptr())(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(graph_error.ptr(), exc.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return Graph::from_edge_list(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def_static("from_edge_list_text", [](const std::string& s) { return parse_edge_list(s); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges", [](const Graph& g) { return edge_pairs(g.edges()); })
      .def("graph6", [](const Graph& g) { return emit_graph6(g); })
      .def("dot", [](const Graph& g) { return emit_dot(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
      });

  m.def("complete", &make::complete);
  m.def("cycle", &make::cycle);
  m.def("complete_bipartite", &make::complete_bipartite);
  m.def("petersen", &make::petersen);

  m.def("is_homeomorphic", &is_homeomorphic);
  m.def("are_isomorphic", &are_isomorphic);

  m.def(
      "is_hamiltonian",
      [](const Graph& g, long long timeout_ms) {
        OracleOptions o;
        o.timeout_ms = timeout_ms;
        const OracleResult r = is_hamiltonian(g, o);
        py::dict d;
        d["status"] = oracle_status(r);
        d["tour"] = r.witness;
        d["nodes_explored"] = r.nodes_explored;
        return d;
      },
      py::arg("g"), py::arg("timeout_ms") = 0);

  m.def(
      "reduce", [](const Graph& g, const std::string& mode) { return reduction_dict(reduce(g, reduction_mode(mode))); },
      py::arg("g"), py::arg("mode") = "rules");

  m.def(
      "is_norm",
      [](const Graph& g, const std::string& boundary) {
        NormOptions o;
        o.boundary = boundary_mode(boundary);
        const NormDiagnostics n = is_norm(g, o);
        py::dict d;
        d["norm"] = n.norm;
        d["i_count"] = n.i_count;
        d["rank"] = n.rank;
        d["boundary"] = n.vertices.boundary;
        d["inside"] = n.vertices.inside;
        d["cut_points"] = n.vertices.cut_points;
        d["other"] = n.vertices.other;
        return d;
      },
      py::arg("g"), py::arg("boundary_mode") = "loose");

  m.def(
      "theorem_check",
      [](const Graph& g, const std::vector<std::string>& policy_names, bool exhaustive, const std::string& reduction,
         const std::string& boundary, long long timeout_ms) {
        const TheoremReport r =
            theorem_check(g, theorem_options(reduction, boundary, policy_names, exhaustive, timeout_ms));
        py::dict d;
        d["oracle"] = oracle_status(r.oracle);
        d["reduction"] = reduction_dict(r.reduction);
        py::list verdicts;
        for (const GeeVerdict& v : r.verdicts) {
          py::dict vd;
          vd["policy"] = std::string(to_string(v.policy));
          vd["predicted"] = std::string(to_string(v.predicted));
          vd["k23"] = v.k23_predicate;
          vd["c3"] = v.c3_predicate;
          vd["terminal_states"] = v.terminal_states.size();
          vd["witness"] = v.hamilton_witness ? py::object(witness_pairs(r.reduction.output, *v.hamilton_witness))
                                             : py::object(py::none());
          vd["error"] = v.error ? py::cast(std::string(to_string(*v.error))) : py::none();
          vd["agrees"] = r.agrees(v);
          vd["counterexample"] = r.counterexample(v);
          verdicts.append(vd);
        }
        d["verdicts"] = verdicts;
        return d;
      },
      py::arg("g"), py::arg("policies") = std::vector<std::string>{"union", "sum"}, py::arg("exhaustive") = true,
      py::arg("reduction_mode") = "rules", py::arg("boundary_mode") = "loose", py::arg("timeout_ms") = 0);

  m.def(
      "enumerate_connected",
      [](int n) {
        std::vector<std::string> out;
        for (const Graph& g : enumerate_connected(n)) out.push_back(emit_graph6(g));
        return out;
      },
      py::arg("n"));

  m.def(
      "survey_json",
      [](const std::vector<Graph>& corpus, const std::string& source, const std::vector<std::string>& policy_names,
         int jobs, bool root_sensitivity) {
        SurveyConfig c;
        c.theorem.policies = policies(policy_names);
        c.jobs = jobs;
        c.root_sensitivity = root_sensitivity;
        py::gil_scoped_release release;
        return survey(corpus, source, c).to_json();
      },
      py::arg("corpus"), py::arg("source") = "python", py::arg("policies") = std::vector<std::string>{"union", "sum"},
      py::arg("jobs") = 1, py::arg("root_sensitivity") = true);
}
