#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "normgraph/enumerate.hpp"
#include "normgraph/gee.hpp"
#include "normgraph/io.hpp"
#include "normgraph/survey.hpp"
#include "normgraph/topology.hpp"

using nlohmann::json;
using namespace normgraph;

namespace {

struct Common {
  std::string format = "graph6";
  long long timeout_ms = 0;
  int jobs = 1;
  std::string boundary = "loose";
  std::string reduction = "rules";
  int rank_cap = 25;
  long long state_cap = 200000;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Graph> load(const std::string& path, const Common& c) {
  const std::string text = slurp(path);
  if (c.format == "edgelist") return {parse_edge_list(text)};
  std::vector<Graph> graphs = parse_graph6_lines(text);
  if (graphs.empty()) throw InputError(path + " holds no graph");
  return graphs;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

json edges_json(const Graph& g, const EdgeVector& v) {
  std::vector<Edge> edges;
  for (EdgeId e : v.edge_ids()) edges.push_back(g.edge(e));
  return edges_json(edges);
}

json graph_json(const Graph& g) {
  json out{{"n", g.order()}, {"m", g.size()}, {"edges", edges_json(g.edges())}};
  if (g.is_simple()) out["graph6"] = emit_graph6(g);
  return out;
}

TheoremOptions theorem_options(const Common& c) {
  TheoremOptions t;
  t.reduction = c.reduction == "oracle" ? ReductionMode::kOracle : ReductionMode::kRules;
  t.boundary = c.boundary == "strict" ? BoundaryMode::kStrict : BoundaryMode::kLoose;
  t.rank_cap = c.rank_cap;
  t.state_cap = c.state_cap;
  t.oracle.timeout_ms = c.timeout_ms;
  return t;
}

std::vector<RemovalPolicy> parse_policies(const std::string& s) {
  if (s == "union") return {RemovalPolicy::kUnion};
  if (s == "sum") return {RemovalPolicy::kSum};
  return {RemovalPolicy::kUnion, RemovalPolicy::kSum};
}

std::string oracle_status(const OracleResult& r) {
  switch (r.status) {
    case OracleStatus::kHamiltonian: return "hamiltonian";
    case OracleStatus::kNonHamiltonian: return "nonHamiltonian";
    case OracleStatus::kTimeout: return "timeout";
  }
  return "?";
}

json oracle_json(const OracleResult& r) {
  return json{{"status", oracle_status(r)},
              {"tour", r.witness},
              {"nodesExplored", r.nodes_explored},
              {"elapsedUs", r.elapsed.count()}};
}

json reduction_json(const ReductionReport& r) {
  json chains = json::array();
  for (const ChainCollapse& c : r.chain_collapses) chains.push_back({{"path", c.path}, {"survivor", c.survivor}});
  json out{{"forcedEdges", edges_json(r.forced_edges)},
           {"deletedEdges", edges_json(r.deleted_edges)},
           {"chainCollapses", chains},
           {"earlyVerdict", r.early_verdict ? json(*r.early_verdict) : json(nullptr)},
           {"output", graph_json(r.output)},
           {"origin", r.origin}};
  return out;
}

json classification_json(const VertexClassification& v) {
  return json{{"boundary", v.boundary}, {"inside", v.inside}, {"cutPoints", v.cut_points}, {"other", v.other}};
}

json state_json(const Graph& host, const CycleSetState& s) {
  return json{{"surviving", s.surviving},
              {"union", graph_json(s.union_graph)},
              {"sum", edges_json(host, s.sum)},
              {"k23", predicate_k23(s)},
              {"c3", predicate_c3(host, s)}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonicity of norm graphs: reduction, cycle-set extraction and exact oracles"};
  app.fallthrough();  // global options may follow the subcommand
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
  app.add_option("--timeout-ms", common.timeout_ms, "oracle timeout per graph, 0 = none")->capture_default_str();
  app.add_option("--jobs", common.jobs, "worker threads for survey")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--boundary-mode", common.boundary, "boundary vertex reading")
      ->check(CLI::IsMember({"strict", "loose"}))
      ->capture_default_str();
  app.add_option("--reduction-mode", common.reduction, "edge deletion rule set")
      ->check(CLI::IsMember({"rules", "oracle"}))
      ->capture_default_str();
  app.add_option("--rank-cap", common.rank_cap, "largest cycle-space rank searched")->capture_default_str();
  app.add_option("--state-cap", common.state_cap, "exhaustive extraction state budget")->capture_default_str();

  std::string file;
  auto* oracle = app.add_subcommand("oracle", "exact Hamiltonicity by backtracking");
  oracle->add_option("FILE", file, "input file, - for stdin")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "forced-edge reduction and chain collapse");
  reduce_cmd->add_option("FILE", file)->required();

  std::string dot_path;
  auto* classify = app.add_subcommand("classify", "boundary/inside vertices, |I| and norm test");
  classify->add_option("FILE", file)->required();
  classify->add_option("--dot", dot_path, "also write an annotated DOT file");
  std::string root_str = "0";
  classify->add_option("--root", root_str, "BFS root of the cycle basis")->capture_default_str();

  std::string policy = "union";
  std::string search = "greedy";
  auto* gee = app.add_subcommand("gee", "extract the residual cycle set of the reduced graph");
  gee->add_option("FILE", file)->required();
  gee->add_option("--policy", policy)->check(CLI::IsMember({"union", "sum"}))->capture_default_str();
  gee->add_option("--search", search)->check(CLI::IsMember({"greedy", "exhaustive"}))->capture_default_str();

  std::string check_policy = "both";
  auto* check = app.add_subcommand("check", "full pipeline prediction against the oracle");
  check->add_option("FILE", file)->required();
  check->add_option("--policy", check_policy)->check(CLI::IsMember({"union", "sum", "both"}))->capture_default_str();

  int survey_n = 0;
  std::string corpus_path;
  std::string out_path;
  std::string csv_path;
  std::string survey_policy = "both";
  bool no_root_sensitivity = false;
  auto* survey_cmd = app.add_subcommand("survey", "run the pipeline over a corpus and write a report");
  auto* n_opt = survey_cmd->add_option("--n", survey_n, "enumerate connected graphs on 1..K vertices")
                    ->check(CLI::Range(1, kMaxEnumerationOrder));
  auto* corpus_opt = survey_cmd->add_option("--corpus", corpus_path, "graph6 corpus file");
  n_opt->excludes(corpus_opt);
  survey_cmd->add_option("--policy", survey_policy)
      ->check(CLI::IsMember({"union", "sum", "both"}))
      ->capture_default_str();
  survey_cmd->add_option("--out", out_path, "JSON report path (stdout when absent)");
  survey_cmd->add_option("--csv", csv_path, "CSV summary path");
  survey_cmd->add_flag("--no-root-sensitivity", no_root_sensitivity, "skip the per-root norm recount");

  int enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "print connected graphs on n vertices as graph6");
  enumerate->add_option("N", enum_n)->required()->check(CLI::Range(0, kMaxEnumerationOrder));

  CLI11_PARSE(app, argc, argv);

  try {
    const TheoremOptions topts = theorem_options(common);
    if (*oracle) {
      for (const Graph& g : load(file, common)) {
        const OracleResult r = is_hamiltonian(g, topts.oracle);
        emit(oracle_json(r));
        if (r.timed_out()) return 2;
      }
    } else if (*reduce_cmd) {
      for (const Graph& g : load(file, common)) emit(reduction_json(reduce(g, topts.reduction, topts.oracle)));
    } else if (*classify) {
      for (const Graph& g : load(file, common)) {
        if (!is_connected(g)) throw GraphError(ErrorCode::kDisconnected, "classify needs a connected graph");
        NormOptions nopts;
        nopts.boundary = topts.boundary;
        nopts.root = std::stoi(root_str);
        const NormDiagnostics d = norm_diagnostics(g, nopts);
        const ReductionReport r = reduce(g, topts.reduction, topts.oracle);
        emit(json{{"vertices", classification_json(d.vertices)},
                  {"rank", d.rank},
                  {"clusters", d.partition.clusters},
                  {"iCount", d.i_count},
                  {"norm", d.norm},
                  {"reduced", !r.changed(g)}});
        if (!dot_path.empty()) {
          std::ofstream dot(dot_path);
          if (!dot) throw InputError("cannot write " + dot_path);
          dot << emit_dot(g, DotAnnotations{d.vertices, r.forced_edges, r.deleted_edges});
        }
      }
    } else if (*gee) {
      for (const Graph& g : load(file, common)) {
        const ReductionReport r = reduce(g, topts.reduction, topts.oracle);
        if (!is_connected(r.output)) throw GraphError(ErrorCode::kNotNormGraph, "reduced graph is disconnected");
        const CycleBasis basis = fundamental_basis(r.output);
        GeeOptions gopts;
        gopts.policy = policy == "sum" ? RemovalPolicy::kSum : RemovalPolicy::kUnion;
        gopts.norm.boundary = topts.boundary;
        gopts.rank_cap = topts.rank_cap;
        gopts.state_cap = topts.state_cap;
        json states = json::array();
        if (search == "greedy") {
          states.push_back(state_json(r.output, extract_gee_greedy(r.output, basis, gopts)));
        } else {
          for (const CycleSetState& s : extract_gee_exhaustive(r.output, basis, gopts)) {
            states.push_back(state_json(r.output, s));
          }
        }
        emit(json{{"reduced", graph_json(r.output)}, {"policy", policy}, {"search", search}, {"states", states}});
      }
    } else if (*check) {
      TheoremOptions t = topts;
      t.policies = parse_policies(check_policy);
      bool capped = false;
      for (const Graph& g : load(file, common)) {
        const TheoremReport rep = theorem_check(g, t);
        json verdicts = json::array();
        for (const GeeVerdict& v : rep.verdicts) {
          json jv{{"policy", std::string(to_string(v.policy))}};
          if (v.error) {
            capped = true;
            jv["error"] = v.error_detail;
          } else {
            jv["terminalStates"] = v.terminal_states.size();
            jv["k23"] = v.k23_predicate;
            jv["c3"] = v.c3_predicate;
            jv["predicted"] = std::string(to_string(v.predicted));
            jv["agrees"] = rep.agrees(v);
            jv["counterexample"] = rep.counterexample(v);
            if (v.hamilton_witness) jv["witness"] = edges_json(rep.reduction.output, *v.hamilton_witness);
          }
          verdicts.push_back(jv);
        }
        emit(json{{"graph6", emit_graph6(g)},
                  {"earlyVerdict", rep.reduction.early_verdict ? json(*rep.reduction.early_verdict) : json(nullptr)},
                  {"reduced", graph_json(rep.reduction.output)},
                  {"iCount", rep.norm->i_count},
                  {"oracle", oracle_status(rep.oracle)},
                  {"verdicts", verdicts}});
      }
      if (capped) return 2;
    } else if (*survey_cmd) {
      if (!*n_opt && !*corpus_opt) throw InputError("survey needs --n K or --corpus FILE");
      SurveyConfig config;
      config.theorem = topts;
      config.theorem.policies = parse_policies(survey_policy);
      config.jobs = common.jobs;
      config.root_sensitivity = !no_root_sensitivity;
      const std::vector<Graph> corpus =
          *n_opt ? enumerated_corpus(survey_n) : parse_graph6_lines(slurp(corpus_path));
      const std::string source = *n_opt ? "enumerated:n<=" + std::to_string(survey_n) : "graph6:" + corpus_path;
      const SurveyReport report = survey(corpus, source, config);
      if (out_path.empty()) {
        std::cout << report.to_json();
      } else {
        std::ofstream(out_path) << report.to_json();
      }
      if (!csv_path.empty()) std::ofstream(csv_path) << report.to_csv();
    } else if (*enumerate) {
      for (const Graph& g : enumerate_connected(enum_n)) std::cout << emit_graph6(g) << "\n";
    }
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_cap() ? 2 : 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
