#include "normgraph/survey.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "normgraph/enumerate.hpp"
#include "normgraph/io.hpp"
#include "normgraph/oracle.hpp"
#include "normgraph/topology.hpp"

namespace normgraph {

namespace {

struct PolicyRecord {
  RemovalPolicy policy = RemovalPolicy::kUnion;
  bool cap_exceeded = false;
  Prediction predicted = Prediction::kUndecided;
  bool agrees = false;
  std::optional<std::string> counterexample_kind;
  int terminal_states = 0;
  bool witness_emitted = false;
  bool witness_valid = false;
  std::vector<long long> literal_counts;
};

struct GraphRecord {
  std::string graph6;
  bool connected = false;
  bool too_small = false;
  std::optional<std::string> error;
  bool early_verdict = false;
  bool reduced_ok = false;
  bool norm = false;
  bool oracle_timeout = false;
  bool oracle_hamiltonian = false;
  bool root_sensitive = false;
  std::vector<PolicyRecord> policies;
};

GraphRecord run_one(const Graph& g, const SurveyConfig& config) {
  GraphRecord rec;
  rec.graph6 = emit_graph6(g);
  rec.connected = g.order() > 0 && is_connected(g);
  if (!rec.connected) return rec;
  if (g.order() < 3) {
    rec.too_small = true;
    return rec;
  }
  try {
    const TheoremReport report = analyze(g, config.theorem);
    rec.early_verdict = report.reduction.early_verdict.has_value();
    rec.reduced_ok = report.reduced_connected;
    rec.norm = report.is_norm;
    rec.oracle_timeout = report.oracle.timed_out();
    rec.oracle_hamiltonian = report.oracle.hamiltonian();
    if (!rec.norm) return rec;

    if (config.root_sensitivity) {
      const Graph& reduced = report.reduction.output;
      NormOptions opts;
      opts.boundary = config.theorem.boundary;
      for (Vertex r = 1; r < reduced.order() && !rec.root_sensitive; ++r) {
        opts.root = r;
        rec.root_sensitive = !norm_diagnostics(reduced, opts).norm;
      }
    }

    for (const GeeVerdict& v : report.verdicts) {
      PolicyRecord p;
      p.policy = v.policy;
      if (v.error) {
        p.cap_exceeded = true;
        rec.policies.push_back(p);
        continue;
      }
      p.predicted = v.predicted;
      p.agrees = report.agrees(v);
      p.terminal_states = static_cast<int>(v.terminal_states.size());
      p.literal_counts = v.literal_k23_counts;
      if (v.hamilton_witness) {
        p.witness_emitted = true;
        p.witness_valid = witness_is_valid(report.reduction.output, *v.hamilton_witness) && rec.oracle_hamiltonian;
      }
      if (report.counterexample(v)) {
        p.counterexample_kind = v.k23_predicate ? "k23ButHamiltonian" : "nonHamiltonianButNotK23";
      }
      rec.policies.push_back(std::move(p));
    }
  } catch (const GraphError& e) {
    rec.error = e.what();
  }
  return rec;
}

using nlohmann::json;

json config_json(const SurveyConfig& c) {
  json policies = json::array();
  for (RemovalPolicy p : c.theorem.policies) policies.push_back(std::string(to_string(p)));
  return json{
      {"boundaryMode", c.theorem.boundary == BoundaryMode::kLoose ? "loose" : "strict"},
      {"reductionMode", c.theorem.reduction == ReductionMode::kRules ? "rules" : "oracle"},
      {"policies", policies},
      {"search", std::string(to_string(c.theorem.search))},
      {"rankCap", c.theorem.rank_cap},
      {"stateCap", c.theorem.state_cap},
      {"timeoutMs", c.theorem.oracle.timeout_ms},
      {"rootSensitivity", c.root_sensitivity},
  };
}

std::string cell_name(Prediction p, bool oracle_non_ham) {
  std::string pred = p == Prediction::kNonHamiltonian ? "predictedNonHam"
                     : p == Prediction::kHamiltonian  ? "predictedHam"
                                                      : "undecided";
  return pred + "_" + (oracle_non_ham ? "oracleNonHam" : "oracleHam");
}

}  // namespace

long long ConfusionBlock::cell(Prediction p, bool oracle_non_hamiltonian) const {
  auto it = cells.find(p);
  if (it == cells.end()) return 0;
  auto jt = it->second.find(oracle_non_hamiltonian);
  return jt == it->second.end() ? 0 : jt->second;
}

bool witness_is_valid(const Graph& host, const EdgeVector& witness) {
  if (witness.host() != host.fingerprint()) return false;
  const int n = host.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (EdgeId e : witness.edge_ids()) {
    adj[host.edge(e).u].push_back(host.edge(e).v);
    adj[host.edge(e).v].push_back(host.edge(e).u);
  }
  for (const auto& a : adj) {
    if (a.size() != 2) return false;
  }
  std::vector<Vertex> tour{0};
  Vertex prev = -1;
  Vertex cur = 0;
  while (static_cast<int>(tour.size()) < n) {
    const Vertex next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
    if (next == 0) return false;  // closed early: more than one cycle
    prev = cur;
    cur = next;
    tour.push_back(cur);
  }
  return validate_tour(host, tour);
}

std::vector<Graph> enumerated_corpus(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    for (Graph& g : enumerate_connected(n)) out.push_back(std::move(g));
  }
  return out;
}

SurveyReport survey(const std::vector<Graph>& corpus, const std::string& source, const SurveyConfig& config) {
  std::vector<GraphRecord> records(corpus.size());
  const int jobs = std::max(1, config.jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < corpus.size(); i = next++) records[i] = run_one(corpus[i], config);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  std::sort(records.begin(), records.end(),
            [](const GraphRecord& a, const GraphRecord& b) { return a.graph6 < b.graph6; });

  SurveyReport report;
  report.corpus_source = source;
  report.corpus_size = static_cast<long long>(corpus.size());
  report.config = config;
  for (RemovalPolicy p : config.theorem.policies) report.per_policy[p];

  SurveyTotals& t = report.totals;
  for (const GraphRecord& r : records) {
    ++t.seen;
    if (!r.connected) continue;
    ++t.connected;
    if (r.too_small) {
      ++t.too_small;
      continue;
    }
    if (r.error) {
      t.errors.push_back(r.graph6 + ": " + *r.error);
      continue;
    }
    if (r.early_verdict) {
      ++t.early_verdict;
      if (r.oracle_hamiltonian) ++t.early_verdict_oracle_hamiltonian;
    }
    if (r.oracle_timeout) ++t.oracle_timeouts;
    if (!r.reduced_ok) continue;
    ++t.reduced_ok;
    if (!r.norm) {
      ++t.non_norm;
      continue;
    }
    ++t.norm;
    if (r.root_sensitive) ++t.norm_root_sensitive;
    if (r.oracle_timeout) continue;
    for (const PolicyRecord& p : r.policies) {
      ConfusionBlock& block = report.per_policy[p.policy];
      if (p.cap_exceeded) {
        ++block.cap_exceeded;
        continue;
      }
      ++block.checked;
      ++block.cells[p.predicted][!r.oracle_hamiltonian];
      block.agreements += p.agrees;
      ++block.gee_uniqueness[p.terminal_states];
      block.witnesses_emitted += p.witness_emitted;
      block.witnesses_validated += p.witness_valid;
      if (p.counterexample_kind) {
        ++block.counterexamples;
        report.counterexamples.push_back({r.graph6, p.policy, *p.counterexample_kind, p.predicted, r.oracle_hamiltonian});
      }
      if (!p.literal_counts.empty()) report.k23_violations.push_back({r.graph6, p.policy, p.literal_counts});
    }
  }
  return report;
}

std::string SurveyReport::to_json() const {
  json totals_j{
      {"seen", totals.seen},
      {"connected", totals.connected},
      {"tooSmall", totals.too_small},
      {"earlyVerdict", totals.early_verdict},
      {"earlyVerdictOracleHamiltonian", totals.early_verdict_oracle_hamiltonian},
      {"reducedOk", totals.reduced_ok},
      {"norm", totals.norm},
      {"nonNorm", totals.non_norm},
      {"oracleTimeouts", totals.oracle_timeouts},
      {"normRootSensitive", totals.norm_root_sensitive},
      {"errors", totals.errors},
  };
  json per_policy_j = json::object();
  json uniqueness_j = json::object();
  for (const auto& [policy, block] : per_policy) {
    json cells = json::object();
    for (Prediction p : {Prediction::kNonHamiltonian, Prediction::kHamiltonian, Prediction::kUndecided}) {
      for (bool non_ham : {true, false}) cells[cell_name(p, non_ham)] = block.cell(p, non_ham);
    }
    per_policy_j[std::string(to_string(policy))] = json{
        {"checked", block.checked},
        {"capExceeded", block.cap_exceeded},
        {"agreements", block.agreements},
        {"counterexamples", block.counterexamples},
        {"witnessesEmitted", block.witnesses_emitted},
        {"witnessesValidated", block.witnesses_validated},
        {"confusion", cells},
    };
    json hist = json::array();
    for (const auto& [states, graphs] : block.gee_uniqueness) {
      hist.push_back(json{{"terminalStates", states}, {"graphs", graphs}});
    }
    uniqueness_j[std::string(to_string(policy))] = hist;
  }
  json counter_j = json::array();
  for (const Counterexample& c : counterexamples) {
    counter_j.push_back(json{{"graph6", c.graph6},
                             {"policy", std::string(to_string(c.policy))},
                             {"kind", c.kind},
                             {"predicted", std::string(to_string(c.predicted))},
                             {"oracle", c.oracle_hamiltonian ? "hamiltonian" : "nonHamiltonian"}});
  }
  json viol_j = json::array();
  for (const UniquenessViolation& v : k23_violations) {
    viol_j.push_back(json{{"graph6", v.graph6},
                          {"policy", std::string(to_string(v.policy))},
                          {"literalInducedK23Counts", v.literal_counts}});
  }
  json doc{
      {"corpus", json{{"source", corpus_source}, {"filter", "connected"}, {"graphs", corpus_size}}},
      {"config", config_json(config)},
      {"totals", totals_j},
      {"perPolicy", per_policy_j},
      {"counterexamples", counter_j},
      {"geeUniqueness", uniqueness_j},
      {"k23UniquenessViolations", viol_j},
  };
  return doc.dump(2) + "\n";
}

std::string SurveyReport::to_csv() const {
  std::ostringstream out;
  out << "policy,predicted,oracle,count\n";
  for (const auto& [policy, block] : per_policy) {
    for (Prediction p : {Prediction::kNonHamiltonian, Prediction::kHamiltonian, Prediction::kUndecided}) {
      for (bool non_ham : {true, false}) {
        out << to_string(policy) << ',' << to_string(p) << ',' << (non_ham ? "nonHamiltonian" : "hamiltonian") << ','
            << block.cell(p, non_ham) << '\n';
      }
    }
  }
  return out.str();
}

bool reverify_counterexample(const Counterexample& c, const SurveyConfig& config) {
  const Graph g = parse_graph6(c.graph6);
  SurveyConfig single = config;
  single.theorem.policies = {c.policy};
  const TheoremReport report = analyze(g, single.theorem);
  if (!report.is_norm || report.verdicts.empty()) return false;
  const GeeVerdict& v = report.verdicts.front();
  if (!report.counterexample(v)) return false;
  const std::string kind = v.k23_predicate ? "k23ButHamiltonian" : "nonHamiltonianButNotK23";
  return kind == c.kind && v.predicted == c.predicted && report.oracle.hamiltonian() == c.oracle_hamiltonian;
}

}  // namespace normgraph
