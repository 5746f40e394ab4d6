#pragma once

#include <map>
#include <string>
#include <vector>

#include "normgraph/gee.hpp"
#include "normgraph/graph.hpp"

namespace normgraph {

struct SurveyConfig {
  TheoremOptions theorem;
  int jobs = 1;
  /// Recompute |I| with every BFS root and count norm graphs whose norm
  /// status depends on the root.
  bool root_sensitivity = true;
};

struct ConfusionBlock {
  // cells[predicted][oracleNonHamiltonian]
  std::map<Prediction, std::map<bool, long long>> cells;
  long long checked = 0;
  long long cap_exceeded = 0;
  long long agreements = 0;
  long long counterexamples = 0;
  long long witnesses_emitted = 0;
  long long witnesses_validated = 0;
  std::map<int, long long> gee_uniqueness;  // distinct terminal states -> graphs

  long long cell(Prediction p, bool oracle_non_hamiltonian) const;
};

struct Counterexample {
  std::string graph6;
  RemovalPolicy policy = RemovalPolicy::kUnion;
  std::string kind;  // "nonHamiltonianButNotK23" or "k23ButHamiltonian"
  Prediction predicted = Prediction::kUndecided;
  bool oracle_hamiltonian = false;
};

struct UniquenessViolation {
  std::string graph6;
  RemovalPolicy policy = RemovalPolicy::kUnion;
  std::vector<long long> literal_counts;
};

struct SurveyTotals {
  long long seen = 0;
  long long connected = 0;
  long long too_small = 0;
  long long early_verdict = 0;
  long long early_verdict_oracle_hamiltonian = 0;  // must stay 0: rules are sound
  long long reduced_ok = 0;                        // reduced graph connected
  long long norm = 0;
  long long non_norm = 0;
  long long oracle_timeouts = 0;
  long long norm_root_sensitive = 0;
  std::vector<std::string> errors;  // "graph6: message"
};

struct SurveyReport {
  std::string corpus_source;
  long long corpus_size = 0;
  SurveyConfig config;
  SurveyTotals totals;
  std::map<RemovalPolicy, ConfusionBlock> per_policy;
  std::vector<Counterexample> counterexamples;       // sorted by graph6, then policy
  std::vector<UniquenessViolation> k23_violations;   // sorted by graph6, then policy

  /// Stable JSON document (keys sorted, 2-space indent, trailing newline).
  std::string to_json() const;
  /// policy,predicted,oracle,count -- one row per confusion cell.
  std::string to_csv() const;
};

/// Runs the pipeline on every graph. Per-graph failures are recorded, never
/// thrown. The report does not depend on config.jobs.
SurveyReport survey(const std::vector<Graph>& corpus, const std::string& source, const SurveyConfig& config);

/// Connected graphs on 1..max_n vertices from the built-in enumerator.
std::vector<Graph> enumerated_corpus(int max_n);

/// Recomputes a stored counterexample from its graph6 string; true when the
/// same disagreement reappears.
bool reverify_counterexample(const Counterexample& c, const SurveyConfig& config);

/// Independent check of a Hamilton witness: walks the edge set as a closed
/// tour and validates it as a vertex sequence.
bool witness_is_valid(const Graph& host, const EdgeVector& witness);

}  // namespace normgraph
