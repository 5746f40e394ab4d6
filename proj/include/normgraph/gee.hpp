#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normgraph/cycle_space.hpp"
#include "normgraph/graph.hpp"
#include "normgraph/norm.hpp"
#include "normgraph/oracle.hpp"
#include "normgraph/reduction.hpp"

namespace normgraph {

/// What makes a basis cycle "removable" from the current cycle set.
enum class RemovalPolicy {
  /// The remaining cycles still cover every host vertex and stay connected
  /// under the share-a-vertex relation.
  kUnion,
  /// The remaining cycles still cover every host vertex and their GF(2) sum
  /// is a single cycle through every vertex of their union (so a Hamilton
  /// cycle of the host).
  kSum,
};

enum class SearchMode { kGreedy, kExhaustive };

std::string_view to_string(RemovalPolicy p);
std::string_view to_string(SearchMode s);

/// A surviving subset of basis cycles together with its union and sum.
struct CycleSetState {
  std::uint64_t host = 0;
  std::vector<int> surviving;  // ascending basis indices, never empty
  Graph union_graph;           // union of surviving edges on the touched vertices
  EdgeVector sum;

  friend bool operator==(const CycleSetState& a, const CycleSetState& b) {
    return a.host == b.host && a.surviving == b.surviving;
  }
};

CycleSetState make_state(const CycleBasis& basis, std::vector<int> surviving);

/// Indices (ascending) of surviving cycles whose removal keeps the policy's
/// invariant. A state with fewer than two cycles has none.
std::vector<int> removable_cycles(const CycleBasis& basis, const CycleSetState& state, RemovalPolicy policy);

struct GeeOptions {
  RemovalPolicy policy = RemovalPolicy::kUnion;
  NormOptions norm;                 // used for the norm precondition
  int rank_cap = 25;
  long long state_cap = 200000;     // distinct states visited by the exhaustive search
};

/// Deletes, one at a time, the removable cycle whose sorted edge-id list is
/// lexicographically smallest. Throws kNotNormGraph unless g is norm.
CycleSetState extract_gee_greedy(const Graph& g, const CycleBasis& basis, const GeeOptions& options = {});

/// Every terminal state over all deletion orders, deduplicated and sorted by
/// surviving index list. Throws kNotNormGraph, kRankTooLarge or
/// kSearchCapExceeded.
std::vector<CycleSetState> extract_gee_exhaustive(const Graph& g, const CycleBasis& basis,
                                                  const GeeOptions& options = {});

/// The union graph is homeomorphic to K_{2,3} and exactly one vertex subset
/// of it induces a subdivision of K_{2,3}.
bool predicate_k23(const CycleSetState& state);

/// The state's sum when it is a Hamilton cycle of the host g.
std::optional<EdgeVector> hamilton_witness_from_sum(const Graph& g, const CycleSetState& state);
bool predicate_c3(const Graph& g, const CycleSetState& state);

enum class Prediction { kNonHamiltonian, kHamiltonian, kUndecided };
std::string_view to_string(Prediction p);

/// Outcome of the pipeline for one removal policy.
struct GeeVerdict {
  RemovalPolicy policy = RemovalPolicy::kUnion;
  std::vector<CycleSetState> terminal_states;
  bool k23_predicate = false;     // every terminal state satisfies predicate_k23
  bool c3_predicate = false;      // some terminal state yields a Hamilton witness
  std::optional<EdgeVector> hamilton_witness;
  Prediction predicted = Prediction::kUndecided;
  /// Literal induced-K_{2,3} count of the union of each K_{2,3}-like terminal
  /// state that differs from 1 (diagnostic).
  std::vector<long long> literal_k23_counts;
  std::optional<ErrorCode> error;  // cap exceeded for this policy
  std::string error_detail;
};

struct TheoremOptions {
  ReductionMode reduction = ReductionMode::kRules;
  BoundaryMode boundary = BoundaryMode::kLoose;
  std::vector<RemovalPolicy> policies{RemovalPolicy::kUnion, RemovalPolicy::kSum};
  SearchMode search = SearchMode::kExhaustive;
  int rank_cap = 25;
  long long state_cap = 200000;
  OracleOptions oracle;
};

/// Everything the pipeline learns about one input graph.
struct TheoremReport {
  ReductionReport reduction;
  bool reduced_connected = false;
  std::optional<NormDiagnostics> norm;  // absent when the reduced graph is disconnected
  bool is_norm = false;
  OracleResult oracle;                  // on the input graph
  std::vector<GeeVerdict> verdicts;     // one per policy; empty unless norm

  /// The Theorem's two sides disagree: every terminal state is K_{2,3}-like
  /// exactly when the oracle says non-Hamiltonian, otherwise a counterexample.
  bool counterexample(const GeeVerdict& v) const;
  bool agrees(const GeeVerdict& v) const;
};

/// reduce -> norm filter -> extraction under each policy -> predicates, plus
/// the oracle verdict on g. Non-norm graphs come back with is_norm = false.
TheoremReport analyze(const Graph& g, const TheoremOptions& options = {});

/// analyze(), but a non-norm graph raises kNotNormGraph.
TheoremReport theorem_check(const Graph& g, const TheoremOptions& options = {});

}  // namespace normgraph
