#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "normgraph/graph.hpp"

namespace normgraph {

enum class OracleStatus { kHamiltonian, kNonHamiltonian, kTimeout };

struct OracleResult {
  OracleStatus status = OracleStatus::kNonHamiltonian;
  std::vector<Vertex> witness;  // tour order, starting at vertex 0; empty unless Hamiltonian
  long long nodes_explored = 0;
  std::chrono::microseconds elapsed{0};

  bool hamiltonian() const { return status == OracleStatus::kHamiltonian; }
  bool timed_out() const { return status == OracleStatus::kTimeout; }
};

struct OracleOptions {
  /// 0 disables the limit.
  long long timeout_ms = 0;
};

/// Exact Hamiltonicity by backtracking from vertex 0 over ascending
/// neighbours. Orders 1 and 2 are non-Hamiltonian by convention.
OracleResult is_hamiltonian(const Graph& g, const OracleOptions& options = {});

/// Same search restricted to tours that use edge e.
OracleResult hamiltonian_through_edge(const Graph& g, EdgeId e, const OracleOptions& options = {});

/// For every edge, whether some Hamilton cycle uses it. Throws
/// kSearchCapExceeded if any sub-search times out.
std::vector<bool> edges_on_hamilton_cycles(const Graph& g, const OracleOptions& options = {});

/// True when `tour` visits every vertex exactly once and consecutive
/// vertices (including last to first) are adjacent in g.
bool validate_tour(const Graph& g, const std::vector<Vertex>& tour);

}  // namespace normgraph
