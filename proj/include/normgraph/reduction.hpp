#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normgraph/graph.hpp"
#include "normgraph/oracle.hpp"

namespace normgraph {

enum class ReductionMode {
  kRules,   // sound forced-edge rules R1-R3
  kOracle,  // delete exactly the edges lying on no Hamilton cycle (brute force)
};

struct ChainCollapse {
  std::vector<Vertex> path;  // endpoint, internal vertices..., endpoint (input ids)
  Vertex survivor = -1;
};

struct ChainCollapseResult {
  Graph graph;
  std::vector<ChainCollapse> collapses;  // ids of the graph passed in
  std::vector<Vertex> origin;            // output vertex -> input vertex
};

/// Outcome of reducing a graph. Edge lists use input vertex ids; an edge
/// created by collapsing a chain is named by its surviving endpoints.
///
/// When `early_verdict` is set the input is certainly non-Hamiltonian and
/// edge deletion stopped at the point of detection. `output` is still the
/// graph reached at that point (after chain collapsing), so callers can run
/// the rest of the pipeline on it.
struct ReductionReport {
  std::uint64_t input = 0;
  std::vector<Edge> forced_edges;
  std::vector<Edge> deleted_edges;
  std::vector<ChainCollapse> chain_collapses;
  std::optional<std::string> early_verdict;
  Graph output;
  std::vector<Vertex> origin;  // output vertex -> input vertex

  bool changed(const Graph& in) const { return !(output == in); }
};

/// Applies R1 (both edges at a degree-2 vertex are forced), R2 (a vertex
/// with two forced edges loses its other edges) and R3 (a vertex of degree
/// below 2, three forced edges at one vertex, a non-spanning forced cycle or
/// a disconnected remainder means no Hamilton cycle) until nothing changes.
/// No chain collapsing.
ReductionReport forced_edge_fixpoint(const Graph& g);

/// Replaces every maximal run of k >= 2 degree-2 vertices between vertices
/// of other degree by a single degree-2 vertex (the smallest id of the run).
/// A run that starts and ends at the same vertex keeps two internal
/// vertices so the graph stays simple. Pure cycle components are untouched.
ChainCollapseResult collapse_chains_detailed(const Graph& g);
Graph collapse_chains(const Graph& g);

/// Alternates edge deletion and chain collapsing until neither changes the graph.
ReductionReport reduce(const Graph& g, ReductionMode mode = ReductionMode::kRules,
                       const OracleOptions& oracle_options = {});

}  // namespace normgraph
