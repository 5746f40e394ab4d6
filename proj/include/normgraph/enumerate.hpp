#pragma once

#include <cstdint>
#include <vector>

#include "normgraph/graph.hpp"

namespace normgraph {

/// Largest order the built-in enumerator accepts. Bigger corpora come from
/// graph6 files.
inline constexpr int kMaxEnumerationOrder = 8;

/// Canonical adjacency code of a simple graph (n <= 11): the largest
/// upper-triangle bit string over all labellings consistent with the
/// colour-refined vertex partition. Equal codes <=> isomorphic graphs.
std::uint64_t canonical_code(const Graph& g);

/// The labelling of g that realises canonical_code(g).
Graph canonical_form(const Graph& g);

/// One canonical representative per isomorphism class of simple graphs on
/// n vertices, ordered by (edge count, canonical code). Throws kNTooLarge
/// above kMaxEnumerationOrder.
std::vector<Graph> enumerate_graphs(int n);

/// Connected members of enumerate_graphs(n), same order.
std::vector<Graph> enumerate_connected(int n);

}  // namespace normgraph
