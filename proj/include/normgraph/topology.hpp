#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "normgraph/graph.hpp"

namespace normgraph {

/// Replaces edge e = {u, v} by u - w - v through a new vertex w = n.
Graph subdivide(const Graph& g, EdgeId e);

/// Removes degree-2 vertex w and joins its two neighbours by one edge.
/// The result is always a multigraph: smoothing next to an existing edge
/// yields a parallel edge, and a vertex whose two slots reach the same
/// neighbour yields a loop. Vertices above w shift down by one.
Graph smooth(const Graph& g, Vertex w);

/// Canonical representative of the homeomorphism class of g.
struct CanonicalCore {
  Graph core;               // multi mode, no vertex of degree 0 or 2
  int cycle_components = 0; // components that were a pure cycle
  int isolated_vertices = 0;
};

/// Suppresses every degree-2 vertex. Components that collapse to a single
/// vertex with a loop are pure cycles and are counted, not kept. With a
/// seed, the smoothing order is randomised (the result is the same up to
/// isomorphism; the tests rely on that).
CanonicalCore topological_core(const Graph& g, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

bool is_homeomorphic(const Graph& a, const Graph& b);

/// Exact multigraph isomorphism: colour refinement followed by
/// backtracking over colour-consistent bijections. Edge multiplicities and
/// loops must match.
bool are_isomorphic(const Graph& a, const Graph& b);

/// Number of 5-vertex subsets inducing K_{2,3}. Simple graphs only.
long long count_induced_k23(const Graph& g);

/// True iff g is a subdivision of K_{2,3}: a theta graph whose two branch
/// vertices are non-adjacent (every branch path has an internal vertex).
bool is_k23_subdivision(const Graph& g);

/// Number of vertex subsets whose induced subgraph is a subdivision of
/// K_{2,3}. Exhaustive over 2^n subsets; throws kSearchCapExceeded above
/// order 24.
long long count_induced_k23_subdivisions(const Graph& g);

bool is_connected(const Graph& g);
/// Component index per vertex, components numbered by smallest vertex.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);
/// Articulation points in ascending order.
std::vector<Vertex> cut_vertices(const Graph& g);

/// Two-colouring with the smallest vertex of each component on side 0.
/// Empty when g has an odd cycle or a loop.
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition(const Graph& g);

}  // namespace normgraph
