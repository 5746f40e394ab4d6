#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "normgraph/enumerate.hpp"
#include "normgraph/topology.hpp"

using namespace normgraph;

namespace {

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const GraphError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no GraphError thrown";
  return ErrorCode::kUnknownEdge;
}

Graph k23() { return make::complete_bipartite(2, 3); }

// Every edge replaced by a path with `times` internal vertices.
Graph subdivide_all(const Graph& g, int times) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  int n = g.order();
  for (const Edge& e : g.edges()) {
    Vertex prev = e.u;
    for (int t = 0; t < times; ++t) {
      edges.emplace_back(prev, n);
      prev = n++;
    }
    edges.emplace_back(prev, e.v);
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace

TEST(GraphCore, K23FromEdgeList) {
  const Graph g = Graph::from_edge_list(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 6);
  EXPECT_EQ(g, k23());
}

TEST(GraphCore, IsolatedVerticesOnly) {
  const Graph g = Graph::from_edge_list(3, {});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 0);
}

TEST(GraphCore, ConstructionErrors) {
  EXPECT_EQ(error_of([] { Graph::from_edge_list(2, {{0, 1}, {0, 1}}); }), ErrorCode::kDuplicateEdge);
  EXPECT_EQ(error_of([] { Graph::from_edge_list(2, {{1, 1}}); }), ErrorCode::kLoopInSimpleMode);
  EXPECT_EQ(error_of([] { Graph::from_edge_list(2, {{0, 2}}); }), ErrorCode::kEndpointOutOfRange);
  EXPECT_EQ(error_of([] { Graph::from_edge_list(65, {}); }), ErrorCode::kOrderTooLarge);
}

TEST(GraphCore, EdgeIdsFollowSortedPairs) {
  const Graph g = Graph::from_edge_list(4, {{3, 2}, {1, 0}, {2, 0}});
  ASSERT_EQ(g.size(), 3);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(1), (Edge{0, 2}));
  EXPECT_EQ(g.edge(2), (Edge{2, 3}));
}

TEST(GraphCore, MultiModeDegreesCountLoopsTwice) {
  const Graph g = Graph::from_edge_list(2, {{0, 1}, {0, 1}, {1, 1}}, GraphMode::kMulti);
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_EQ(g.degree(1), 4);
  EXPECT_EQ(g.multiplicity(0, 1), 2);
  EXPECT_FALSE(g.is_simple());
}

TEST(Subdivide, SingleEdgeBecomesPath) {
  const Graph g = subdivide(make::path(2), 0);
  EXPECT_EQ(g, Graph::from_edge_list(3, {{0, 2}, {2, 1}}));
}

TEST(Subdivide, TriangleBecomesFourCycle) {
  EXPECT_TRUE(are_isomorphic(subdivide(make::cycle(3), 1), make::cycle(4)));
}

TEST(Subdivide, UnknownEdge) {
  EXPECT_EQ(error_of([] { subdivide(make::cycle(3), 3); }), ErrorCode::kUnknownEdge);
}

TEST(Smooth, PathMiddleVertex) {
  const Graph g = smooth(Graph::from_edge_list(3, {{0, 2}, {2, 1}}), 2);
  EXPECT_EQ(g.order(), 2);
  ASSERT_EQ(g.size(), 1);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.mode(), GraphMode::kMulti);
}

TEST(Smooth, TriangleGivesParallelEdges) {
  const Graph g = smooth(make::cycle(3), 2);
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.multiplicity(0, 1), 2);
}

TEST(Smooth, DigonGivesLoop) {
  const Graph g = smooth(smooth(make::cycle(3), 2), 1);
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.multiplicity(0, 0), 1);
  EXPECT_EQ(g.degree(0), 2);
}

TEST(Smooth, StarCentreIsNotDegreeTwo) {
  EXPECT_EQ(error_of([] { smooth(make::star(3), 0); }), ErrorCode::kNotDegreeTwo);
}

TEST(TopologicalCore, CycleIsCountedNotKept) {
  const CanonicalCore c = topological_core(make::cycle(7));
  EXPECT_EQ(c.core.order(), 0);
  EXPECT_EQ(c.core.size(), 0);
  EXPECT_EQ(c.cycle_components, 1);
  EXPECT_EQ(c.isolated_vertices, 0);
}

// K_{2,3}'s part-3 vertices have degree 2, so its core (and that of every
// subdivision of it) is the dipole with three parallel edges.
TEST(TopologicalCore, SubdividedK23IsDipole) {
  const CanonicalCore c = topological_core(subdivide_all(k23(), 1));
  EXPECT_EQ(c.cycle_components, 0);
  EXPECT_EQ(c.core.order(), 2);
  EXPECT_EQ(c.core.size(), 3);
  EXPECT_EQ(c.core.multiplicity(0, 1), 3);
  EXPECT_TRUE(are_isomorphic(c.core, topological_core(k23()).core));
}

TEST(TopologicalCore, ThetaIsDipole) {
  const CanonicalCore c = topological_core(make::theta(1, 2, 3));
  EXPECT_EQ(c.core.order(), 2);
  EXPECT_EQ(c.core.multiplicity(0, 1), 3);
  EXPECT_EQ(c.cycle_components, 0);
}

TEST(TopologicalCore, IsolatedVerticesCounted) {
  const Graph g = make::disjoint_union(make::complete(4), Graph::from_edge_list(2, {}));
  const CanonicalCore c = topological_core(g);
  EXPECT_EQ(c.isolated_vertices, 2);
  EXPECT_TRUE(are_isomorphic(c.core, make::complete(4).as_multi()));
}

TEST(TopologicalCore, NoDegreeTwoInCore) {
  for (const Graph& g : enumerate_connected(6)) {
    const CanonicalCore c = topological_core(g);
    for (Vertex v = 0; v < c.core.order(); ++v) {
      EXPECT_NE(c.core.degree(v), 2);
      EXPECT_NE(c.core.degree(v), 0);
    }
  }
}

TEST(Homeomorphic, SpecExamples) {
  EXPECT_TRUE(is_homeomorphic(make::cycle(5), make::cycle(3)));
  EXPECT_TRUE(is_homeomorphic(subdivide_all(k23(), 2), k23()));
  EXPECT_FALSE(is_homeomorphic(make::complete(4), make::theta(1, 2, 3)));
}

// Both cores are the three-edge dipole; see TopologicalCore.SubdividedK23IsDipole.
TEST(Homeomorphic, K23AndThetaShareACore) { EXPECT_TRUE(is_homeomorphic(k23(), make::theta(2, 1, 4))); }

TEST(Homeomorphic, CountersMustMatch) {
  const Graph two_cycles = make::disjoint_union(make::cycle(3), make::cycle(4));
  EXPECT_FALSE(is_homeomorphic(two_cycles, make::cycle(5)));
  EXPECT_FALSE(is_homeomorphic(make::cycle(3), make::disjoint_union(make::cycle(3), Graph::from_edge_list(1, {}))));
}

TEST(Isomorphic, SpecExamples) {
  EXPECT_TRUE(are_isomorphic(make::complete(4), make::complete(4).relabeled(std::vector<Vertex>{2, 0, 3, 1})));
  EXPECT_FALSE(are_isomorphic(make::cycle(6), make::disjoint_union(make::cycle(3), make::cycle(3))));
  EXPECT_FALSE(are_isomorphic(make::path(4), make::star(3)));
}

TEST(Isomorphic, MultiplicitiesMatter) {
  const Graph a = Graph::from_edge_list(3, {{0, 1}, {0, 1}, {1, 2}}, GraphMode::kMulti);
  const Graph b = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {1, 2}}, GraphMode::kMulti);
  const Graph c = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 2}}, GraphMode::kMulti);
  EXPECT_TRUE(are_isomorphic(a, b));
  EXPECT_FALSE(are_isomorphic(a, c));
}

TEST(Isomorphic, AgreesWithCanonicalCodeOnRandomPairs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Graph a = brute::random_graph(7, 0.45, rng);
    const Graph b = brute::random_graph(7, 0.45, rng);
    EXPECT_EQ(are_isomorphic(a, b), canonical_code(a) == canonical_code(b));
    EXPECT_TRUE(are_isomorphic(a, a.relabeled(brute::random_permutation(7, rng))));
  }
}

TEST(InducedK23, SpecExamples) {
  EXPECT_EQ(count_induced_k23(k23()), 1);
  EXPECT_EQ(count_induced_k23(make::cycle(5)), 0);
  EXPECT_EQ(count_induced_k23(make::complete_bipartite(3, 3)), 6);
}

// The literal five-vertex count misses subdivisions; the subdivision count
// does not.
TEST(InducedK23, SubdividedK23) {
  const Graph g = subdivide(k23(), 0);
  EXPECT_EQ(count_induced_k23(g), 0);
  EXPECT_TRUE(is_k23_subdivision(g));
  EXPECT_EQ(count_induced_k23_subdivisions(g), 1);
}

TEST(InducedK23, DiamondIsHomeomorphicButNotASubdivision) {
  const Graph diamond = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_TRUE(is_homeomorphic(diamond, k23()));
  EXPECT_FALSE(is_k23_subdivision(diamond));
  EXPECT_EQ(count_induced_k23_subdivisions(diamond), 0);
}

TEST(InducedK23, RelabelingInvariant) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Graph g = brute::random_graph(8, 0.5, rng);
    EXPECT_EQ(count_induced_k23(g), count_induced_k23(g.relabeled(brute::random_permutation(8, rng))));
  }
}

TEST(Structure, BowtieCutVertex) {
  const Graph bowtie = make::glue_at_vertex(make::cycle(3), 0, make::cycle(3), 0);
  ASSERT_EQ(bowtie.order(), 5);
  const std::vector<Vertex> cuts = cut_vertices(bowtie);
  ASSERT_EQ(cuts.size(), 1U);
  EXPECT_EQ(bowtie.degree(cuts[0]), 4);
}

TEST(Structure, K23Bipartition) {
  const auto parts = bipartition(k23());
  ASSERT_TRUE(parts.has_value());
  EXPECT_EQ(parts->first, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(parts->second, (std::vector<Vertex>{2, 3, 4}));
}

TEST(Structure, OddCycleNotBipartite) { EXPECT_FALSE(bipartition(make::cycle(5)).has_value()); }

TEST(Structure, Connectivity) {
  EXPECT_TRUE(is_connected(make::petersen()));
  int count = 0;
  connected_components(make::disjoint_union(make::cycle(3), make::path(2)), &count);
  EXPECT_EQ(count, 2);
  EXPECT_TRUE(cut_vertices(make::complete(5)).empty());
  EXPECT_EQ(cut_vertices(make::path(4)), (std::vector<Vertex>{1, 2}));
}

TEST(Fixtures, ClassicalGraphs) {
  EXPECT_EQ(make::petersen().size(), 15);
  const Graph h = make::herschel();
  EXPECT_EQ(h.order(), 11);
  EXPECT_EQ(h.size(), 18);
  EXPECT_TRUE(bipartition(h).has_value());
  EXPECT_TRUE(cut_vertices(h).empty());
}

TEST(Properties, SmoothUndoesSubdivide) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    const Graph g = brute::random_graph(7, 0.5, rng);
    for (EdgeId e = 0; e < g.size(); ++e) {
      const Graph s = subdivide(g, e);
      EXPECT_TRUE(are_isomorphic(smooth(s, g.order()), g.as_multi()));
    }
  }
}

TEST(Properties, CoreIsIdempotentAndConfluent) {
  std::uint64_t seed = 0;
  for (const Graph& g : enumerate_connected(6)) {
    const CanonicalCore base = topological_core(g);
    const CanonicalCore again = topological_core(base.core);
    EXPECT_TRUE(are_isomorphic(again.core, base.core));
    EXPECT_EQ(again.cycle_components, 0);
    for (int k = 0; k < 3; ++k) {
      const CanonicalCore shuffled = topological_core(g, ++seed);
      EXPECT_TRUE(are_isomorphic(shuffled.core, base.core));
      EXPECT_EQ(shuffled.cycle_components, base.cycle_components);
      EXPECT_EQ(shuffled.isolated_vertices, base.isolated_vertices);
    }
  }
}

TEST(Properties, HomeomorphismSurvivesSubdivision) {
  std::mt19937_64 rng(3);
  for (const Graph& g : enumerate_connected(5)) {
    EXPECT_TRUE(is_homeomorphic(g, g));
    Graph s = g;
    for (int k = std::uniform_int_distribution<int>(1, 5)(rng); k > 0 && s.size() > 0; --k) {
      s = subdivide(s, std::uniform_int_distribution<int>(0, s.size() - 1)(rng));
    }
    EXPECT_TRUE(is_homeomorphic(g, s));
    EXPECT_TRUE(is_homeomorphic(s, g));
  }
}
