#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "brute.hpp"
#include "normgraph/enumerate.hpp"
#include "normgraph/io.hpp"
#include "normgraph/norm.hpp"
#include "normgraph/reduction.hpp"

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

int count_lines_with(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  int n = 0;
  for (std::string line; std::getline(in, line);) n += line.find(needle) != std::string::npos;
  return n;
}

}  // namespace

// Bytes worked out by hand from the format: header n+63, then the upper
// triangle column by column in 6-bit groups, each +63.
TEST(Graph6, HandEncodedStrings) {
  EXPECT_EQ(parse_graph6("D?{"), make::star(4).relabeled(std::vector<Vertex>{4, 0, 1, 2, 3}));
  EXPECT_EQ(emit_graph6(make::complete_bipartite(2, 3)), "D]o");
  EXPECT_EQ(emit_graph6(make::complete(4)), "C~");
  EXPECT_EQ(emit_graph6(Graph::from_edge_list(0, {})), "?");
}

TEST(Graph6, HeaderAndWhitespaceAccepted) {
  EXPECT_EQ(parse_graph6(">>graph6<<D]o\n"), make::complete_bipartite(2, 3));
  EXPECT_EQ(parse_graph6("  C~  "), make::complete(4));
}

TEST(Graph6, Malformed) {
  EXPECT_EQ(error_of([] { parse_graph6("D?"); }), ErrorCode::kMalformedGraph6);
  EXPECT_EQ(error_of([] { parse_graph6("D?{{"); }), ErrorCode::kMalformedGraph6);
  EXPECT_EQ(error_of([] { parse_graph6(""); }), ErrorCode::kMalformedGraph6);
  EXPECT_EQ(error_of([] { parse_graph6("D ?{"); }), ErrorCode::kMalformedGraph6);
}

TEST(Graph6, RoundTripCorpus) {
  for (int n = 0; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const std::string s = emit_graph6(g);
      EXPECT_EQ(parse_graph6(s), g);
      EXPECT_EQ(emit_graph6(parse_graph6(s)), s);
    }
  }
}

TEST(Graph6, RoundTripLargeOrders) {
  std::mt19937_64 rng(19);
  for (int n : {20, 62, 63, 64}) {
    const Graph g = brute::random_graph(n, 0.2, rng);
    EXPECT_EQ(parse_graph6(emit_graph6(g)), g) << n;
  }
  EXPECT_EQ(emit_graph6(Graph::from_edge_list(63, {})).substr(0, 4), std::string("~??~"));
}

TEST(Graph6, LinesSkipBlanksAndComments) {
  const std::vector<Graph> gs = parse_graph6_lines("# corpus\nC~\n\nD]o\n");
  ASSERT_EQ(gs.size(), 2U);
  EXPECT_EQ(gs[1], make::complete_bipartite(2, 3));
}

TEST(EdgeList, K23) {
  EXPECT_EQ(parse_edge_list("5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4"), make::complete_bipartite(2, 3));
}

TEST(EdgeList, Errors) {
  EXPECT_EQ(error_of([] { parse_edge_list("3 1\n0 5"); }), ErrorCode::kMalformedEdgeList);
  EXPECT_EQ(error_of([] { parse_edge_list("3 2\n0 1"); }), ErrorCode::kMalformedEdgeList);
  EXPECT_EQ(error_of([] { parse_edge_list("3 1\n0 1\n1 2"); }), ErrorCode::kMalformedEdgeList);
  EXPECT_EQ(error_of([] { parse_edge_list("3 2\n0 1\n1 0"); }), ErrorCode::kMalformedEdgeList);
  EXPECT_EQ(error_of([] { parse_edge_list("x"); }), ErrorCode::kMalformedEdgeList);
}

TEST(EdgeList, RoundTrip) {
  const Graph p = make::petersen();
  EXPECT_EQ(parse_edge_list(emit_edge_list(p)), p);
}

TEST(Dot, K23StatementCounts) {
  const Graph g = make::complete_bipartite(2, 3);
  const VertexClassification c = classify_vertices(g, fundamental_basis(g));
  const ReductionReport r = forced_edge_fixpoint(g);
  const std::string dot = emit_dot(g, DotAnnotations{c, r.forced_edges, r.deleted_edges});
  EXPECT_EQ(dot.rfind("graph G {", 0), 0U);
  EXPECT_EQ(count_lines_with(dot, " -- "), 6);
  EXPECT_EQ(count_lines_with(dot, "[class="), 5);
  EXPECT_EQ(count_lines_with(dot, "class=\"inside\""), 1);
  EXPECT_EQ(count_lines_with(dot, "forced=true"), 6);
}

TEST(Dot, DeletedEdgesMarked) {
  const Graph g = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 4}, {4, 5}, {0, 3}, {2, 3}, {3, 5}, {2, 5}});
  const ReductionReport r = forced_edge_fixpoint(g);
  const std::string dot = emit_dot(g, DotAnnotations{std::nullopt, r.forced_edges, r.deleted_edges});
  EXPECT_EQ(count_lines_with(dot, "deleted=true"), static_cast<int>(r.deleted_edges.size()));
  EXPECT_GT(r.deleted_edges.size(), 0U);
}
