#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normgraph/graph.hpp"
#include "normgraph/norm.hpp"

namespace normgraph {

/// graph6: one header byte n+63 (or 126 followed by three bytes for
/// 63 <= n <= 64), then the upper triangle in column order (x(0,1), x(0,2),
/// x(1,2), x(0,3), ...) packed six bits per byte, most significant first,
/// each byte offset by 63. An optional ">>graph6<<" prefix and trailing
/// whitespace are accepted.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Non-empty, non-comment lines of a graph6 file.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// "n m" followed by m lines "u v", 0-indexed. Any structural problem
/// (bad counts, out-of-range endpoints, duplicates, loops) is kMalformedEdgeList.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

struct DotAnnotations {
  std::optional<VertexClassification> vertices;
  std::vector<Edge> forced;
  std::vector<Edge> deleted;
};

/// One node statement per vertex and one edge statement per edge; vertex
/// classes and forced/deleted edges become attributes.
std::string emit_dot(const Graph& g, const DotAnnotations& annotations = {});

}  // namespace normgraph
