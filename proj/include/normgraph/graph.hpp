#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace normgraph {

using Vertex = int;
using EdgeId = int;

/// Hard upper bound on graph order. Several hot paths keep one 64-bit
/// neighbourhood mask per vertex.
inline constexpr int kMaxOrder = 64;

enum class GraphMode { kSimple, kMulti };

enum class ErrorCode {
  kDuplicateEdge,
  kLoopInSimpleMode,
  kEndpointOutOfRange,
  kOrderTooLarge,
  kUnknownEdge,
  kUnknownVertex,
  kNotDegreeTwo,
  kNotSimple,
  kDisconnected,
  kHostMismatch,
  kRankTooLarge,
  kSearchCapExceeded,
  kTooSmall,
  kNotReduced,
  kNotACycle,
  kNotNormGraph,
  kMalformedGraph6,
  kMalformedEdgeList,
  kNTooLarge,
};

std::string_view to_string(ErrorCode code);

class GraphError : public std::runtime_error {
 public:
  GraphError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for the errors that signal an internal search/rank cap rather than bad input.
  bool is_cap() const noexcept {
    return code_ == ErrorCode::kRankTooLarge || code_ == ErrorCode::kSearchCapExceeded;
  }

 private:
  ErrorCode code_;
};

/// Unordered edge with u <= v. A loop has u == v (multigraph mode only).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool is_loop() const { return u == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected graph on dense vertex ids 0..n-1.
///
/// Edge ids are the positions of the edges in sorted (u, v) order, so two
/// graphs built from the same edge multiset always agree on ids. In multi
/// mode parallel edges and loops are allowed; a loop contributes 2 to the
/// degree of its vertex.
class Graph {
 public:
  Graph() = default;

  static Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs,
                              GraphMode mode = GraphMode::kSimple);
  static Graph from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs,
                              GraphMode mode = GraphMode::kSimple) {
    return from_edge_list(n, std::span(pairs.begin(), pairs.size()), mode);
  }
  static Graph from_edges(int n, std::span<const Edge> edges, GraphMode mode = GraphMode::kSimple);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  GraphMode mode() const { return mode_; }
  bool is_simple_mode() const { return mode_ == GraphMode::kSimple; }
  /// True when the edge multiset has no loops or parallel edges, whatever the mode.
  bool is_simple() const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const;
  bool has_edge_id(EdgeId e) const { return e >= 0 && e < size(); }

  int degree(Vertex v) const { return degree_[check_vertex(v)]; }
  std::vector<int> degree_sequence() const { return degree_; }
  /// Edge ids incident to v in ascending order. A loop is listed once.
  std::span<const EdgeId> incident(Vertex v) const {
    const auto& inc = incident_[check_vertex(v)];
    return {inc.data(), inc.size()};
  }
  /// Distinct neighbours of v in ascending order (v itself if it carries a loop).
  std::span<const Vertex> neighbors(Vertex v) const {
    const auto& nb = neighbors_[check_vertex(v)];
    return {nb.data(), nb.size()};
  }
  std::uint64_t neighbor_mask(Vertex v) const { return masks_[check_vertex(v)]; }

  bool adjacent(Vertex u, Vertex v) const { return (neighbor_mask(u) >> v) & 1U; }
  int multiplicity(Vertex u, Vertex v) const;
  /// Lowest edge id joining u and v, if any.
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

  /// Content hash of (n, sorted edge multiset); identifies a host graph.
  std::uint64_t fingerprint() const { return fingerprint_; }

  /// Same edge multiset, simple mode. Throws kNotSimple on loops/parallel edges.
  Graph as_simple() const;
  /// Same edge multiset, multi mode.
  Graph as_multi() const;
  /// Graph with vertices renamed by perm (new id of v is perm[v]).
  Graph relabeled(std::span<const Vertex> perm) const;
  /// Subgraph induced by the given vertices, renumbered in ascending order.
  Graph induced(std::span<const Vertex> vertices) const;
  Graph induced_mask(std::uint64_t vertex_mask) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.mode_ == b.mode_ && a.edges_ == b.edges_;
  }

 private:
  Vertex check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw GraphError(ErrorCode::kUnknownVertex, "vertex " + std::to_string(v));
    return v;
  }
  void build_index();

  int n_ = 0;
  GraphMode mode_ = GraphMode::kSimple;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::uint64_t> masks_;
  std::uint64_t fingerprint_ = 0;
};

// Named constructors used throughout tests, fixtures and the CLI.
namespace make {
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph star(int leaves);
Graph petersen();
Graph herschel();
/// Two vertices joined by three internally disjoint paths with the given
/// numbers of internal vertices.
Graph theta(int a, int b, int c);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Union of a and b with b's vertex `b_vertex` identified with a's `a_vertex`.
Graph glue_at_vertex(const Graph& a, Vertex a_vertex, const Graph& b, Vertex b_vertex);
/// Disjoint union of a and b plus one bridge edge a_vertex -- b_vertex.
Graph join_by_bridge(const Graph& a, Vertex a_vertex, const Graph& b, Vertex b_vertex);
}  // namespace make

}  // namespace normgraph
