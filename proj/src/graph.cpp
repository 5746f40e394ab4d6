#include "normgraph/graph.hpp"

#include <algorithm>
#include <numeric>

namespace normgraph {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kLoopInSimpleMode: return "LoopInSimpleMode";
    case ErrorCode::kEndpointOutOfRange: return "EndpointOutOfRange";
    case ErrorCode::kOrderTooLarge: return "OrderTooLarge";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kNotDegreeTwo: return "NotDegreeTwo";
    case ErrorCode::kNotSimple: return "NotSimple";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kHostMismatch: return "HostMismatch";
    case ErrorCode::kRankTooLarge: return "RankTooLarge";
    case ErrorCode::kSearchCapExceeded: return "SearchCapExceeded";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kNotReduced: return "NotReduced";
    case ErrorCode::kNotACycle: return "NotACycle";
    case ErrorCode::kNotNormGraph: return "NotNormGraph";
    case ErrorCode::kMalformedGraph6: return "MalformedGraph6";
    case ErrorCode::kMalformedEdgeList: return "MalformedEdgeList";
    case ErrorCode::kNTooLarge: return "NTooLarge";
  }
  return "Unknown";
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs, GraphMode mode) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return from_edges(n, edges, mode);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges, GraphMode mode) {
  if (n < 0 || n > kMaxOrder) {
    throw GraphError(ErrorCode::kOrderTooLarge, "order " + std::to_string(n) + " outside 0.." +
                                                    std::to_string(kMaxOrder));
  }
  Graph g;
  g.n_ = n;
  g.mode_ = mode;
  g.edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw GraphError(ErrorCode::kEndpointOutOfRange,
                       "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " with n=" + std::to_string(n));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.is_loop() && mode == GraphMode::kSimple) {
      throw GraphError(ErrorCode::kLoopInSimpleMode, "loop at " + std::to_string(e.u));
    }
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (mode == GraphMode::kSimple) {
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
      throw GraphError(ErrorCode::kDuplicateEdge, std::to_string(dup->u) + "-" + std::to_string(dup->v));
    }
  }
  g.build_index();
  return g;
}

void Graph::build_index() {
  degree_.assign(n_, 0);
  incident_.assign(n_, {});
  neighbors_.assign(n_, {});
  masks_.assign(n_, 0);
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(n_));
  for (EdgeId id = 0; id < size(); ++id) {
    const Edge& e = edges_[id];
    mix((static_cast<std::uint64_t>(e.u) << 8) | static_cast<std::uint64_t>(e.v));
    degree_[e.u] += 1;
    degree_[e.v] += 1;
    incident_[e.u].push_back(id);
    if (!e.is_loop()) incident_[e.v].push_back(id);
    masks_[e.u] |= std::uint64_t{1} << e.v;
    masks_[e.v] |= std::uint64_t{1} << e.u;
  }
  fingerprint_ = h;
  for (Vertex v = 0; v < n_; ++v) {
    for (std::uint64_t m = masks_[v]; m != 0; m &= m - 1) {
      neighbors_[v].push_back(std::countr_zero(m));
    }
  }
}

bool Graph::is_simple() const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].is_loop()) return false;
    if (i > 0 && edges_[i] == edges_[i - 1]) return false;
  }
  return true;
}

const Edge& Graph::edge(EdgeId e) const {
  if (!has_edge_id(e)) throw GraphError(ErrorCode::kUnknownEdge, "edge id " + std::to_string(e));
  return edges_[e];
}

int Graph::multiplicity(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  Edge key{std::min(u, v), std::max(u, v)};
  auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), key);
  return static_cast<int>(hi - lo);
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

Graph Graph::as_simple() const {
  if (!is_simple()) throw GraphError(ErrorCode::kNotSimple, "graph has loops or parallel edges");
  return from_edges(n_, edges_, GraphMode::kSimple);
}

Graph Graph::as_multi() const { return from_edges(n_, edges_, GraphMode::kMulti); }

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back({perm[e.u], perm[e.v]});
  return from_edges(n_, out, mode_);
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Vertex> index(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[check_vertex(keep[i])] = static_cast<Vertex>(i);
  std::vector<Edge> out;
  for (const Edge& e : edges_) {
    if (index[e.u] >= 0 && index[e.v] >= 0) out.push_back({index[e.u], index[e.v]});
  }
  return from_edges(static_cast<int>(keep.size()), out, mode_);
}

Graph Graph::induced_mask(std::uint64_t vertex_mask) const {
  std::vector<Vertex> keep;
  for (std::uint64_t m = vertex_mask; m != 0; m &= m - 1) keep.push_back(std::countr_zero(m));
  return induced(keep);
}

namespace make {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, e);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::from_edges(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return Graph::from_edges(a + b, e);
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph::from_edges(10, e);
}

Graph herschel() {
  return Graph::from_edge_list(11, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 7}, {3, 8},
                                    {3, 9}, {4, 5}, {4, 9}, {5, 10}, {6, 7}, {6, 10}, {7, 8}, {8, 10}, {9, 10}});
}

Graph theta(int a, int b, int c) {
  std::vector<Edge> e;
  int next = 2;
  for (int len : {a, b, c}) {
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      e.push_back({prev, next});
      prev = next++;
    }
    e.push_back({prev, 1});
  }
  return Graph::from_edges(next, e, GraphMode::kMulti).as_multi();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e(a.edges());
  for (const Edge& x : b.edges()) e.push_back({x.u + a.order(), x.v + a.order()});
  return Graph::from_edges(a.order() + b.order(), e, a.mode() == GraphMode::kMulti || b.mode() == GraphMode::kMulti
                                                         ? GraphMode::kMulti
                                                         : GraphMode::kSimple);
}

Graph glue_at_vertex(const Graph& a, Vertex a_vertex, const Graph& b, Vertex b_vertex) {
  // b's vertices other than b_vertex are appended after a's, in order.
  std::vector<Vertex> map(b.order());
  int next = a.order();
  for (Vertex v = 0; v < b.order(); ++v) map[v] = v == b_vertex ? a_vertex : next++;
  std::vector<Edge> e(a.edges());
  for (const Edge& x : b.edges()) e.push_back({map[x.u], map[x.v]});
  return Graph::from_edges(next, e, a.mode());
}

Graph join_by_bridge(const Graph& a, Vertex a_vertex, const Graph& b, Vertex b_vertex) {
  Graph u = disjoint_union(a, b);
  std::vector<Edge> e(u.edges());
  e.push_back({a_vertex, b_vertex + a.order()});
  return Graph::from_edges(u.order(), e, u.mode());
}

}  // namespace make

}  // namespace normgraph
