#include "normgraph/norm.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "normgraph/topology.hpp"

namespace normgraph {

VertexClassification classify_vertices(const Graph& g, const CycleBasis& basis, BoundaryMode mode) {
  if (basis.host.fingerprint() != g.fingerprint()) {
    throw GraphError(ErrorCode::kHostMismatch, "basis was built on another graph");
  }
  const int n = g.order();
  std::vector<int> r(g.size(), 0);
  for (EdgeId e = 0; e < g.size(); ++e) r[e] = edge_multiplicity(basis.cycles, e);

  std::vector<char> cut(n, 0);
  for (Vertex v : cut_vertices(g)) cut[v] = 1;

  VertexClassification out;
  for (Vertex v = 0; v < n; ++v) {
    int ones = 0;
    bool on_cycle = false;
    for (EdgeId e : g.incident(v)) {
      ones += r[e] == 1;
      on_cycle = on_cycle || r[e] > 0;
    }
    const bool boundary = mode == BoundaryMode::kLoose ? ones == 2 : (g.degree(v) == 2 && ones == 2);
    if (cut[v]) {
      out.cut_points.push_back(v);
    } else if (boundary) {
      out.boundary.push_back(v);
    } else if (on_cycle) {
      out.inside.push_back(v);
    } else {
      out.other.push_back(v);
    }
  }
  return out;
}

IPartition i_partition(const Graph& g, const CycleBasis& basis, BoundaryMode mode) {
  const VertexClassification cls = classify_vertices(g, basis, mode);
  std::uint64_t inside = 0;
  for (Vertex v : cls.inside) inside |= std::uint64_t{1} << v;

  const int k = basis.rank();
  std::vector<std::uint64_t> touch(k);
  for (int i = 0; i < k; ++i) touch[i] = basis.cycles[i].vertex_mask(g) & inside;

  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (touch[i] & touch[j]) parent[find(i)] = find(j);
    }
  }
  IPartition out;
  std::vector<int> slot(k, -1);
  for (int i = 0; i < k; ++i) {
    const int root = find(i);
    if (slot[root] < 0) {
      slot[root] = out.count();
      out.clusters.emplace_back();
    }
    out.clusters[slot[root]].push_back(i);
  }
  return out;
}

NormDiagnostics norm_diagnostics(const Graph& g, const NormOptions& options) {
  const CycleBasis basis = fundamental_basis(g, options.root);
  NormDiagnostics d;
  d.rank = basis.rank();
  d.vertices = classify_vertices(g, basis, options.boundary);
  d.partition = i_partition(g, basis, options.boundary);
  d.i_count = d.partition.count();
  d.norm = d.i_count == 1;
  return d;
}

NormDiagnostics is_norm(const Graph& g, const NormOptions& options) {
  if (!is_connected(g)) throw GraphError(ErrorCode::kDisconnected, "norm test needs a connected graph");
  const ReductionReport again = reduce(g, options.reduction);
  if (again.changed(g)) throw GraphError(ErrorCode::kNotReduced, "reduce would still change this graph");
  return norm_diagnostics(g, options);
}

std::string_view to_string(PairClass c) {
  switch (c) {
    case PairClass::kVE: return "VE";
    case PairClass::kV0: return "V0";
    case PairClass::kWeak: return "WEAK";
    case PairClass::kDisjoint: return "DISJOINT";
  }
  return "?";
}

PairInfo classify_pair(const Graph& g, const EdgeVector& a, const EdgeVector& b) {
  if (!a.is_cycle(g) || !b.is_cycle(g)) throw GraphError(ErrorCode::kNotACycle, "classify_pair needs two cycles");
  PairInfo info;
  info.shared_edges = a.shared_edges(b);
  info.shared_vertices = std::popcount(a.vertex_mask(g) & b.vertex_mask(g));
  if (info.shared_edges >= 1) {
    info.cls = PairClass::kVE;
  } else if (info.shared_vertices >= 2) {
    info.cls = PairClass::kV0;
  } else if (info.shared_vertices == 1) {
    info.cls = PairClass::kWeak;
  } else {
    info.cls = PairClass::kDisjoint;
  }
  return info;
}

}  // namespace normgraph
