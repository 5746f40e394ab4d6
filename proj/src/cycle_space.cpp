#include "normgraph/cycle_space.hpp"

#include <algorithm>
#include <bit>

#include "normgraph/topology.hpp"

namespace normgraph {

EdgeVector::EdgeVector(const Graph& host)
    : host_(host.fingerprint()), universe_(host.size()), words_((host.size() + 63) / 64, 0) {}

EdgeVector EdgeVector::from_edges(const Graph& host, std::span<const EdgeId> ids) {
  EdgeVector v(host);
  for (EdgeId e : ids) v.flip(e);
  return v;
}

bool EdgeVector::test(EdgeId e) const {
  if (e < 0 || e >= universe_) throw GraphError(ErrorCode::kUnknownEdge, "edge id " + std::to_string(e));
  return (words_[e / 64] >> (e % 64)) & 1U;
}

void EdgeVector::flip(EdgeId e) {
  if (e < 0 || e >= universe_) throw GraphError(ErrorCode::kUnknownEdge, "edge id " + std::to_string(e));
  words_[e / 64] ^= std::uint64_t{1} << (e % 64);
}

void EdgeVector::set(EdgeId e) {
  if (!test(e)) flip(e);
}

int EdgeVector::count() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::vector<EdgeId> EdgeVector::edge_ids() const {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<EdgeId>(i * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

EdgeVector& EdgeVector::operator+=(const EdgeVector& other) {
  if (host_ != other.host_ || universe_ != other.universe_) {
    throw GraphError(ErrorCode::kHostMismatch, "edge vectors over different hosts");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

int EdgeVector::shared_edges(const EdgeVector& other) const {
  if (host_ != other.host_) throw GraphError(ErrorCode::kHostMismatch, "edge vectors over different hosts");
  int c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
  return c;
}

void EdgeVector::check_host(const Graph& g) const {
  if (g.fingerprint() != host_ || g.size() != universe_) {
    throw GraphError(ErrorCode::kHostMismatch, "graph is not the host of this edge vector");
  }
}

std::vector<int> EdgeVector::vertex_degrees(const Graph& g) const {
  check_host(g);
  std::vector<int> deg(g.order(), 0);
  for (EdgeId e : edge_ids()) {
    deg[g.edge(e).u] += 1;
    deg[g.edge(e).v] += 1;
  }
  return deg;
}

std::uint64_t EdgeVector::vertex_mask(const Graph& g) const {
  check_host(g);
  std::uint64_t mask = 0;
  for (EdgeId e : edge_ids()) {
    mask |= std::uint64_t{1} << g.edge(e).u;
    mask |= std::uint64_t{1} << g.edge(e).v;
  }
  return mask;
}

bool EdgeVector::is_cycle(const Graph& g) const {
  if (empty()) return false;
  const auto deg = vertex_degrees(g);
  for (int d : deg) {
    if (d != 0 && d != 2) return false;
  }
  // Degrees all 2 on touched vertices: connected iff one component.
  const Graph sub = as_graph(g);
  return is_connected(sub);
}

bool EdgeVector::is_hamilton_cycle(const Graph& g) const {
  if (g.order() < 3 || count() != g.order()) return false;
  return is_cycle(g) && std::popcount(vertex_mask(g)) == g.order();
}

Graph EdgeVector::as_graph(const Graph& g) const {
  const std::uint64_t mask = vertex_mask(g);
  std::vector<Vertex> index(g.order(), -1);
  int k = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if ((mask >> v) & 1U) index[v] = k++;
  }
  std::vector<Edge> edges;
  for (EdgeId e : edge_ids()) edges.push_back({index[g.edge(e).u], index[g.edge(e).v]});
  return Graph::from_edges(k, edges, g.mode());
}

std::string EdgeVector::describe(const Graph& g) const {
  check_host(g);
  std::string out;
  for (EdgeId e : edge_ids()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
  }
  return out;
}

CycleBasis fundamental_basis(const Graph& g, Vertex root) {
  if (!g.is_simple()) throw GraphError(ErrorCode::kNotSimple, "fundamental_basis needs a simple graph");
  if (g.order() == 0 || !is_connected(g)) throw GraphError(ErrorCode::kDisconnected, "host graph is not connected");
  if (root < 0 || root >= g.order()) throw GraphError(ErrorCode::kUnknownVertex, "root " + std::to_string(root));

  const int n = g.order();
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<int> depth(n, -1);
  std::vector<char> in_tree(g.size(), 0);
  std::vector<Vertex> queue{root};
  depth[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex u : g.neighbors(v)) {
      if (depth[u] >= 0) continue;
      depth[u] = depth[v] + 1;
      parent_edge[u] = *g.find_edge(v, u);
      in_tree[parent_edge[u]] = 1;
      queue.push_back(u);
    }
  }

  CycleBasis basis;
  basis.host = g;
  basis.root = root;
  for (EdgeId e = 0; e < g.size(); ++e) (in_tree[e] ? basis.tree : basis.chords).push_back(e);
  for (EdgeId chord : basis.chords) {
    EdgeVector cyc(g);
    cyc.flip(chord);
    Vertex a = g.edge(chord).u;
    Vertex b = g.edge(chord).v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      const EdgeId pe = parent_edge[a];
      cyc.flip(pe);
      a = g.edge(pe).other(a);
    }
    basis.cycles.push_back(std::move(cyc));
  }
  return basis;
}

EdgeVector cycle_sum(std::span<const EdgeVector> cycles) {
  if (cycles.empty()) throw GraphError(ErrorCode::kUnknownEdge, "cycle_sum of an empty list has no host");
  EdgeVector sum = cycles.front();
  for (std::size_t i = 1; i < cycles.size(); ++i) sum += cycles[i];
  return sum;
}

int edge_multiplicity(std::span<const EdgeVector> cycles, EdgeId e) {
  int r = 0;
  for (const EdgeVector& c : cycles) r += c.test(e);
  return r;
}

namespace {

class SubsetSearch {
 public:
  SubsetSearch(const Graph& g, const CycleBasis& basis)
      : g_(g), basis_(basis), k_(basis.rank()), words_((g.size() + 63) / 64) {
    const int n = g.order();
    incident_.assign(n, std::vector<std::uint64_t>(words_, 0));
    for (EdgeId e = 0; e < g.size(); ++e) {
      incident_[g.edge(e).u][e / 64] |= std::uint64_t{1} << (e % 64);
      incident_[g.edge(e).v][e / 64] |= std::uint64_t{1} << (e % 64);
    }
    // remaining_[i] = union of cycles i..k-1.
    remaining_.assign(k_ + 1, std::vector<std::uint64_t>(words_, 0));
    for (int i = k_ - 1; i >= 0; --i) {
      remaining_[i] = remaining_[i + 1];
      const auto w = basis.cycles[i].words();
      for (int j = 0; j < words_; ++j) remaining_[i][j] |= w[j];
    }
    partial_.assign(words_, 0);
  }

  std::optional<HamiltonSum> run() {
    if (search(0)) {
      HamiltonSum out;
      out.subset = chosen_;
      std::vector<EdgeVector> picked;
      for (int i : chosen_) picked.push_back(basis_.cycles[i]);
      out.cycle = picked.empty() ? EdgeVector(g_) : cycle_sum(picked);
      out.nodes = nodes_;
      return out;
    }
    return std::nullopt;
  }

  long long nodes() const { return nodes_; }

 private:
  // Degree of v among edges of the partial sum that no undecided cycle can touch.
  int frozen_degree(Vertex v, int next) const {
    int d = 0;
    for (int j = 0; j < words_; ++j) d += std::popcount(partial_[j] & incident_[v][j] & ~remaining_[next][j]);
    return d;
  }
  bool open(Vertex v, int next) const {
    for (int j = 0; j < words_; ++j) {
      if (incident_[v][j] & remaining_[next][j]) return true;
    }
    return false;
  }

  bool feasible(int next) const {
    for (Vertex v = 0; v < g_.order(); ++v) {
      const int d = frozen_degree(v, next);
      if (d > 2) return false;
      // A vertex no undecided cycle can reach is final and must have degree 2.
      if (d != 2 && !open(v, next)) return false;
    }
    return true;
  }

  void toggle(int i) {
    const auto w = basis_.cycles[i].words();
    for (int j = 0; j < words_; ++j) partial_[j] ^= w[j];
  }

  bool search(int i) {
    ++nodes_;
    if (!feasible(i)) return false;
    if (i == k_) {
      EdgeVector sum(g_);
      for (EdgeId e = 0; e < g_.size(); ++e) {
        if ((partial_[e / 64] >> (e % 64)) & 1U) sum.flip(e);
      }
      return sum.is_hamilton_cycle(g_);
    }
    toggle(i);
    chosen_.push_back(i);
    if (search(i + 1)) return true;
    chosen_.pop_back();
    toggle(i);
    return search(i + 1);
  }

  const Graph& g_;
  const CycleBasis& basis_;
  int k_;
  int words_;
  std::vector<std::vector<std::uint64_t>> incident_;
  std::vector<std::vector<std::uint64_t>> remaining_;
  std::vector<std::uint64_t> partial_;
  std::vector<int> chosen_;
  long long nodes_ = 0;
};

}  // namespace

std::optional<HamiltonSum> subset_sum_hamilton(const Graph& g, const CycleBasis& basis,
                                               const SubsetSearchOptions& options) {
  if (g.order() < 3) throw GraphError(ErrorCode::kTooSmall, "need at least 3 vertices");
  if (!is_connected(g)) throw GraphError(ErrorCode::kDisconnected, "host graph is not connected");
  if (basis.host.fingerprint() != g.fingerprint()) {
    throw GraphError(ErrorCode::kHostMismatch, "basis was built on another graph");
  }
  if (basis.rank() > options.rank_cap) {
    throw GraphError(ErrorCode::kRankTooLarge, "cycle rank " + std::to_string(basis.rank()) + " exceeds cap " +
                                                   std::to_string(options.rank_cap));
  }
  SubsetSearch search(g, basis);
  return search.run();
}

}  // namespace normgraph
