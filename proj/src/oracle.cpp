#include "normgraph/oracle.hpp"

#include <algorithm>
#include <bit>

#include "normgraph/topology.hpp"

namespace normgraph {

namespace {

using Clock = std::chrono::steady_clock;

struct TimeoutSignal {};

class TourSearch {
 public:
  TourSearch(const Graph& g, const OracleOptions& options)
      : g_(g), n_(g.order()), all_((n_ == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1),
        options_(options), start_time_(Clock::now()) {}

  // Searches tours that begin start -> second (second < 0: free).
  bool run(Vertex start, Vertex second) {
    start_ = start;
    path_.assign(1, start);
    visited_ = std::uint64_t{1} << start;
    if (second >= 0) {
      path_.push_back(second);
      visited_ |= std::uint64_t{1} << second;
    }
    return extend();
  }

  const std::vector<Vertex>& path() const { return path_; }
  long long nodes() const { return nodes_; }

 private:
  bool prune() const {
    const Vertex end = path_.back();
    const std::uint64_t unvisited = all_ & ~visited_;
    const std::uint64_t endpoints = (std::uint64_t{1} << end) | (std::uint64_t{1} << start_);
    // Every unvisited vertex needs two usable tour neighbours.
    for (std::uint64_t m = unvisited; m != 0; m &= m - 1) {
      const Vertex u = std::countr_zero(m);
      if (std::popcount(g_.neighbor_mask(u) & (unvisited | endpoints)) < 2) return true;
    }
    // Unvisited region must be reachable from the path end, and the start
    // must still be reachable from it.
    std::uint64_t reach = g_.neighbor_mask(end) & unvisited;
    std::uint64_t frontier = reach;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m != 0; m &= m - 1) next |= g_.neighbor_mask(std::countr_zero(m));
      next &= unvisited & ~reach;
      reach |= next;
      frontier = next;
    }
    if (reach != unvisited) return true;
    if ((g_.neighbor_mask(start_) & unvisited) == 0) return true;
    return false;
  }

  bool extend() {
    ++nodes_;
    if (options_.timeout_ms > 0 && (nodes_ & 1023) == 0 &&
        Clock::now() - start_time_ > std::chrono::milliseconds(options_.timeout_ms)) {
      throw TimeoutSignal{};
    }
    const Vertex end = path_.back();
    if (static_cast<int>(path_.size()) == n_) return g_.adjacent(end, start_);
    if (prune()) return false;
    for (std::uint64_t m = g_.neighbor_mask(end) & ~visited_; m != 0; m &= m - 1) {
      const Vertex u = std::countr_zero(m);
      path_.push_back(u);
      visited_ |= std::uint64_t{1} << u;
      if (extend()) return true;
      visited_ &= ~(std::uint64_t{1} << u);
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::uint64_t all_;
  OracleOptions options_;
  Clock::time_point start_time_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  std::uint64_t visited_ = 0;
  long long nodes_ = 0;
};

bool trivially_non_hamiltonian(const Graph& g) {
  if (g.order() < 3) return true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) return true;
  }
  return !is_connected(g) || !cut_vertices(g).empty();
}

OracleResult search(const Graph& g, Vertex start, Vertex second, const OracleOptions& options) {
  if (!g.is_simple()) throw GraphError(ErrorCode::kNotSimple, "oracle needs a simple graph");
  OracleResult result;
  const auto t0 = Clock::now();
  if (!trivially_non_hamiltonian(g)) {
    TourSearch ts(g, options);
    try {
      if (ts.run(start, second)) {
        result.status = OracleStatus::kHamiltonian;
        result.witness = ts.path();
      }
    } catch (const TimeoutSignal&) {
      result.status = OracleStatus::kTimeout;
    }
    result.nodes_explored = ts.nodes();
  }
  result.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0);
  return result;
}

}  // namespace

OracleResult is_hamiltonian(const Graph& g, const OracleOptions& options) { return search(g, 0, -1, options); }

OracleResult hamiltonian_through_edge(const Graph& g, EdgeId e, const OracleOptions& options) {
  const Edge& edge = g.edge(e);
  return search(g, edge.u, edge.v, options);
}

std::vector<bool> edges_on_hamilton_cycles(const Graph& g, const OracleOptions& options) {
  std::vector<bool> used(g.size(), false);
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (used[e]) continue;
    const OracleResult r = hamiltonian_through_edge(g, e, options);
    if (r.timed_out()) throw GraphError(ErrorCode::kSearchCapExceeded, "oracle timeout on edge " + std::to_string(e));
    if (!r.hamiltonian()) continue;
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
      used[*g.find_edge(r.witness[i], r.witness[(i + 1) % r.witness.size()])] = true;
    }
  }
  return used;
}

bool validate_tour(const Graph& g, const std::vector<Vertex>& tour) {
  const int n = g.order();
  if (n < 3 || static_cast<int>(tour.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : tour) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i) {
    if (!g.adjacent(tour[i], tour[(i + 1) % n])) return false;
  }
  return true;
}

}  // namespace normgraph
