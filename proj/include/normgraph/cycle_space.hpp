#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "normgraph/graph.hpp"

namespace normgraph {

/// GF(2) indicator vector over the edge ids of one host graph.
class EdgeVector {
 public:
  EdgeVector() = default;
  explicit EdgeVector(const Graph& host);
  static EdgeVector from_edges(const Graph& host, std::span<const EdgeId> ids);

  std::uint64_t host() const { return host_; }
  int universe() const { return universe_; }

  bool test(EdgeId e) const;
  void flip(EdgeId e);
  void set(EdgeId e);
  int count() const;
  bool empty() const { return count() == 0; }
  std::vector<EdgeId> edge_ids() const;
  std::span<const std::uint64_t> words() const { return words_; }

  /// Symmetric difference. Throws kHostMismatch across hosts.
  EdgeVector& operator+=(const EdgeVector& other);
  friend EdgeVector operator+(EdgeVector a, const EdgeVector& b) { return a += b; }
  friend bool operator==(const EdgeVector& a, const EdgeVector& b) {
    return a.host_ == b.host_ && a.words_ == b.words_;
  }

  int shared_edges(const EdgeVector& other) const;

  // The queries below need the host graph; it must match host().
  std::vector<int> vertex_degrees(const Graph& g) const;
  std::uint64_t vertex_mask(const Graph& g) const;
  /// Non-empty, connected, every touched vertex of degree 2.
  bool is_cycle(const Graph& g) const;
  /// A cycle through every vertex of g.
  bool is_hamilton_cycle(const Graph& g) const;
  /// Simple graph on the touched vertices (renumbered ascending) with these edges.
  Graph as_graph(const Graph& g) const;
  /// "u-v u-v ..." in edge-id order.
  std::string describe(const Graph& g) const;

 private:
  void check_host(const Graph& g) const;

  std::uint64_t host_ = 0;
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

using CycleSet = std::vector<EdgeVector>;

struct CycleBasis {
  Graph host;
  Vertex root = 0;
  std::vector<EdgeId> tree;    // ascending
  std::vector<EdgeId> chords;  // ascending; chords[i] generates cycles[i]
  CycleSet cycles;

  int rank() const { return static_cast<int>(cycles.size()); }
};

/// Fundamental basis from a BFS tree rooted at `root`, neighbours taken in
/// ascending order; one cycle per chord, chords in ascending edge id.
/// Requires a connected simple graph.
CycleBasis fundamental_basis(const Graph& g, Vertex root = 0);

/// GF(2) sum. Throws kHostMismatch when the vectors belong to different hosts
/// and kUnknownEdge on an empty list (no host to sum over).
EdgeVector cycle_sum(std::span<const EdgeVector> cycles);

/// Number of vectors in `cycles` containing edge e.
int edge_multiplicity(std::span<const EdgeVector> cycles, EdgeId e);

struct SubsetSearchOptions {
  int rank_cap = 25;
};

struct HamiltonSum {
  std::vector<int> subset;  // ascending basis indices
  EdgeVector cycle;
  long long nodes = 0;
};

/// Searches subsets of the basis for one whose sum is a Hamilton cycle.
/// Every Hamilton cycle lies in the cycle space, so this is exact. The first
/// witness in include-first depth-first order is returned.
std::optional<HamiltonSum> subset_sum_hamilton(const Graph& g, const CycleBasis& basis,
                                               const SubsetSearchOptions& options = {});

}  // namespace normgraph
