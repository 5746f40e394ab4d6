#pragma once

// Deliberately naive reference implementations used as test oracles.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "normgraph/graph.hpp"

namespace brute {

using normgraph::Graph;
using normgraph::Vertex;

// Tries every cyclic order with vertex 0 fixed. n <= 10.
inline bool hamiltonian_by_permutation(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<Vertex> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    if (rest.front() > rest.back()) continue;  // each cycle once per direction
    bool ok = g.adjacent(0, rest.front()) && g.adjacent(rest.back(), 0);
    for (int i = 0; ok && i + 1 < n - 1; ++i) ok = g.adjacent(rest[i], rest[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

inline bool connected(const Graph& g) {
  if (g.order() == 0) return false;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == g.order();
}

// Minimum adjacency code over all n! relabellings.
inline std::uint64_t min_code(int n, std::uint64_t adj_bits) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto bit = [n](int i, int j) { return i * n + j; };
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        code = (code << 1) | ((adj_bits >> bit(perm[i], perm[j])) & 1U);
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Isomorphism classes of labelled graphs on n vertices (n <= 6), optionally
// connected only, by brute-force relabelling of all 2^(n choose 2) graphs.
inline long long count_classes(int n, bool connected_only) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::set<std::uint64_t> codes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::uint64_t adj = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) {
        const auto [i, j] = pairs[k];
        adj |= std::uint64_t{1} << (i * n + j);
        adj |= std::uint64_t{1} << (j * n + i);
        edges.emplace_back(i, j);
      }
    }
    if (connected_only && !connected(Graph::from_edge_list(n, edges))) continue;
    codes.insert(min_code(n, adj));
  }
  return static_cast<long long>(codes.size());
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(n, edges);
}

inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  while (true) {
    Graph g = random_graph(n, p, rng);
    if (connected(g)) return g;
  }
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace brute
