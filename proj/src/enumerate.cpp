#include "normgraph/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "normgraph/topology.hpp"

namespace normgraph {

namespace {

constexpr int kMaxCanonicalOrder = 11;  // 55 upper-triangle bits

// Colour refinement on one graph; colours are named by the sorted order of
// their signatures, so the ordered partition is labelling-invariant.
std::vector<int> refined_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (Vertex u : g.neighbors(v)) sig[v].second.push_back(colour[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::map<std::pair<int, std::vector<int>>, int> names;
    for (const auto& s : sig) names.emplace(s, 0);
    int next = 0;
    for (auto& [key, id] : names) id = next++;
    for (Vertex v = 0; v < n; ++v) colour[v] = names[sig[v]];
    if (next == classes) return colour;
    classes = next;
  }
}

std::uint64_t code_of(const Graph& g, const std::vector<Vertex>& label) {
  // label[v] = new id of v; bit for pair (i, j), i < j, in graph6 column order.
  std::uint64_t code = 0;
  const int n = g.order();
  std::vector<Vertex> at(n);
  for (Vertex v = 0; v < n; ++v) at[label[v]] = v;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(at[i], at[j]) ? 1U : 0U);
  }
  return code;
}

std::pair<std::uint64_t, std::vector<Vertex>> best_labelling(const Graph& g) {
  if (!g.is_simple()) throw GraphError(ErrorCode::kNotSimple, "canonical form needs a simple graph");
  if (g.order() > kMaxCanonicalOrder) throw GraphError(ErrorCode::kNTooLarge, "canonical form capped at order 11");
  const int n = g.order();
  const std::vector<int> colour = refined_colours(g);
  // Cells in colour order; each cell owns a contiguous block of new labels.
  std::vector<std::vector<Vertex>> cells;
  {
    std::map<int, std::vector<Vertex>> by_colour;
    for (Vertex v = 0; v < n; ++v) by_colour[colour[v]].push_back(v);
    for (auto& [c, members] : by_colour) cells.push_back(std::move(members));
  }
  std::vector<Vertex> label(n);
  std::uint64_t best = 0;
  std::vector<Vertex> best_label;
  // Odometer over the permutations of every cell.
  for (auto& cell : cells) std::sort(cell.begin(), cell.end());
  while (true) {
    int next = 0;
    for (const auto& cell : cells) {
      for (Vertex v : cell) label[v] = next++;
    }
    const std::uint64_t code = code_of(g, label);
    if (best_label.empty() || code > best) {
      best = code;
      best_label = label;
    }
    std::size_t c = 0;
    while (c < cells.size() && !std::next_permutation(cells[c].begin(), cells[c].end())) ++c;
    if (c == cells.size()) break;
  }
  return {best, best_label};
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) { return best_labelling(g).first; }

Graph canonical_form(const Graph& g) {
  const auto [code, label] = best_labelling(g);
  return g.relabeled(label);
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw GraphError(ErrorCode::kNTooLarge, "built-in enumeration supports 0 <= n <= " +
                                                std::to_string(kMaxEnumerationOrder));
  }
  static std::mutex cache_mutex;
  static std::map<int, std::vector<Graph>> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Graph> result;
  if (n == 0) {
    result.push_back(Graph::from_edges(0, {}));
  } else {
    // Every graph on n vertices is some graph on n-1 vertices plus a new
    // vertex joined to a subset of the old ones.
    std::map<std::pair<int, std::uint64_t>, Graph> seen;
    for (const Graph& base : enumerate_graphs(n - 1)) {
      for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << (n - 1)); ++subset) {
        std::vector<Edge> edges(base.edges());
        for (std::uint64_t m = subset; m != 0; m &= m - 1) edges.push_back({std::countr_zero(m), n - 1});
        const Graph candidate = Graph::from_edges(n, edges);
        const auto [code, label] = best_labelling(candidate);
        const auto key = std::make_pair(candidate.size(), code);
        if (!seen.contains(key)) seen.emplace(key, candidate.relabeled(label));
      }
    }
    for (auto& [key, g] : seen) result.push_back(std::move(g));
  }
  std::lock_guard lock(cache_mutex);
  cache.emplace(n, result);
  return result;
}

std::vector<Graph> enumerate_connected(int n) {
  std::vector<Graph> out;
  for (Graph& g : enumerate_graphs(n)) {
    if (n > 0 && is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace normgraph
