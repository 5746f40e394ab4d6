#include "normgraph/topology.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace normgraph {

Graph subdivide(const Graph& g, EdgeId e) {
  if (!g.has_edge_id(e)) throw GraphError(ErrorCode::kUnknownEdge, "edge id " + std::to_string(e));
  const Vertex w = g.order();
  std::vector<Edge> out;
  out.reserve(g.size() + 1);
  for (EdgeId id = 0; id < g.size(); ++id) {
    if (id != e) out.push_back(g.edge(id));
  }
  out.push_back({g.edge(e).u, w});
  out.push_back({w, g.edge(e).v});
  return Graph::from_edges(g.order() + 1, out, g.mode());
}

Graph smooth(const Graph& g, Vertex w) {
  if (g.degree(w) != 2) {
    throw GraphError(ErrorCode::kNotDegreeTwo,
                     "vertex " + std::to_string(w) + " has degree " + std::to_string(g.degree(w)));
  }
  auto shift = [w](Vertex v) { return v > w ? v - 1 : v; };
  std::vector<Edge> out;
  std::vector<Vertex> ends;
  bool lone_loop = false;
  for (const Edge& e : g.edges()) {
    if (e.u != w && e.v != w) {
      out.push_back({shift(e.u), shift(e.v)});
    } else if (e.is_loop()) {
      lone_loop = true;  // the whole component is w with its loop; it vanishes
    } else {
      ends.push_back(e.other(w));
    }
  }
  if (!lone_loop) out.push_back({shift(ends[0]), shift(ends[1])});
  return Graph::from_edges(g.order() - 1, out, GraphMode::kMulti);
}

namespace {

// Mutable multigraph used while suppressing degree-2 vertices. Each vertex
// keeps a list of incident edge slots; a loop occupies two slots.
struct SmoothingWork {
  std::vector<Edge> edges;
  std::vector<char> edge_alive;
  std::vector<std::vector<int>> slots;
  std::vector<char> vertex_alive;

  explicit SmoothingWork(const Graph& g)
      : edges(g.edges()), edge_alive(g.size(), 1), slots(g.order()), vertex_alive(g.order(), 1) {
    for (int id = 0; id < g.size(); ++id) {
      slots[edges[id].u].push_back(id);
      slots[edges[id].v].push_back(id);
    }
  }

  int degree(Vertex v) const { return static_cast<int>(slots[v].size()); }

  // Returns true if v (of degree 2) closed off a pure-cycle component.
  bool suppress(Vertex v) {
    const int e1 = slots[v][0];
    const int e2 = slots[v][1];
    vertex_alive[v] = 0;
    slots[v].clear();
    if (e1 == e2) {
      edge_alive[e1] = 0;
      return true;
    }
    const Vertex x = edges[e1].other(v);
    const Vertex y = edges[e2].other(v);
    edge_alive[e1] = 0;
    edge_alive[e2] = 0;
    const int fresh = static_cast<int>(edges.size());
    edges.push_back({std::min(x, y), std::max(x, y)});
    edge_alive.push_back(1);
    std::replace(slots[x].begin(), slots[x].end(), e1, fresh);
    std::replace(slots[y].begin(), slots[y].end(), e2, fresh);
    return false;
  }
};

}  // namespace

CanonicalCore topological_core(const Graph& g, std::optional<std::uint64_t> shuffle_seed) {
  SmoothingWork work(g);
  CanonicalCore result;
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(shuffle_seed.value_or(0));
  if (shuffle_seed) std::shuffle(order.begin(), order.end(), rng);

  // Smoothing never changes the degree of a surviving vertex, so one pass
  // in any order reaches the fixpoint.
  for (Vertex v : order) {
    if (work.degree(v) == 2 && work.suppress(v)) ++result.cycle_components;
  }

  std::vector<Vertex> index(g.order(), -1);
  int kept = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!work.vertex_alive[v]) continue;
    if (work.degree(v) == 0) {
      ++result.isolated_vertices;
      continue;
    }
    index[v] = kept++;
  }
  std::vector<Edge> core_edges;
  for (std::size_t id = 0; id < work.edges.size(); ++id) {
    if (work.edge_alive[id]) core_edges.push_back({index[work.edges[id].u], index[work.edges[id].v]});
  }
  result.core = Graph::from_edges(kept, core_edges, GraphMode::kMulti);
  return result;
}

bool is_homeomorphic(const Graph& a, const Graph& b) {
  const CanonicalCore ca = topological_core(a);
  const CanonicalCore cb = topological_core(b);
  return ca.cycle_components == cb.cycle_components && ca.isolated_vertices == cb.isolated_vertices &&
         are_isomorphic(ca.core, cb.core);
}

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix multiplicity_matrix(const Graph& g) {
  Matrix m(g.order(), std::vector<int>(g.order(), 0));
  for (const Edge& e : g.edges()) {
    m[e.u][e.v] += 1;
    if (!e.is_loop()) m[e.v][e.u] += 1;
  }
  return m;
}

// Joint colour refinement of two graphs so colour ids are comparable.
// Returns false as soon as the colour histograms differ.
bool refine_jointly(const Matrix& ma, const Matrix& mb, std::vector<int>& ca, std::vector<int>& cb) {
  const int n = static_cast<int>(ma.size());
  auto initial = [n](const Matrix& m, std::vector<int>& c) {
    c.assign(n, 0);
    std::vector<std::pair<int, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      int deg = 0;
      for (int u = 0; u < n; ++u) deg += u == v ? 2 * m[v][v] : m[v][u];
      sig[v] = {deg, m[v][v]};
    }
    return sig;
  };
  auto sa = initial(ma, ca);
  auto sb = initial(mb, cb);

  auto assign = [&](const auto& siga, const auto& sigb) {
    using Sig = typename std::decay_t<decltype(siga)>::value_type;
    std::map<Sig, int> names;
    for (const auto& s : siga) names.emplace(s, 0);
    for (const auto& s : sigb) names.emplace(s, 0);
    int next = 0;
    for (auto& [key, id] : names) id = next++;
    std::vector<int> hist_a(next, 0), hist_b(next, 0);
    for (int v = 0; v < n; ++v) {
      ca[v] = names[siga[v]];
      cb[v] = names[sigb[v]];
      ++hist_a[ca[v]];
      ++hist_b[cb[v]];
    }
    return std::make_pair(hist_a == hist_b, next);
  };

  auto [same, classes] = assign(sa, sb);
  if (!same) return false;
  while (true) {
    auto neighbourhood = [n](const Matrix& m, const std::vector<int>& c) {
      std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(n);
      for (int v = 0; v < n; ++v) {
        sig[v].first = c[v];
        for (int u = 0; u < n; ++u) {
          if (u != v && m[v][u] > 0) sig[v].second.push_back({c[u], m[v][u]});
        }
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      return sig;
    };
    auto na = neighbourhood(ma, ca);
    auto nb = neighbourhood(mb, cb);
    auto [ok, next_classes] = assign(na, nb);
    if (!ok) return false;
    if (next_classes == classes) return true;
    classes = next_classes;
  }
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const int n = a.order();
  if (n == 0) return true;
  auto da = a.degree_sequence();
  auto db = b.degree_sequence();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;

  const Matrix ma = multiplicity_matrix(a);
  const Matrix mb = multiplicity_matrix(b);
  std::vector<int> ca, cb;
  if (!refine_jointly(ma, mb, ca, cb)) return false;

  // Map a's vertices in order of rarest colour first, then by adjacency to
  // already-ordered vertices so consistency checks prune early.
  std::vector<int> class_size(2 * n + 1, 0);
  for (int v = 0; v < n; ++v) ++class_size[ca[v]];
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  while (static_cast<int>(order.size()) < n) {
    int best = -1;
    int best_links = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (Vertex u : order) links += ma[v][u] > 0;
      if (best < 0 || links > best_links ||
          (links == best_links && class_size[ca[v]] < class_size[ca[best]])) {
        best = v;
        best_links = links;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }

  std::vector<Vertex> image(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> extend = [&](int depth) -> bool {
    if (depth == n) return true;
    const Vertex v = order[depth];
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || cb[w] != ca[v] || mb[w][w] != ma[v][v]) continue;
      bool consistent = true;
      for (int k = 0; k < depth && consistent; ++k) {
        const Vertex u = order[k];
        consistent = ma[v][u] == mb[w][image[u]];
      }
      if (!consistent) continue;
      image[v] = w;
      used[w] = 1;
      if (extend(depth + 1)) return true;
      used[w] = 0;
    }
    image[v] = -1;
    return false;
  };
  return extend(0);
}

long long count_induced_k23(const Graph& g) {
  if (!g.is_simple()) throw GraphError(ErrorCode::kNotSimple, "count_induced_k23 needs a simple graph");
  const int n = g.order();
  if (n < 5) return 0;
  long long count = 0;
  std::vector<Vertex> pick(5);
  // Lexicographic 5-combinations.
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::uint64_t set = 0;
    for (Vertex v : pick) set |= std::uint64_t{1} << v;
    int deg3 = 0;
    int deg2 = 0;
    std::uint64_t hubs = 0;
    for (Vertex v : pick) {
      const int d = std::popcount(g.neighbor_mask(v) & set);
      if (d == 3) {
        ++deg3;
        hubs |= std::uint64_t{1} << v;
      } else if (d == 2) {
        ++deg2;
      }
    }
    if (deg3 == 2 && deg2 == 3) {
      const Vertex h = std::countr_zero(hubs);
      // Six edges with degrees {3,3,2,2,2}; the hubs being non-adjacent forces
      // each hub onto all three others, which is exactly K_{2,3}.
      if ((g.neighbor_mask(h) & hubs) == 0) ++count;
    }
    int i = 4;
    while (i >= 0 && pick[i] == n - 5 + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < 5; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

bool is_k23_subdivision(const Graph& g) {
  const int n = g.order();
  if (n < 5 || g.size() != n + 1 || !g.is_simple()) return false;
  std::vector<Vertex> hubs;
  for (Vertex v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d == 3) {
      hubs.push_back(v);
    } else if (d != 2) {
      return false;
    }
  }
  if (hubs.size() != 2 || g.adjacent(hubs[0], hubs[1])) return false;
  // Two cubic vertices with all others of degree 2 is a theta or a handcuff;
  // only the theta is 2-connected.
  return is_connected(g) && cut_vertices(g).empty();
}

long long count_induced_k23_subdivisions(const Graph& g) {
  const int n = g.order();
  if (n > 24) throw GraphError(ErrorCode::kSearchCapExceeded, "subset enumeration capped at order 24");
  if (!g.is_simple()) throw GraphError(ErrorCode::kNotSimple, "count_induced_k23_subdivisions needs a simple graph");
  long long count = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t set = 0; set < limit; ++set) {
    const int k = std::popcount(set);
    if (k < 5) continue;
    int twice_edges = 0;
    int deg3 = 0;
    bool pattern = true;
    for (std::uint64_t m = set; m != 0 && pattern; m &= m - 1) {
      const int d = std::popcount(g.neighbor_mask(std::countr_zero(m)) & set);
      twice_edges += d;
      if (d == 3) {
        ++deg3;
      } else if (d != 2) {
        pattern = false;
      }
    }
    if (!pattern || deg3 != 2 || twice_edges != 2 * (k + 1)) continue;
    if (is_k23_subdivision(g.induced_mask(set))) ++count;
  }
  return count;
}

std::vector<int> connected_components(const Graph& g, int* count) {
  std::vector<int> comp(g.order(), -1);
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (comp[u] < 0) {
          comp[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return comp;
}

bool is_connected(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return count <= 1;
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  int timer = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (Vertex u : g.neighbors(v)) {
      if (u == v) continue;
      if (disc[u] < 0) {
        ++children;
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (parent >= 0 && low[u] >= disc[v]) is_cut[v] = 1;
      } else if (u != parent) {
        low[v] = std::min(low[v], disc[u]);
      }
    }
    if (parent < 0 && children > 1) is_cut[v] = 1;
  };
  for (Vertex v = 0; v < n; ++v) {
    if (disc[v] < 0) dfs(v, -1);
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex u : g.neighbors(v)) {
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<std::vector<Vertex>, std::vector<Vertex>> parts;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

}  // namespace normgraph
