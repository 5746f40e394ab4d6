#include "normgraph/reduction.hpp"

#include <algorithm>
#include <numeric>

#include "normgraph/topology.hpp"

namespace normgraph {

namespace {

void check_input(const Graph& g) {
  if (!g.is_simple()) throw GraphError(ErrorCode::kNotSimple, "reduction needs a simple graph");
  if (g.order() < 3) throw GraphError(ErrorCode::kTooSmall, "reduction needs at least 3 vertices");
  if (!is_connected(g)) throw GraphError(ErrorCode::kDisconnected, "reduction needs a connected graph");
}

Edge in_input_ids(const Edge& e, const std::vector<Vertex>& origin) {
  const Vertex a = origin[e.u];
  const Vertex b = origin[e.v];
  return {std::min(a, b), std::max(a, b)};
}

struct RuleStep {
  std::vector<EdgeId> forced;
  std::vector<EdgeId> to_delete;
  std::optional<std::string> verdict;
};

// One detection pass over the current graph. Forced edges are recomputed
// from scratch: they are exactly the edges at degree-2 vertices, because R2
// never deletes a forced edge.
RuleStep detect(const Graph& g) {
  RuleStep step;
  const int n = g.order();
  std::vector<char> forced(g.size(), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2) {
      step.verdict = "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v));
      return step;
    }
    if (g.degree(v) == 2) {
      for (EdgeId e : g.incident(v)) forced[e] = 1;
    }
  }
  if (!is_connected(g)) {
    step.verdict = "graph disconnected";
    return step;
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (forced[e]) step.forced.push_back(e);
  }

  std::vector<int> forced_at(n, 0);
  for (EdgeId e : step.forced) {
    ++forced_at[g.edge(e).u];
    ++forced_at[g.edge(e).v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (forced_at[v] > 2) {
      step.verdict = "vertex " + std::to_string(v) + " has " + std::to_string(forced_at[v]) + " forced edges";
      return step;
    }
  }

  // Forced edges form paths and cycles; any cycle must be spanning.
  std::vector<int> parent(n), size(n, 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e : step.forced) {
    const int a = find(g.edge(e).u);
    const int b = find(g.edge(e).v);
    if (a == b) {
      if (size[a] < n) {
        step.verdict = "forced edges close a cycle of length " + std::to_string(size[a]);
        return step;
      }
      continue;
    }
    parent[a] = b;
    size[b] += size[a];
  }

  std::vector<char> del(g.size(), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (forced_at[v] != 2 || g.degree(v) == 2) continue;
    for (EdgeId e : g.incident(v)) {
      if (!forced[e]) del[e] = 1;
    }
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (del[e]) step.to_delete.push_back(e);
  }
  return step;
}

Graph without_edges(const Graph& g, const std::vector<EdgeId>& drop) {
  std::vector<char> gone(g.size(), 0);
  for (EdgeId e : drop) gone[e] = 1;
  std::vector<Edge> keep;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!gone[e]) keep.push_back(g.edge(e));
  }
  return Graph::from_edges(g.order(), keep, g.mode());
}

// Runs the rule system on `current` (ids mapped to the input by `origin`)
// and records into `report`. Returns the graph after deletions.
Graph run_rules(Graph current, const std::vector<Vertex>& origin, ReductionReport& report, bool& deleted_any) {
  deleted_any = false;
  while (true) {
    RuleStep step = detect(current);
    if (step.verdict) {
      report.early_verdict = *step.verdict;
      return current;
    }
    if (step.to_delete.empty()) return current;
    for (EdgeId e : step.to_delete) report.deleted_edges.push_back(in_input_ids(current.edge(e), origin));
    current = without_edges(current, step.to_delete);
    deleted_any = true;
  }
}

Graph run_oracle(const Graph& current, const std::vector<Vertex>& origin, ReductionReport& report,
                 bool& deleted_any, const OracleOptions& options) {
  deleted_any = false;
  const std::vector<bool> used = edges_on_hamilton_cycles(current, options);
  if (std::none_of(used.begin(), used.end(), [](bool b) { return b; })) {
    report.early_verdict = "no Hamilton cycle (oracle)";
    return current;
  }
  std::vector<EdgeId> drop;
  for (EdgeId e = 0; e < current.size(); ++e) {
    if (!used[e]) drop.push_back(e);
  }
  if (drop.empty()) return current;
  for (EdgeId e : drop) report.deleted_edges.push_back(in_input_ids(current.edge(e), origin));
  deleted_any = true;
  return without_edges(current, drop);
}

void finish(ReductionReport& report) {
  std::sort(report.deleted_edges.begin(), report.deleted_edges.end());
  report.forced_edges.clear();
  const Graph& out = report.output;
  for (EdgeId e = 0; e < out.size(); ++e) {
    if (out.degree(out.edge(e).u) == 2 || out.degree(out.edge(e).v) == 2) {
      report.forced_edges.push_back(in_input_ids(out.edge(e), report.origin));
    }
  }
  std::sort(report.forced_edges.begin(), report.forced_edges.end());
}

}  // namespace

ReductionReport forced_edge_fixpoint(const Graph& g) {
  check_input(g);
  ReductionReport report;
  report.input = g.fingerprint();
  report.origin.resize(g.order());
  std::iota(report.origin.begin(), report.origin.end(), 0);
  bool deleted = false;
  report.output = run_rules(g, report.origin, report, deleted);
  finish(report);
  return report;
}

ChainCollapseResult collapse_chains_detailed(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<char> removed(n, 0);
  std::vector<Edge> added;
  ChainCollapseResult result;

  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || g.degree(s) != 2) continue;
    // Walk both ways from s along degree-2 vertices.
    std::vector<Vertex> run{s};
    seen[s] = 1;
    Vertex ends[2] = {-1, -1};
    bool pure_cycle = false;
    for (int side = 0; side < 2 && !pure_cycle; ++side) {
      Vertex prev = s;
      Vertex cur = g.neighbors(s)[side];
      while (true) {
        if (cur == s) {
          pure_cycle = true;
          break;
        }
        if (g.degree(cur) != 2) {
          ends[side] = cur;
          break;
        }
        seen[cur] = 1;
        if (side == 0) {
          run.push_back(cur);
        } else {
          run.insert(run.begin(), cur);
        }
        const auto nb = g.neighbors(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
    }
    if (pure_cycle) continue;
    // run is ordered from the side-1 end to the side-0 end.
    const Vertex left = ends[1];
    const Vertex right = ends[0];
    const std::size_t keep = left == right ? 2 : 1;
    if (run.size() <= keep) continue;

    ChainCollapse chain;
    chain.path.push_back(left);
    chain.path.insert(chain.path.end(), run.begin(), run.end());
    chain.path.push_back(right);
    if (chain.path.front() > chain.path.back()) std::reverse(chain.path.begin(), chain.path.end());
    std::vector<Vertex> inner(chain.path.begin() + 1, chain.path.end() - 1);
    std::vector<Vertex> survivors(inner);
    std::sort(survivors.begin(), survivors.end());
    survivors.resize(keep);
    chain.survivor = survivors.front();
    for (Vertex v : inner) {
      if (std::find(survivors.begin(), survivors.end(), v) == survivors.end()) removed[v] = 1;
    }
    if (keep == 1) {
      added.push_back({left, chain.survivor});
      added.push_back({chain.survivor, right});
    } else {
      added.push_back({left, survivors[0]});
      added.push_back({survivors[0], survivors[1]});
      added.push_back({survivors[1], right});
    }
    result.collapses.push_back(std::move(chain));
  }

  if (result.collapses.empty()) {
    result.graph = g;
    result.origin.resize(n);
    std::iota(result.origin.begin(), result.origin.end(), 0);
    return result;
  }

  // Survivors keep only their new edges; every other chain vertex goes.
  std::vector<char> rewired(n, 0);
  for (const ChainCollapse& c : result.collapses) {
    for (std::size_t i = 1; i + 1 < c.path.size(); ++i) rewired[c.path[i]] = 1;
  }
  std::vector<Vertex> index(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) {
      index[v] = static_cast<Vertex>(result.origin.size());
      result.origin.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!rewired[e.u] && !rewired[e.v]) edges.push_back({index[e.u], index[e.v]});
  }
  for (const Edge& e : added) edges.push_back({index[e.u], index[e.v]});
  result.graph = Graph::from_edges(static_cast<int>(result.origin.size()), edges, g.mode());
  return result;
}

Graph collapse_chains(const Graph& g) { return collapse_chains_detailed(g).graph; }

ReductionReport reduce(const Graph& g, ReductionMode mode, const OracleOptions& oracle_options) {
  check_input(g);
  ReductionReport report;
  report.input = g.fingerprint();
  report.origin.resize(g.order());
  std::iota(report.origin.begin(), report.origin.end(), 0);
  Graph current = g;

  while (true) {
    bool deleted = false;
    if (!report.early_verdict) {
      current = mode == ReductionMode::kRules ? run_rules(current, report.origin, report, deleted)
                                              : run_oracle(current, report.origin, report, deleted, oracle_options);
    }
    ChainCollapseResult collapsed = collapse_chains_detailed(current);
    const bool collapsed_any = !collapsed.collapses.empty();
    for (ChainCollapse c : collapsed.collapses) {
      for (Vertex& v : c.path) v = report.origin[v];
      c.survivor = report.origin[c.survivor];
      report.chain_collapses.push_back(std::move(c));
    }
    std::vector<Vertex> origin(collapsed.origin.size());
    for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = report.origin[collapsed.origin[i]];
    report.origin = std::move(origin);
    current = std::move(collapsed.graph);
    if (!deleted && !collapsed_any) break;
  }
  report.output = std::move(current);
  finish(report);
  return report;
}

}  // namespace normgraph
