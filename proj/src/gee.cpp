#include "normgraph/gee.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_set>

#include "normgraph/topology.hpp"

namespace normgraph {

std::string_view to_string(RemovalPolicy p) { return p == RemovalPolicy::kUnion ? "union" : "sum"; }
std::string_view to_string(SearchMode s) { return s == SearchMode::kGreedy ? "greedy" : "exhaustive"; }

std::string_view to_string(Prediction p) {
  switch (p) {
    case Prediction::kNonHamiltonian: return "nonHamiltonian";
    case Prediction::kHamiltonian: return "hamiltonian";
    case Prediction::kUndecided: return "undecided";
  }
  return "?";
}

CycleSetState make_state(const CycleBasis& basis, std::vector<int> surviving) {
  std::sort(surviving.begin(), surviving.end());
  CycleSetState s;
  s.host = basis.host.fingerprint();
  s.sum = EdgeVector(basis.host);
  EdgeVector covered(basis.host);
  for (int i : surviving) {
    if (i < 0 || i >= basis.rank()) throw GraphError(ErrorCode::kUnknownEdge, "no basis cycle " + std::to_string(i));
    s.sum += basis.cycles[i];
    for (EdgeId e : basis.cycles[i].edge_ids()) covered.set(e);
  }
  s.surviving = std::move(surviving);
  s.union_graph = covered.as_graph(basis.host);
  return s;
}

namespace {

// Bitmask view of a basis for fast removability tests. States are masks
// over basis indices, so the rank must stay below 64.
class StateSpace {
 public:
  StateSpace(const CycleBasis& basis, RemovalPolicy policy)
      : basis_(basis), policy_(policy), n_(basis.host.order()), k_(basis.rank()),
        words_((basis.host.size() + 63) / 64) {
    const Graph& g = basis.host;
    all_vertices_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    for (const EdgeVector& c : basis.cycles) {
      vmask_.push_back(c.vertex_mask(g));
      bits_.emplace_back(c.words().begin(), c.words().end());
    }
    incident_.resize(n_);
    for (EdgeId e = 0; e < g.size(); ++e) {
      incident_[g.edge(e).u].push_back(e);
      incident_[g.edge(e).v].push_back(e);
    }
  }

  std::uint64_t full() const { return k_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k_) - 1; }

  bool removable(std::uint64_t state, int c) const {
    const std::uint64_t rest = state & ~(std::uint64_t{1} << c);
    if (rest == 0) return false;
    std::uint64_t cover = 0;
    for (std::uint64_t m = rest; m != 0; m &= m - 1) cover |= vmask_[std::countr_zero(m)];
    if (cover != all_vertices_) return false;
    return policy_ == RemovalPolicy::kUnion ? linked(rest) : sums_to_hamilton_cycle(rest);
  }

  std::vector<int> removable_list(std::uint64_t state) const {
    std::vector<int> out;
    if (std::popcount(state) < 2) return out;
    for (std::uint64_t m = state; m != 0; m &= m - 1) {
      const int c = std::countr_zero(m);
      if (removable(state, c)) out.push_back(c);
    }
    return out;
  }

 private:
  // Share-a-vertex connectivity of the cycles in `set`.
  bool linked(std::uint64_t set) const {
    const int first = std::countr_zero(set);
    std::uint64_t reached = std::uint64_t{1} << first;
    std::uint64_t verts = vmask_[first];
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::uint64_t m = set & ~reached; m != 0; m &= m - 1) {
        const int c = std::countr_zero(m);
        if (vmask_[c] & verts) {
          reached |= std::uint64_t{1} << c;
          verts |= vmask_[c];
          grew = true;
        }
      }
    }
    return reached == set;
  }

  bool sums_to_hamilton_cycle(std::uint64_t set) const {
    std::vector<std::uint64_t> sum(words_, 0);
    for (std::uint64_t m = set; m != 0; m &= m - 1) {
      const auto& w = bits_[std::countr_zero(m)];
      for (int j = 0; j < words_; ++j) sum[j] ^= w[j];
    }
    int count = 0;
    for (std::uint64_t w : sum) count += std::popcount(w);
    if (n_ < 3 || count != n_) return false;
    auto has = [&sum](EdgeId e) { return (sum[e / 64] >> (e % 64)) & 1U; };
    for (Vertex v = 0; v < n_; ++v) {
      int d = 0;
      for (EdgeId e : incident_[v]) d += has(e);
      if (d != 2) return false;
    }
    // All degrees 2 with n edges: a single cycle iff the walk from 0 closes after n steps.
    Vertex prev = -1;
    Vertex cur = 0;
    for (int step = 0; step < n_; ++step) {
      Vertex next = -1;
      for (EdgeId e : incident_[cur]) {
        if (!has(e)) continue;
        const Vertex o = basis_.host.edge(e).other(cur);
        if (o != prev) {
          next = o;
          break;
        }
      }
      prev = cur;
      cur = next;
      if (cur == 0) return step == n_ - 1;
    }
    return false;
  }

  const CycleBasis& basis_;
  RemovalPolicy policy_;
  int n_;
  int k_;
  int words_;
  std::uint64_t all_vertices_ = 0;
  std::vector<std::uint64_t> vmask_;
  std::vector<std::vector<std::uint64_t>> bits_;
  std::vector<std::vector<EdgeId>> incident_;
};

std::uint64_t to_mask(const std::vector<int>& indices) {
  std::uint64_t m = 0;
  for (int i : indices) m |= std::uint64_t{1} << i;
  return m;
}

std::vector<int> to_indices(std::uint64_t mask) {
  std::vector<int> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

void check_extract_preconditions(const Graph& g, const CycleBasis& basis, const GeeOptions& options) {
  if (basis.host.fingerprint() != g.fingerprint()) {
    throw GraphError(ErrorCode::kHostMismatch, "basis was built on another graph");
  }
  if (basis.rank() > options.rank_cap || basis.rank() > 63) {
    throw GraphError(ErrorCode::kRankTooLarge, "cycle rank " + std::to_string(basis.rank()) + " exceeds cap " +
                                                   std::to_string(std::min(options.rank_cap, 63)));
  }
  if (!norm_diagnostics(g, options.norm).norm) throw GraphError(ErrorCode::kNotNormGraph, "|I| != 1");
}

CycleSetState greedy_unchecked(const CycleBasis& basis, RemovalPolicy policy) {
  StateSpace space(basis, policy);
  // Position of each cycle in lexicographic order of its sorted edge ids.
  std::vector<std::pair<std::vector<EdgeId>, int>> keyed;
  for (int i = 0; i < basis.rank(); ++i) keyed.push_back({basis.cycles[i].edge_ids(), i});
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> lex_rank(basis.rank());
  for (int r = 0; r < basis.rank(); ++r) lex_rank[keyed[r].second] = r;

  std::uint64_t state = space.full();
  while (true) {
    const std::vector<int> rem = space.removable_list(state);
    if (rem.empty()) break;
    const int pick = *std::min_element(rem.begin(), rem.end(),
                                       [&lex_rank](int a, int b) { return lex_rank[a] < lex_rank[b]; });
    state &= ~(std::uint64_t{1} << pick);
  }
  return make_state(basis, to_indices(state));
}

std::vector<CycleSetState> exhaustive_unchecked(const CycleBasis& basis, RemovalPolicy policy, long long state_cap) {
  StateSpace space(basis, policy);
  std::unordered_set<std::uint64_t> visited;
  std::set<std::vector<int>> terminals;
  std::vector<std::uint64_t> stack{space.full()};
  visited.insert(space.full());
  while (!stack.empty()) {
    const std::uint64_t state = stack.back();
    stack.pop_back();
    const std::vector<int> rem = space.removable_list(state);
    if (rem.empty()) {
      terminals.insert(to_indices(state));
      continue;
    }
    for (int c : rem) {
      const std::uint64_t next = state & ~(std::uint64_t{1} << c);
      if (visited.insert(next).second) {
        if (static_cast<long long>(visited.size()) > state_cap) {
          throw GraphError(ErrorCode::kSearchCapExceeded,
                           "more than " + std::to_string(state_cap) + " cycle-set states");
        }
        stack.push_back(next);
      }
    }
  }
  std::vector<CycleSetState> out;
  for (const auto& t : terminals) out.push_back(make_state(basis, t));
  return out;
}

}  // namespace

std::vector<int> removable_cycles(const CycleBasis& basis, const CycleSetState& state, RemovalPolicy policy) {
  if (state.host != basis.host.fingerprint()) throw GraphError(ErrorCode::kHostMismatch, "state from another host");
  if (basis.rank() > 63) throw GraphError(ErrorCode::kRankTooLarge, "cycle rank above 63");
  StateSpace space(basis, policy);
  return space.removable_list(to_mask(state.surviving));
}

CycleSetState extract_gee_greedy(const Graph& g, const CycleBasis& basis, const GeeOptions& options) {
  check_extract_preconditions(g, basis, options);
  return greedy_unchecked(basis, options.policy);
}

std::vector<CycleSetState> extract_gee_exhaustive(const Graph& g, const CycleBasis& basis, const GeeOptions& options) {
  check_extract_preconditions(g, basis, options);
  return exhaustive_unchecked(basis, options.policy, options.state_cap);
}

bool predicate_k23(const CycleSetState& state) {
  static const Graph k23 = make::complete_bipartite(2, 3);
  if (!is_homeomorphic(state.union_graph, k23)) return false;
  return count_induced_k23_subdivisions(state.union_graph) == 1;
}

std::optional<EdgeVector> hamilton_witness_from_sum(const Graph& g, const CycleSetState& state) {
  if (state.host != g.fingerprint()) throw GraphError(ErrorCode::kHostMismatch, "state from another host");
  if (state.sum.is_hamilton_cycle(g)) return state.sum;
  return std::nullopt;
}

bool predicate_c3(const Graph& g, const CycleSetState& state) { return hamilton_witness_from_sum(g, state).has_value(); }

bool TheoremReport::counterexample(const GeeVerdict& v) const {
  if (v.error || oracle.timed_out()) return false;
  return v.k23_predicate != !oracle.hamiltonian();
}

bool TheoremReport::agrees(const GeeVerdict& v) const {
  if (v.error || oracle.timed_out()) return false;
  return (v.predicted == Prediction::kHamiltonian && oracle.hamiltonian()) ||
         (v.predicted == Prediction::kNonHamiltonian && !oracle.hamiltonian());
}

namespace {

GeeVerdict evaluate_policy(const Graph& reduced, const CycleBasis& basis, RemovalPolicy policy,
                           const TheoremOptions& options) {
  GeeVerdict v;
  v.policy = policy;
  try {
    if (basis.rank() > options.rank_cap || basis.rank() > 63) {
      throw GraphError(ErrorCode::kRankTooLarge, "cycle rank " + std::to_string(basis.rank()));
    }
    if (options.search == SearchMode::kGreedy) {
      v.terminal_states.push_back(greedy_unchecked(basis, policy));
    } else {
      v.terminal_states = exhaustive_unchecked(basis, policy, options.state_cap);
    }
  } catch (const GraphError& e) {
    if (!e.is_cap()) throw;
    v.error = e.code();
    v.error_detail = e.what();
    return v;
  }
  v.k23_predicate = true;
  for (const CycleSetState& s : v.terminal_states) {
    if (!v.hamilton_witness) {
      v.hamilton_witness = hamilton_witness_from_sum(reduced, s);
    }
    if (predicate_k23(s)) {
      const long long literal = count_induced_k23(s.union_graph);
      if (literal != 1) v.literal_k23_counts.push_back(literal);
    } else {
      v.k23_predicate = false;
    }
  }
  v.c3_predicate = v.hamilton_witness.has_value();
  if (v.c3_predicate) {
    v.predicted = Prediction::kHamiltonian;
  } else if (v.k23_predicate) {
    v.predicted = Prediction::kNonHamiltonian;
  } else {
    v.predicted = Prediction::kUndecided;
  }
  return v;
}

}  // namespace

TheoremReport analyze(const Graph& g, const TheoremOptions& options) {
  TheoremReport report;
  report.reduction = reduce(g, options.reduction, options.oracle);
  report.oracle = is_hamiltonian(g, options.oracle);
  const Graph& reduced = report.reduction.output;
  report.reduced_connected = reduced.order() > 0 && is_connected(reduced);
  if (!report.reduced_connected) return report;

  NormOptions norm_options;
  norm_options.boundary = options.boundary;
  norm_options.reduction = options.reduction;
  report.norm = norm_diagnostics(reduced, norm_options);
  report.is_norm = report.norm->norm;
  if (!report.is_norm) return report;

  const CycleBasis basis = fundamental_basis(reduced);
  for (RemovalPolicy p : options.policies) report.verdicts.push_back(evaluate_policy(reduced, basis, p, options));
  return report;
}

TheoremReport theorem_check(const Graph& g, const TheoremOptions& options) {
  TheoremReport report = analyze(g, options);
  if (!report.is_norm) {
    throw GraphError(ErrorCode::kNotNormGraph,
                     report.reduced_connected ? "|I| = " + std::to_string(report.norm->i_count)
                                              : std::string("reduced graph is disconnected"));
  }
  return report;
}

}  // namespace normgraph
