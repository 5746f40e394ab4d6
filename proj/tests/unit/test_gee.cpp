#include <gtest/gtest.h>

#include <algorithm>

#include "normgraph/enumerate.hpp"
#include "normgraph/gee.hpp"
#include "normgraph/reduction.hpp"
#include "normgraph/topology.hpp"

using namespace normgraph;

namespace {

const Graph kK4 = make::complete(4);
const Graph kK23 = make::complete_bipartite(2, 3);

GeeOptions with(RemovalPolicy p) {
  GeeOptions o;
  o.policy = p;
  return o;
}

CycleSetState full_state(const CycleBasis& b) {
  std::vector<int> all(b.rank());
  for (int i = 0; i < b.rank(); ++i) all[i] = i;
  return make_state(b, all);
}

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const GraphError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no GraphError thrown";
  return ErrorCode::kUnknownEdge;
}

}  // namespace

TEST(Removable, K23UnionHasNone) {
  const CycleBasis b = fundamental_basis(kK23);
  EXPECT_TRUE(removable_cycles(b, full_state(b), RemovalPolicy::kUnion).empty());
}

TEST(Removable, K4UnionAllThree) {
  const CycleBasis b = fundamental_basis(kK4);
  EXPECT_EQ(removable_cycles(b, full_state(b), RemovalPolicy::kUnion), (std::vector<int>{0, 1, 2}));
}

TEST(Removable, SingletonHasNone) {
  const CycleBasis b = fundamental_basis(kK4);
  for (RemovalPolicy p : {RemovalPolicy::kUnion, RemovalPolicy::kSum}) {
    EXPECT_TRUE(removable_cycles(b, make_state(b, {1}), p).empty());
  }
}

TEST(Removable, SumKeepsAHamiltonCycle) {
  const CycleBasis b = fundamental_basis(kK4);
  for (int c : removable_cycles(b, full_state(b), RemovalPolicy::kSum)) {
    std::vector<int> rest;
    for (int i = 0; i < b.rank(); ++i) {
      if (i != c) rest.push_back(i);
    }
    EXPECT_TRUE(make_state(b, rest).sum.is_hamilton_cycle(kK4));
  }
}

TEST(StateInvariants, UnionAndSum) {
  const CycleBasis b = fundamental_basis(kK4);
  const CycleSetState s = make_state(b, {0, 2});
  EXPECT_EQ(s.sum, b.cycles[0] + b.cycles[2]);
  EXPECT_EQ(s.union_graph.size(), 5);
  EXPECT_EQ(s.host, kK4.fingerprint());
}

TEST(Greedy, K23KeepsBothCycles) {
  const CycleSetState s = extract_gee_greedy(kK23, fundamental_basis(kK23));
  EXPECT_EQ(s.surviving, (std::vector<int>{0, 1}));
  EXPECT_TRUE(are_isomorphic(s.union_graph, kK23));
}

TEST(Greedy, K4UnionDropsFirstCycle) {
  const CycleSetState s = extract_gee_greedy(kK4, fundamental_basis(kK4), with(RemovalPolicy::kUnion));
  EXPECT_EQ(s.surviving, (std::vector<int>{1, 2}));
  EXPECT_EQ(s.union_graph.size(), 5);
  EXPECT_EQ(topological_core(s.union_graph).core.order(), 2);  // theta-like
}

TEST(Greedy, CycleKeepsItself) {
  const Graph c7 = make::cycle(7);
  const CycleSetState s = extract_gee_greedy(c7, fundamental_basis(c7));
  EXPECT_EQ(s.surviving, (std::vector<int>{0}));
}

TEST(Exhaustive, SpecExamples) {
  const Graph c7 = make::cycle(7);
  EXPECT_EQ(extract_gee_exhaustive(c7, fundamental_basis(c7)).size(), 1U);

  const auto k23 = extract_gee_exhaustive(kK23, fundamental_basis(kK23));
  ASSERT_EQ(k23.size(), 1U);
  EXPECT_EQ(k23[0].surviving, (std::vector<int>{0, 1}));

  const auto k4 = extract_gee_exhaustive(kK4, fundamental_basis(kK4), with(RemovalPolicy::kSum));
  EXPECT_TRUE(std::any_of(k4.begin(), k4.end(), [](const CycleSetState& s) { return s.sum.is_hamilton_cycle(kK4); }));
}

TEST(Exhaustive, Errors) {
  const Graph k5 = make::complete(5);
  const Graph glued = make::glue_at_vertex(k5, 0, k5, 0);
  EXPECT_EQ(error_of([&] { extract_gee_exhaustive(glued, fundamental_basis(glued)); }), ErrorCode::kNotNormGraph);
  EXPECT_EQ(error_of([&] { extract_gee_greedy(glued, fundamental_basis(glued)); }), ErrorCode::kNotNormGraph);

  const Graph k8 = make::complete(8);
  GeeOptions small = with(RemovalPolicy::kUnion);
  small.state_cap = 5;
  EXPECT_EQ(error_of([&] { extract_gee_exhaustive(k8, fundamental_basis(k8), small); }),
            ErrorCode::kSearchCapExceeded);
  GeeOptions low_rank;
  low_rank.rank_cap = 10;
  EXPECT_EQ(error_of([&] { extract_gee_exhaustive(k8, fundamental_basis(k8), low_rank); }),
            ErrorCode::kRankTooLarge);
}

TEST(PredicateK23, SpecExamples) {
  const CycleBasis b = fundamental_basis(kK23);
  EXPECT_TRUE(predicate_k23(full_state(b)));

  const Graph sub = subdivide(kK23, 0);
  EXPECT_TRUE(predicate_k23(full_state(fundamental_basis(sub))));

  const Graph c5 = make::cycle(5);
  EXPECT_FALSE(predicate_k23(full_state(fundamental_basis(c5))));
}

TEST(PredicateK23, DiamondIsRejected) {
  const Graph diamond = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_FALSE(predicate_k23(full_state(fundamental_basis(diamond))));
}

TEST(PredicateC3, SpecExamples) {
  const Graph c7 = make::cycle(7);
  const CycleBasis bc = fundamental_basis(c7);
  const auto w = hamilton_witness_from_sum(c7, full_state(bc));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, bc.cycles[0]);
  EXPECT_TRUE(predicate_c3(c7, full_state(bc)));

  const CycleBasis b4 = fundamental_basis(kK4);
  const auto w4 = hamilton_witness_from_sum(kK4, make_state(b4, {0, 1}));
  ASSERT_TRUE(w4.has_value());
  EXPECT_EQ(w4->count(), 4);

  EXPECT_FALSE(predicate_c3(kK23, full_state(fundamental_basis(kK23))));
}

TEST(TheoremCheck, K23) {
  const TheoremReport r = theorem_check(kK23);
  EXPECT_FALSE(r.oracle.hamiltonian());
  ASSERT_EQ(r.verdicts.size(), 2U);
  for (const GeeVerdict& v : r.verdicts) {
    EXPECT_EQ(v.predicted, Prediction::kNonHamiltonian);
    EXPECT_TRUE(v.k23_predicate);
    EXPECT_TRUE(r.agrees(v));
    EXPECT_FALSE(r.counterexample(v));
  }
}

TEST(TheoremCheck, K4) {
  const TheoremReport r = theorem_check(kK4);
  EXPECT_TRUE(r.oracle.hamiltonian());
  for (const GeeVerdict& v : r.verdicts) {
    EXPECT_EQ(v.predicted, Prediction::kHamiltonian);
    ASSERT_TRUE(v.hamilton_witness.has_value());
    EXPECT_TRUE(v.hamilton_witness->is_hamilton_cycle(r.reduction.output));
    EXPECT_TRUE(r.agrees(v));
  }
}

TEST(TheoremCheck, PetersenIsMeasuredNotAssumed) {
  const TheoremReport r = theorem_check(make::petersen());
  EXPECT_FALSE(r.oracle.hamiltonian());
  for (const GeeVerdict& v : r.verdicts) {
    EXPECT_FALSE(v.hamilton_witness.has_value());
    EXPECT_EQ(r.counterexample(v), !v.k23_predicate);
  }
}

TEST(TheoremCheck, NonNormRaises) {
  const Graph k5 = make::complete(5);
  EXPECT_EQ(error_of([&] { theorem_check(make::join_by_bridge(k5, 0, k5, 0)); }), ErrorCode::kNotNormGraph);
}

TEST(TheoremCheck, GreedySearchMode) {
  TheoremOptions o;
  o.search = SearchMode::kGreedy;
  const TheoremReport r = theorem_check(kK4, o);
  for (const GeeVerdict& v : r.verdicts) EXPECT_EQ(v.terminal_states.size(), 1U);
}

class GeeCorpus : public ::testing::TestWithParam<RemovalPolicy> {};

TEST_P(GeeCorpus, GreedyAmongExhaustiveAndTerminalsAreFixpoints) {
  GeeOptions o = with(GetParam());
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const ReductionReport r = reduce(g);
      const Graph& h = r.output;
      if (!is_connected(h) || !norm_diagnostics(h).norm) continue;
      const CycleBasis b = fundamental_basis(h);
      const CycleSetState greedy = extract_gee_greedy(h, b, o);
      const std::vector<CycleSetState> all = extract_gee_exhaustive(h, b, o);
      EXPECT_TRUE(std::find(all.begin(), all.end(), greedy) != all.end());
      for (const CycleSetState& s : all) {
        EXPECT_FALSE(s.surviving.empty());
        EXPECT_TRUE(removable_cycles(b, s, o.policy).empty());
        if (auto w = hamilton_witness_from_sum(h, s)) EXPECT_TRUE(w->is_hamilton_cycle(h));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Policies, GeeCorpus, ::testing::Values(RemovalPolicy::kUnion, RemovalPolicy::kSum),
                         [](const auto& info) { return std::string(to_string(info.param)); });
