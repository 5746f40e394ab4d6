#include <gtest/gtest.h>

#include <json.hpp>

#include "normgraph/io.hpp"
#include "normgraph/survey.hpp"

using namespace normgraph;

namespace {

long long cell_total(const ConfusionBlock& b) {
  long long total = 0;
  for (const auto& [p, row] : b.cells) {
    for (const auto& [o, count] : row) total += count;
  }
  return total;
}

}  // namespace

TEST(Survey, K23Only) {
  const SurveyReport r = survey({make::complete_bipartite(2, 3)}, "fixture", {});
  ASSERT_EQ(r.per_policy.size(), 2U);
  for (const auto& [policy, block] : r.per_policy) {
    EXPECT_EQ(cell_total(block), 1);
    EXPECT_EQ(block.cell(Prediction::kNonHamiltonian, true), 1);
  }
  EXPECT_TRUE(r.counterexamples.empty());
}

TEST(Survey, CyclesArePredictedHamiltonian) {
  std::vector<Graph> corpus;
  for (int n = 3; n <= 7; ++n) corpus.push_back(make::cycle(n));
  const SurveyReport r = survey(corpus, "cycles", {});
  for (const auto& [policy, block] : r.per_policy) {
    EXPECT_EQ(block.cell(Prediction::kHamiltonian, false), 5);
    EXPECT_EQ(cell_total(block), 5);
    EXPECT_EQ(block.witnesses_validated, 5);
  }
}

TEST(Survey, NonNormAndTinyGraphsAreCountedNotChecked) {
  const Graph k5 = make::complete(5);
  const SurveyReport r =
      survey({make::path(2), make::glue_at_vertex(k5, 0, k5, 0), make::disjoint_union(k5, k5)}, "mixed", {});
  EXPECT_EQ(r.totals.seen, 3);
  EXPECT_EQ(r.totals.connected, 2);
  EXPECT_EQ(r.totals.too_small, 1);
  EXPECT_EQ(r.totals.non_norm, 1);
  for (const auto& [policy, block] : r.per_policy) EXPECT_EQ(block.checked, 0);
}

TEST(Survey, CellsSumToCheckedAndReportIsStable) {
  SurveyConfig one;
  SurveyConfig four;
  four.jobs = 4;
  const std::vector<Graph> corpus = enumerated_corpus(6);
  const SurveyReport a = survey(corpus, "n<=6", one);
  const SurveyReport b = survey(corpus, "n<=6", four);
  EXPECT_EQ(a.to_json(), b.to_json());
  EXPECT_EQ(a.to_csv(), b.to_csv());
  for (const auto& [policy, block] : a.per_policy) {
    EXPECT_EQ(cell_total(block), block.checked);
    EXPECT_EQ(block.checked + block.cap_exceeded, a.totals.norm - a.totals.oracle_timeouts);
    EXPECT_EQ(block.witnesses_emitted, block.witnesses_validated);
  }
  for (const Counterexample& c : a.counterexamples) EXPECT_TRUE(reverify_counterexample(c, one)) << c.graph6;
}

TEST(Survey, JsonSchema) {
  const SurveyReport r = survey({make::complete(4)}, "k4", {});
  const nlohmann::json j = nlohmann::json::parse(r.to_json());
  for (const char* key :
       {"corpus", "config", "totals", "perPolicy", "counterexamples", "geeUniqueness", "k23UniquenessViolations"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["perPolicy"]["union"]["confusion"]["predictedHam_oracleHam"], 1);
  EXPECT_FALSE(j["config"].contains("jobs"));
}

TEST(Survey, CsvHasOneRowPerCell) {
  const SurveyReport r = survey({make::complete(4)}, "k4", {});
  const std::string csv = r.to_csv();
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 2 * 6);
  EXPECT_NE(csv.find("union,hamiltonian,hamiltonian,1"), std::string::npos);
}

TEST(Witness, IndependentValidation) {
  const Graph k4 = make::complete(4);
  const CycleBasis b = fundamental_basis(k4);
  EXPECT_TRUE(witness_is_valid(k4, b.cycles[0] + b.cycles[1]));
  EXPECT_FALSE(witness_is_valid(k4, b.cycles[0]));
  EXPECT_FALSE(witness_is_valid(make::complete(5), b.cycles[0] + b.cycles[1]));

  const Graph two = make::disjoint_union(make::cycle(3), make::cycle(3));
  EdgeVector both(two);
  for (EdgeId e = 0; e < two.size(); ++e) both.set(e);
  EXPECT_FALSE(witness_is_valid(two, both));
}
