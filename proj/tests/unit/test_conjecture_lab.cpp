#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "coverkit/coverkit.hpp"
#include "oracles.hpp"

using namespace coverkit;

TEST(Enumerate, SmallCounts) {
  const auto m32 = enumerate_uniform_regular(3, 2);
  ASSERT_EQ(m32.size(), 1u);
  EXPECT_EQ(m32[0].degree, 2);
  EXPECT_EQ(m32[0].edges_mask, 0b111u);

  const auto m42 = enumerate_uniform_regular(4, 2);
  ASSERT_EQ(m42.size(), 7u);
  std::map<std::int64_t, int> by_degree;
  for (const auto& m : m42) ++by_degree[m.degree];
  EXPECT_EQ(by_degree[1], 3);  // perfect matchings
  EXPECT_EQ(by_degree[2], 3);  // 4-cycles
  EXPECT_EQ(by_degree[3], 1);  // K4

  EXPECT_EQ(enumerate_uniform_regular(5, 5).size(), 1u);
  EXPECT_EQ(enumerate_uniform_regular(4, 1).size(), 1u);
  EXPECT_THROW(enumerate_uniform_regular(8, 3), CapacityError);
  EXPECT_THROW(enumerate_uniform_regular(3, 4), InputError);
}

TEST(Enumerate, ModelsAreRegularUniformAndSorted) {
  const auto models = enumerate_uniform_regular(6, 2);
  EXPECT_EQ(models.size(), 171u);
  for (std::size_t i = 0; i < models.size(); ++i) {
    if (i) EXPECT_LT(models[i - 1].edges_mask, models[i].edges_mask);
    for (std::size_t v = 0; v < 6; ++v) EXPECT_EQ(models[i].model.degree(v), std::size_t(models[i].degree));
    EXPECT_EQ(models[i].model.max_edge_size(), 2u);
  }
}

TEST(Evaluate, MatchesMarkovOracle) {
  for (const auto& e : evaluate_uniform_regular(5, 2)) {
    const auto models = enumerate_uniform_regular(5, 2);
    const auto it = std::find_if(models.begin(), models.end(),
                                 [&](const UniformRegularModel& m) { return m.edges_mask == e.edges_mask; });
    ASSERT_NE(it, models.end());
    EXPECT_EQ(e.expectation, oracle::markov_expectation(it->model));
    EXPECT_LE(e.expectation.to_double(), universal_upper(5, 2));
  }
}

TEST(Conjectures, FourTwoIsClean) {
  const auto report = run_lab(4, 2);
  EXPECT_EQ(report.entries.size(), 7u);
  EXPECT_TRUE(report.monotonicity.nested_violations.empty());
  EXPECT_TRUE(report.batch_max.holds());
  EXPECT_EQ(report.batch_max.batch_expectation, Rational(19, 5));
  EXPECT_EQ(report.batch_max.max_expectation, Rational(19, 5));
  EXPECT_TRUE(report.lower.holds());
  EXPECT_EQ(report.lower.bound, Rational(3));
  EXPECT_EQ(report.lower.min_expectation, Rational(3));
  ASSERT_TRUE(report.lower.partition_attains.has_value());
  EXPECT_TRUE(*report.lower.partition_attains);
}

TEST(Conjectures, SixTwoHasNestedCounterexample) {
  const auto mono = test_conjecture_monotonicity(6, 2);
  EXPECT_EQ(mono.nested_violations.size(), 60u);
  const auto it = std::find_if(mono.nested_violations.begin(), mono.nested_violations.end(),
                               [](const PairViolation& v) { return v.smaller_mask == 5905 && v.larger_mask == 8025; });
  ASSERT_NE(it, mono.nested_violations.end());
  EXPECT_EQ(it->smaller_expectation, Rational(69, 10));
  EXPECT_EQ(it->larger_expectation, Rational(1919, 280));
  EXPECT_TRUE(test_conjecture_lower(6, 2).holds());
}

TEST(Conjectures, SixThreeBatchMaxFails) {
  const auto report = test_conjecture_batch_max(6, 3);
  EXPECT_FALSE(report.holds());
  EXPECT_EQ(report.batch_expectation, Rational(327, 76));
  EXPECT_EQ(report.max_expectation, Rational(157, 36));
}

TEST(Verdicts, Format) {
  std::ostringstream out;
  write_verdicts(out, run_lab(3, 2));
  EXPECT_EQ(out.str(), "7,2,5/2,upper:ok|monotone:ok|batch-max:ok|lower:ok\n");
}
