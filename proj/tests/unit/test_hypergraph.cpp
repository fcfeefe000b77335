#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "coverkit/coverkit.hpp"
#include "oracles.hpp"

using namespace coverkit;

namespace {

CoverageModel cyclic32() { return CoverageModel::from_lists(3, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST(CoverageModel, RejectsInvalidModels) {
  EXPECT_THROW(CoverageModel::from_lists(3, {{0, 1}}), InputError);          // vertex 2 uncovered
  EXPECT_THROW(CoverageModel::from_lists(2, {{0, 1}, {1, 0}}), InputError);  // duplicate as sets
  EXPECT_THROW(CoverageModel::from_lists(2, {{0, 2}}), InputError);          // out of range
  EXPECT_THROW(CoverageModel::from_lists(2, {{0, 1}, {}}), InputError);      // empty edge
  EXPECT_THROW(CoverageModel::from_lists(2, {}), InputError);
}

TEST(CoverageModel, Degrees) {
  const auto m = cyclic32();
  EXPECT_EQ(m.degree(0), 2u);
  EXPECT_EQ(m.max_edge_size(), 2u);
}

TEST(IsRecoverySet, Examples) {
  const auto m = cyclic32();
  const std::vector<std::size_t> pair{0, 1}, single{0}, bad{5};
  EXPECT_TRUE(is_recovery_set(m, pair));
  EXPECT_FALSE(is_recovery_set(m, single));
  EXPECT_THROW(is_recovery_set(m, bad), InputError);
  const std::vector<std::size_t> all{0, 1, 2};
  EXPECT_TRUE(is_recovery_set(coupon_collector_model(3), all));
}

TEST(RecoveryProfile, Examples) {
  const auto cyc = recovery_profile(cyclic32());
  EXPECT_EQ(cyc.n_edges, 3u);
  EXPECT_EQ(cyc.max_non_recovery, 1u);
  EXPECT_EQ(cyc.alpha, (std::vector<BigInt>{0, 0}));

  const auto cc = recovery_profile(coupon_collector_model(3));
  EXPECT_EQ(cc.max_non_recovery, 2u);
  EXPECT_EQ(cc.alpha, (std::vector<BigInt>{0, 0, 0}));

  const auto single = recovery_profile(CoverageModel::from_lists(2, {{0, 1}}));
  EXPECT_EQ(single.n_edges, 1u);
  EXPECT_EQ(single.max_non_recovery, 0u);
  EXPECT_EQ(single.alpha, (std::vector<BigInt>{0}));
}

TEST(RecoveryProfile, CapEnforced) {
  EnumerationCaps caps;
  caps.max_edges = 4;
  EXPECT_THROW(recovery_profile(coupon_collector_model(5), caps), CapacityError);
}

TEST(RecoveryProfile, ValidateRejectsBrokenProfiles) {
  RecoveryProfile p{3, 1, {1, 0}};
  EXPECT_THROW(p.validate(), InputError);
  RecoveryProfile q{3, 2, {0, 3, 0}};  // 3 covering pairs cannot shrink to 0 covering triples
  EXPECT_THROW(q.validate(), InputError);
}

TEST(ExpectedCoverage, Examples) {
  EXPECT_EQ(expected_coverage_exact(recovery_profile(coupon_collector_model(3))), Rational(11, 2));
  EXPECT_EQ(expected_coverage_exact(recovery_profile(cyclic32())), Rational(5, 2));
  EXPECT_EQ(expected_coverage_exact(RecoveryProfile{1, 0, {0}}), Rational(1));
  EXPECT_EQ(expected_coverage_ie(coupon_collector_model(2)), Rational(3));
  EXPECT_EQ(expected_coverage_ie(cyclic32()), Rational(5, 2));
  const auto c42 = CoverageModel::from_lists(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(expected_coverage_ie(c42), Rational(11, 3));
  EXPECT_EQ(expected_coverage_exact(recovery_profile(c42)), Rational(11, 3));
}

TEST(ExpectedCoverage, VertexCapEnforced) {
  EnumerationCaps caps;
  caps.max_vertices = 3;
  EXPECT_THROW(expected_coverage_ie(coupon_collector_model(4), caps), CapacityError);
}

// Both exact routes and the first-step Markov oracle agree on random models.
TEST(OracleProperty, ThreeRoutesAgreeOnRandomModels) {
  std::mt19937_64 rng(20240601);
  for (int round = 0; round < 120; ++round) {
    const std::size_t v = 2 + rng() % 11;   // up to 12 vertices
    const std::size_t e = 1 + rng() % 14;   // up to 14 edges
    if (e > (std::size_t{1} << v) - 1) continue;
    const auto model = oracle::random_covering_model(rng, v, e);
    const auto profile = recovery_profile(model);
    profile.validate();
    const Rational by_profile = expected_coverage_exact(profile);
    EXPECT_EQ(by_profile, expected_coverage_ie(model)) << serialize_model(model);
    EXPECT_EQ(by_profile, oracle::markov_expectation(model)) << serialize_model(model);
    EXPECT_GE(by_profile, Rational(1));
  }
}

TEST(OracleProperty, ProfileMatchesNaiveCountsAndUpwardClosure) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 60; ++round) {
    const std::size_t v = 2 + rng() % 7;
    const std::size_t e = 1 + rng() % 12;
    if (e > (std::size_t{1} << v) - 1) continue;
    const auto model = oracle::random_covering_model(rng, v, e);
    const auto profile = recovery_profile(model);
    const auto naive = oracle::naive_recovery_counts(model);
    for (std::size_t s = 0; s <= profile.max_non_recovery; ++s) EXPECT_EQ(profile.alpha[s], naive[s]);
    for (std::size_t s = profile.max_non_recovery + 1; s <= e; ++s) EXPECT_EQ(naive[s], binomial(e, s));
    EXPECT_LT(naive[profile.max_non_recovery], binomial(e, profile.max_non_recovery));
    for (std::size_t s = 0; s < profile.max_non_recovery; ++s) {
      EXPECT_GE(profile.alpha[s + 1] * BigInt(s + 1), profile.alpha[s] * BigInt(e - s));
    }
  }
}

TEST(OracleProperty, ProfileIndependentOfWorkerCount) {
  std::mt19937_64 rng(99);
  const auto model = oracle::random_covering_model(rng, 10, 16);
  EnumerationCaps one, four;
  one.workers = 1;
  four.workers = 4;
  EXPECT_EQ(recovery_profile(model, one), recovery_profile(model, four));
}

TEST(Hamming, Examples) {
  const auto cc = build_hamming_model(2, 0);
  EXPECT_EQ(cc.n_vertices(), 4u);
  EXPECT_EQ(expected_coverage_ie(cc), Rational(25, 3));
  EXPECT_EQ(expected_coverage_ie(build_hamming_model(2, 2)), Rational(1));
  const auto h31 = build_hamming_model(3, 1);
  EXPECT_EQ(h31.n_edges(), 8u);
  EXPECT_EQ(recovery_profile(h31).max_non_recovery, 4u);
  EXPECT_EQ(expected_coverage_exact(recovery_profile(h31)), expected_coverage_ie(h31));
  EXPECT_THROW(build_hamming_model(2, 3), InputError);
  EXPECT_THROW(build_hamming_model(25, 1), CapacityError);
}

TEST(ModelIo, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto model = oracle::random_covering_model(rng, 3 + rng() % 8, 1 + rng() % 7);
    const std::string text = serialize_model(model);
    const auto back = parse_model(text);
    EXPECT_EQ(serialize_model(back), text);
    EXPECT_EQ(expected_coverage_ie(back), expected_coverage_ie(model));
  }
}

TEST(ModelIo, CommentsAndErrors) {
  const auto m = parse_model("# pairs\nn 3\n\n0 1\n1 2\n# tail\n2 0\n");
  EXPECT_EQ(m.n_edges(), 3u);
  EXPECT_THROW(parse_model("0 1\n"), InputError);
  EXPECT_THROW(parse_model("n 3\n0 x\n"), InputError);
  EXPECT_THROW(parse_model("n 2\n0 5\n"), InputError);
}
