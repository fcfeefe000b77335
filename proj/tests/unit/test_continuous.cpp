#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "coverkit/coverkit.hpp"

using namespace coverkit;

TEST(ArcParams, Validation) {
  EXPECT_THROW(ArcParams(Rational(0)), InputError);
  EXPECT_THROW(ArcParams(Rational(1)), InputError);
  EXPECT_THROW(ArcParams(Rational(-1, 3)), InputError);
  EXPECT_NO_THROW(ArcParams(Rational(1, 1000)));
}

TEST(StevensExact, Examples) {
  EXPECT_EQ(stevens_exact(ArcParams(Rational(1, 2))), Rational(5));
  EXPECT_EQ(stevens_exact(ArcParams(Rational(2, 3))), Rational(13, 4));
  // Series by hand for a = 1/3: 1 + 9 - (1/3)(27/8) + 0.
  EXPECT_EQ(stevens_exact(ArcParams(Rational(1, 3))), Rational(71, 8));
}

TEST(StevensFloat, AgreesWithExactTo12Digits) {
  for (int q = 2; q <= 50; ++q) {
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const ArcParams a(Rational(p, q));
      const double exact = stevens_exact(a).to_double();
      EXPECT_NEAR(stevens_float(a), exact, 1e-12 * exact) << p << "/" << q;
    }
  }
}

TEST(StevensExact, DecreasingInArcLength) {
  Rational prev = stevens_exact(ArcParams(Rational(1, 40)));
  for (int q = 39; q >= 2; --q) {
    const Rational cur = stevens_exact(ArcParams(Rational(1, q)));
    EXPECT_LT(cur, prev) << q;
    prev = cur;
  }
}

TEST(Flatto, RatioApproachesOne) {
  EXPECT_THROW(flatto_asymptotic(ArcParams(Rational(1, 2))), DomainError);
  const double r100 = stevens_float(ArcParams(Rational(1, 100))) / flatto_asymptotic(ArcParams(Rational(1, 100)));
  const double r1000 = stevens_float(ArcParams(Rational(1, 1000))) / flatto_asymptotic(ArcParams(Rational(1, 1000)));
  EXPECT_NEAR(r100, 1.0, 0.10);
  EXPECT_NEAR(r1000, 1.0, 0.05);
  EXPECT_LT(std::abs(r1000 - 1.0), std::abs(r100 - 1.0));
}

TEST(ArcUpperBound, BoundsStevens) {
  EXPECT_EQ(arc_upper_bound(Rational(2)), Rational(5));
  EXPECT_THROW(arc_upper_bound(Rational(1, 2)), InputError);
  for (int c = 2; c <= 30; ++c) {
    EXPECT_LE(stevens_exact(ArcParams(Rational(1, c))), arc_upper_bound(Rational(c))) << c;
  }
}

TEST(DominanceGap, NonNegativeUpTo60) {
  EXPECT_EQ(dominance_gap(4, 2), Rational(5) - Rational(11, 3));
  EXPECT_THROW(dominance_gap(4, 4), DomainError);
  for (int n = 2; n <= 60; ++n) {
    for (int l = 1; l < n; ++l) EXPECT_GE(dominance_gap(n, l), Rational(0)) << n << "," << l;
  }
}
