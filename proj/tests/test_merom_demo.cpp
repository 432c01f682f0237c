#include <gtest/gtest.h>

#include <cmath>

#include "ascgf/asymptotics.hpp"
#include "ascgf/conductor.hpp"
#include "ascgf/merom_demo.hpp"
#include "ascgf/zeta.hpp"

using namespace ascgf;

TEST(Approximant, DepthOneForm) {
  // (1 - X)(1 + QX^2)(1 - X)^{-1}/(1 - Q^2 X^3) with the (1 - X) factors cancelled.
  FactoredGF expected(3);
  expected.mul_factor(2, 4, 1).mul_factor(1, 2, -1).mul_factor(2, 3, -1);
  EXPECT_EQ(h_approx(3, 1), expected);
  EXPECT_EQ(h_approx(9, 2).exponent_of(1, 3), 1);
  EXPECT_EQ(h_approx(9, 2).exponent_of(0, 1), 0);
  EXPECT_THROW(h_approx(3, 0), std::invalid_argument);

  // Direct series check of 1 + QX^2 = (1 - Q^2X^4)/(1 - QX^2).
  const auto s = h_approx(3, 1).expand(6) * FactoredGF::factor(3, 2, 3).expand(6);
  EXPECT_EQ(s, TruncatedSeries(6, {1, 0, 3, 0, 0, 0, 0}));
}

TEST(Approximant, DepthOneCancelsZetaOfX) {
  const auto f = zeta_ratio_global(3, 1);
  EXPECT_EQ(f.exponent_of(0, 1), 0);
  EXPECT_EQ(f.exponent_of(1, 1), 0);
}

TEST(Approximant, EulerProductIsZetaRatio) {
  for (int q : {3, 9}) {
    const auto places = place_counts(q, 20);
    for (unsigned A = 1; A <= 4; ++A) {
      const auto euler = euler_product([&](const BigInt& Q, unsigned n) { return h_approx(Q, A).expand(n); }, places, 20);
      EXPECT_EQ(euler, zeta_ratio_global(q, A).expand(20)) << "q=" << q << " A=" << A;
    }
  }
}

TEST(Approximant, QuotientHasNoPolesInside) {
  for (int Q : {3, 9, 27}) {
    for (unsigned A = 1; A <= 5; ++A) {
      const auto quotient = cond_over_approximant(Q, A);
      EXPECT_TRUE(quotient.equals(expected_quotient(Q, A)));
      // Numerator times H_A reproduces the conductor function.
      const auto cond = local_cond_gf(AbelianPGroup::cyclic(3, 1), Q).expand(25);
      EXPECT_EQ(quotient.expand(25) * h_approx(Q, A).expand(25), cond);
    }
  }
}

TEST(Approximant, SpectrumOfZetaRatio) {
  const auto spectrum = pole_spectrum(zeta_ratio_global(3, 4));
  const auto order_at = [&](const Rational& s) {
    long total = 0;
    for (const auto& e : spectrum) {
      if (e.radius_exponent == s) total += e.order;
    }
    return total;
  };
  EXPECT_GT(order_at(Rational(3, 5)), 0);
  EXPECT_LT(order_at(Rational(4, 7)), 0);
  // Z(q X^3) in the denominator cancels the pole of Z(q^2 X^3).
  EXPECT_EQ(order_at(Rational(2, 3)), 0);
}

TEST(Accumulation, Report) {
  AccumulationOptions options;
  options.growth_bound = false;
  const auto r = pole_accumulation_report(3, 6, options);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.radii_monotone);
  EXPECT_TRUE(r.fractions_reduced_distinct);
  ASSERT_EQ(r.approximants.size(), 6u);
  for (const auto& a : r.approximants) {
    EXPECT_EQ(a.new_radius_exponent, Rational(a.depth, 2 * a.depth - 1));
    EXPECT_LT(a.numeric_radius, r.limit);
    EXPECT_EQ(a.new_radius_is_pole, a.depth % 2 == 1);
    EXPECT_FALSE(a.growth_bound.has_value());
  }
  EXPECT_FALSE(r.approximants[2].new_radius_exponent == r.approximants[1].new_radius_exponent);
  EXPECT_TRUE(r.approximants[2].new_radius_in_spectrum);
  EXPECT_DOUBLE_EQ(r.limit, 1 / std::sqrt(3.0));
  EXPECT_THROW(pole_accumulation_report(3, 1), std::invalid_argument);
  EXPECT_THROW(pole_accumulation_report(4, 3), std::invalid_argument);
}

TEST(Accumulation, GrowthProxy) {
  AccumulationOptions options;
  options.order = 16;
  const auto r = pole_accumulation_report(3, 3, options);
  for (const auto& a : r.approximants) {
    ASSERT_TRUE(a.growth_bound.has_value());
    EXPECT_TRUE(*a.growth_bound) << "A=" << a.depth;
  }
}

TEST(Accumulation, QuadraticRoots) {
  for (int Q : {3, 9, 27, 81}) {
    const auto c = quadratic_root_check(Q);
    EXPECT_TRUE(c.ok);
    EXPECT_NEAR(c.modulus, 1 / std::sqrt(static_cast<double>(Q)), 1e-12);
  }
  // Product of the roots is 1/Q, so both lie on |X| = Q^{-1/2} when they are complex conjugates.
  EXPECT_FALSE(quadratic_root_check(3, -1).ok);
}
