#include <gtest/gtest.h>

#include "ascgf/asymptotics.hpp"
#include "ascgf/conductor.hpp"
#include "ascgf/verification.hpp"

using namespace ascgf;

namespace {

AbelianPGroup G(const char* spec) { return AbelianPGroup::parse(spec); }

// Ratio a_n / (C q^{a' n}) as a double.
double ratio_at(const AbelianPGroup& g, const BigInt& q, unsigned n) {
  const auto inv = invariant_sequence(g);
  const auto a = global_asc_gf(g, q).expand(n)[n];
  const Rational r = a / (leading_constant(g, q) * Rational(ipow(q, static_cast<std::uint64_t>(inv.a_prime) * n)));
  return r.get_d();
}

}  // namespace

TEST(PoleSpectrum, LocalC3InnermostCircle) {
  for (int Q : {3, 9}) {
    const auto poles = poles_only(pole_spectrum(local_asc_gf(G("p=3;m=1"), Q)));
    ASSERT_FALSE(poles.empty());
    EXPECT_EQ(poles.front().radius_exponent, Rational(2, 3));
    EXPECT_EQ(poles.front().points, 3u);
    EXPECT_EQ(poles.front().order, 1);
    // (1 - QX) cancels against (1 - Q^3 X^3): no pole at radius 1/Q.
    for (const auto& e : poles) EXPECT_NE(e.radius_exponent, 1);
  }
  EXPECT_TRUE(pole_spectrum(FactoredGF(3)).empty());
}

TEST(PoleSpectrum, GlobalC3) {
  const auto r = innermost_pole(global_asc_gf(G("p=3;m=1"), 3));
  EXPECT_EQ(r.radius_exponent, 2);
  EXPECT_EQ(r.points, 1u);
  EXPECT_EQ(r.multiplicity, 1);
  ASSERT_TRUE(r.location);
  EXPECT_EQ(*r.location, Rational(1, 9));
}

TEST(PoleSpectrum, BlocksSplitByCyclotomicIndex) {
  // (1 - X^4)/(1 - X^2) = 1 + X^2: zeros at the primitive 4th roots only.
  const auto f = FactoredGF::factor(2, 0, 4) * FactoredGF::factor(2, 0, 2, -1);
  const auto s = pole_spectrum(f);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].cyclotomic_index, 4u);
  EXPECT_EQ(s[0].points, 2u);
  EXPECT_EQ(s[0].order, -1);
  // (1 - 4X^2) has radius 2^{-1}: s = 2/2 = 1, two points, Phi_1 and Phi_2 blocks.
  const auto g = pole_spectrum(FactoredGF::factor(2, 2, 2, -1));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].radius_exponent, 1);
  EXPECT_EQ(g[0].block_polynomial(2), Polynomial({-1, 2}));
  EXPECT_EQ(g[1].block_polynomial(2), Polynomial({1, 2}));
}

TEST(PoleSpectrum, InnermostExponentsMatchInvariants) {
  for (std::uint64_t p : {2, 3}) {
    for (const auto& g : groups_up_to(p, 4)) {
      if (g.is_trivial()) continue;
      const auto inv = invariant_sequence(g);
      for (const BigInt& q : {BigInt(p), ipow(p, 2)}) {
        const auto global = innermost_pole(global_asc_gf(g, q));
        EXPECT_EQ(global.radius_exponent, inv.a_prime) << g.spec();
        EXPECT_EQ(global.points, 1u);
        EXPECT_EQ(global.multiplicity, 1);

        const auto local = innermost_pole(local_asc_gf(g, q));
        EXPECT_EQ(local.radius_exponent, inv.a) << g.spec();
        EXPECT_EQ(local.points, to_u64(ipow(p, g.exponent_log()))) << g.spec();
        EXPECT_EQ(local.multiplicity, 1);

        // Conductor and Artin-Schreier conductor functions share their poles.
        EXPECT_EQ(pole_spectrum(local_cond_gf(g, q)), poles_only(pole_spectrum(local_asc_gf(g, q)))) << g.spec();
      }
    }
  }
}

TEST(LeadingConstant, C3) {
  EXPECT_EQ(leading_constant(G("p=3;m=1"), 3), Rational(4, 5));
  // Independent evaluation of (1 - X)(1 - 81X^3)/(1 - 9X^3) at X = 1/9.
  const Rational x(1, 9);
  EXPECT_EQ((1 - x) * (1 - 81 * x * x * x) / (1 - 9 * x * x * x), Rational(4, 5));
  EXPECT_LE(std::abs(ratio_at(G("p=3;m=1"), 3, 40) - 1), 1e-3);
}

TEST(LeadingConstant, MatchesCoefficientRatios) {
  for (std::uint64_t p : {2, 3}) {
    for (const auto& g : groups_up_to(p, 3)) {
      if (g.is_trivial()) continue;
      EXPECT_LE(std::abs(ratio_at(g, p, 40) - 1), 1e-3) << g.spec();
      EXPECT_GT(leading_constant(g, p), 0);
    }
  }
  EXPECT_THROW(leading_constant(AbelianPGroup::trivial(3), 3), std::invalid_argument);
}

TEST(CoefficientFormula, Examples) {
  const auto z = FactoredGF::factor(2, 0, 1, -1) * FactoredGF::factor(2, 1, 1, -1);
  const auto f = exact_coefficient_formula(z);
  for (std::uint64_t n = 0; n <= 20; ++n) {
    EXPECT_EQ(f.coefficient(n), Rational(ipow(2, n + 1) - 1));
  }
  const auto g = exact_coefficient_formula(FactoredGF::factor(5, 0, 1, -1));
  for (std::uint64_t n = 0; n <= 5; ++n) EXPECT_EQ(g.coefficient(n), 1);
}

TEST(CoefficientFormula, MatchesExpansion) {
  const auto check = [](const FactoredGF& f, unsigned N) {
    const auto formula = exact_coefficient_formula(f);
    const auto series = f.expand(N);
    for (unsigned n = 0; n <= N; ++n) EXPECT_EQ(formula.coefficient(n), series[n]) << f.symbolic() << " n=" << n;
  };
  check(global_asc_gf(G("p=3;m=1"), 3), 30);
  check(local_asc_gf(G("p=2;m=1,1"), 4), 30);
  for (std::uint64_t p : {2, 3}) {
    for (const auto& g : groups_up_to(p, 3)) check(global_asc_gf(g, p), 25);
  }
  // Repeated poles and a polynomial part.
  FactoredGF f(2);
  f.mul_factor(1, 1, -3).mul_factor(0, 2, -2).mul_factor(3, 5, 2);
  check(f, 30);
}
