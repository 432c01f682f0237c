#include <gtest/gtest.h>

#include "ascgf/conductor.hpp"
#include "ascgf/verification.hpp"
#include "ascgf/zeta.hpp"

using namespace ascgf;

namespace {

AbelianPGroup G(const char* spec) { return AbelianPGroup::parse(spec); }

// The displayed product for C_{p^e}^r:
// (1 - X)(1 - Q^{p^e r} X^{p^e}) / ((1 - Q^r X)(1 - Q^{(p^e - 1) r} X^{p^e})).
FactoredGF cyclic_power_local(std::uint64_t p, unsigned e, unsigned r, const BigInt& Q) {
  const std::uint64_t pe = to_u64(ipow(p, e));
  FactoredGF f(Q);
  f.mul_factor(0, 1, 1).mul_factor(pe * r, pe, 1).mul_factor(r, 1, -1).mul_factor((pe - 1) * r, pe, -1);
  return f;
}

std::vector<BigInt> small_q(std::uint64_t p) { return {BigInt(p), ipow(p, 2)}; }

}  // namespace

TEST(LocalAsc, CyclicPowerExample) {
  for (auto [p, e, r] : {std::tuple{3u, 1u, 1u}, {3u, 1u, 2u}, {3u, 2u, 1u}, {2u, 2u, 1u}, {2u, 3u, 1u}, {2u, 1u, 3u}}) {
    for (const BigInt& Q : small_q(p)) {
      EXPECT_EQ(local_asc_gf(AbelianPGroup::cyclic_power(p, e, r), Q), cyclic_power_local(p, e, r, Q));
    }
  }
}

TEST(LocalAsc, SmallCases) {
  EXPECT_TRUE(local_asc_gf(AbelianPGroup::trivial(3), 3).is_one());
  const auto c = local_asc_gf(G("p=3;m=1"), 3).expand(2);
  EXPECT_EQ(c[0], 1);
  EXPECT_EQ(c[1], 3 - 1);  // Q^tau(1) - 1
  EXPECT_EQ(c[2], 9 - 3);
  EXPECT_THROW(local_asc_gf(G("p=3;m=1"), 2), std::invalid_argument);
  EXPECT_THROW(local_asc_gf(G("p=3;m=1"), 1), std::invalid_argument);
}

TEST(LocalAsc, NoFactorsBeyondExponent) {
  for (std::uint64_t p : {2, 3}) {
    for (const auto& g : groups_up_to(p, 5)) {
      const std::uint64_t top = to_u64(ipow(p, g.exponent_log()));
      for (const auto& f : {local_asc_gf(g, p), global_asc_gf(g, p)}) {
        for (const auto& [key, e] : f.factors()) EXPECT_LE(key.beta, top) << g.spec();
      }
    }
  }
}

TEST(LocalAsc, CumulativeCountsArePowersOfQ) {
  for (std::uint64_t p : {2, 3}) {
    for (const auto& g : groups_up_to(p, 4)) {
      for (unsigned d = 1; d <= 3; ++d) {
        const BigInt Q = ipow(p, d);
        const auto cumulative = local_asc_gf(g, Q).expand(25) * FactoredGF::factor(Q, 0, 1, -1).expand(25);
        const auto profile = local_count_profile(g, Q, 25);
        EXPECT_EQ(profile.cumulative.front(), 1);
        for (unsigned k = 0; k <= 25; ++k) {
          EXPECT_EQ(cumulative[k], Rational(ipow(Q, tau(g, k)))) << g.spec() << " Q=" << Q << " k=" << k;
          EXPECT_EQ(profile.cumulative[k], ipow(Q, tau(g, k)));
          if (k > 0) EXPECT_TRUE(log_exact(profile.cumulative[k] / profile.cumulative[k - 1], p));
        }
      }
    }
  }
}

TEST(GlobalAsc, CyclicClosedForm) {
  for (auto [p, e] : {std::pair{3u, 1u}, {3u, 2u}, {2u, 1u}, {2u, 2u}, {2u, 3u}}) {
    for (const BigInt& q : small_q(p)) {
      const std::uint64_t pe = to_u64(ipow(p, e));
      FactoredGF expected(q);
      expected.mul_factor(0, 1, 1).mul_factor(pe + 1, pe, 1).mul_factor(2, 1, -1).mul_factor(pe - 1, pe, -1);
      EXPECT_EQ(global_asc_gf(AbelianPGroup::cyclic(p, e), q), expected);
    }
  }
  EXPECT_EQ(global_asc_gf(G("p=3;m=1"), 3).symbolic(), "(1 - X)*(1 - 81*X^3)/((1 - 9*X)*(1 - 9*X^3))");
  EXPECT_TRUE(global_asc_gf(AbelianPGroup::trivial(2), 2).is_one());
}

TEST(GlobalAsc, MatchesEulerProductAndIsIntegral) {
  const auto c3 = global_asc_gf(G("p=3;m=1"), 3).expand(12);
  EXPECT_EQ(c3, global_asc_euler_series(G("p=3;m=1"), 3, 12));
  // Degree-one places only: (q + 1)(Q - 1).
  EXPECT_EQ(c3[1], (3 + 1) * (3 - 1));
  for (std::uint64_t p : {2, 3}) {
    for (const auto& g : groups_up_to(p, 3)) {
      const auto s = global_asc_gf(g, p).expand(14);
      EXPECT_EQ(s, global_asc_euler_series(g, p, 14)) << g.spec();
      EXPECT_EQ(s[0], 1);
      for (const auto& c : s.integer_coefficients()) EXPECT_GE(c, 0);
    }
  }
}

TEST(LocalCond, RelationToAsc) {
  for (std::uint64_t p : {2, 3}) {
    for (const auto& g : groups_up_to(p, 3)) {
      for (const BigInt& Q : small_q(p)) {
        const RationalGF cond = local_cond_gf(g, Q);
        const FactoredGF asc = local_asc_gf(g, Q);
        // F_cond - 1 = X (F_asc - 1) as rational functions:
        // cond.num * asc.den == asc.den * cond.den + X (asc.num - asc.den) cond.den
        const Polynomial x = Polynomial::monomial(1, 1);
        EXPECT_EQ(cond.numerator() * asc.denominator(),
                  cond.denominator() * (asc.denominator() + x * (asc.numerator() - asc.denominator())))
            << g.spec();
        const auto a = asc.expand(20);
        const auto c = cond.expand(20);
        EXPECT_EQ(c[0], 1);
        for (unsigned k = 0; k < 20; ++k) EXPECT_EQ(c[k + 1], k == 0 ? Rational(0) : a[k]) << g.spec();
      }
    }
  }
}

TEST(LocalCond, C3CanonicalForm) {
  for (int Q : {3, 9, 27}) {
    const RationalGF cond = local_cond_gf(G("p=3;m=1"), Q);
    EXPECT_EQ(cond.poly(), Polynomial({1, 1, Rational(Q)}));
    FactoredGF expected(Q);
    expected.mul_factor(0, 1, 1).mul_factor(2, 3, -1);
    EXPECT_EQ(cond.factored(), expected);
  }
  EXPECT_EQ(local_cond_gf(G("p=3;m=1"), 3).symbolic(), "(1 - X)*(1 + X + 3*X^2)/(1 - 9*X^3)");
  EXPECT_TRUE(local_cond_gf(AbelianPGroup::trivial(3), 3).equals(RationalGF(FactoredGF(3))));
}

TEST(GlobalCond, SmallCoefficients) {
  const auto s = global_cond_series(G("p=3;m=1"), 3, 4);
  EXPECT_EQ(s[0], 1);
  EXPECT_EQ(s[1], 0);
  EXPECT_EQ(s[2], (3 + 1) * (3 - 1));
  EXPECT_EQ(global_cond_series(G("p=3;m=1"), 3, 0)[0], 1);
}

TEST(Disc, Reindexing) {
  const auto cond = global_cond_series(G("p=3;m=1"), 3, 10);
  const auto disc = disc_series(G("p=3;m=1"), 3, 20);
  EXPECT_EQ(disc.conductor_multiplier, 2u);
  EXPECT_FALSE(disc.general_prime_extension);
  for (unsigned n = 0; n <= 10; ++n) {
    EXPECT_EQ(disc.series[2 * n], cond[n]);
    if (2 * n + 1 <= 20) EXPECT_EQ(disc.series[2 * n + 1], 0);
  }
  EXPECT_EQ(disc_series(G("p=3;m=1"), 3, 4).series[4], 8);
  EXPECT_EQ(disc_series(G("p=2;m=1"), 2, 12).series, global_cond_series(G("p=2;m=1"), 2, 12));
  EXPECT_TRUE(disc_series(G("p=5;m=1"), 5, 8).general_prime_extension);
  EXPECT_THROW(disc_series(G("p=3;m=0,1"), 3, 4), std::invalid_argument);
  EXPECT_THROW(disc_series(G("p=3;m=2"), 3, 4), std::invalid_argument);
}

TEST(Jump, SingleLevelIsCpLocal) {
  for (std::uint64_t p : {2, 3, 5}) {
    const auto j = jump_local_gf(p, 1, p);
    EXPECT_EQ(j.variable_factor(0), local_asc_gf(AbelianPGroup::cyclic(p, 1), p));
  }
}

TEST(Jump, SpecializationRecoversLocalAsc) {
  for (std::uint64_t p : {2, 3}) {
    for (unsigned e = 1; e <= 3; ++e) {
      for (const BigInt& Q : small_q(p)) {
        const auto j = jump_local_gf(p, e, Q);
        EXPECT_EQ(j.specialized(), local_asc_gf(AbelianPGroup::cyclic(p, e), Q));
        EXPECT_EQ(j.expand(12).specialize(), local_asc_gf(AbelianPGroup::cyclic(p, e), Q).expand(12));
      }
    }
  }
}

TEST(Jump, ProfileCoefficientMatchesEnumeration) {
  // e = 2, p = 3, Q = 3: homomorphisms with (j_0 - 3 j_1, j_1) = (0, 1).
  const auto series = jump_local_gf(3, 2, 3).expand(6);
  const auto counts = jump_profile_bruteforce(3, 2, 1, 6);
  EXPECT_EQ(series.coefficient({0, 1}), Rational(counts.at({0, 1})));
  EXPECT_EQ(series.coefficient({0, 1}), 27 - 9);
}

TEST(Jump, GlobalSpecializedEulerProduct) {
  EXPECT_EQ(jump_global_series(3, 1, 3, 10), global_asc_gf(G("p=3;m=1"), 3).expand(10));
  EXPECT_EQ(jump_global_series(3, 2, 3, 10), global_asc_gf(G("p=3;m=0,1"), 3).expand(10));
  EXPECT_EQ(jump_global_series(2, 3, 2, 10), global_asc_gf(G("p=2;m=0,0,1"), 2).expand(10));
  EXPECT_EQ(jump_global_series(3, 1, 3, 10)[0], 1);
}

TEST(CondRationality, C2FitsAndVerifies) {
  for (int q : {2, 4}) {
    const auto check = fit_cond_rational(G("p=2;m=1"), q, 20, 40);
    ASSERT_TRUE(check.fit) << q;
    EXPECT_TRUE(check.verified()) << q;
    EXPECT_EQ(check.fit->numerator, Polynomial({1, 0, -1}));
    EXPECT_EQ(check.fit->denominator, Polynomial({1, 0, -Rational(q * q)}));
  }
}

TEST(GlobalAsc, CyclicPowerExample) {
  for (auto [p, e, r] : {std::tuple{3u, 1u, 1u}, {3u, 1u, 2u}, {3u, 2u, 1u}, {2u, 2u, 1u}, {2u, 3u, 1u}}) {
    const std::uint64_t pe = to_u64(ipow(p, e));
    for (const BigInt& q : small_q(p)) {
      FactoredGF f(q);
      f.mul_factor(0, 1, 1).mul_factor(1, 1, 1).mul_factor(pe * r, pe, 1).mul_factor(pe * r + 1, pe, 1);
      f.mul_factor(r, 1, -1).mul_factor(r + 1, 1, -1).mul_factor((pe - 1) * r, pe, -1).mul_factor((pe - 1) * r + 1, pe, -1);
      EXPECT_EQ(global_asc_gf(AbelianPGroup::cyclic_power(p, e, r), q), f);
      if (r != 1) continue;
      FactoredGF simplified(q);
      simplified.mul_factor(0, 1, 1).mul_factor(pe + 1, pe, 1).mul_factor(2, 1, -1).mul_factor(pe - 1, pe, -1);
      EXPECT_EQ(global_asc_gf(AbelianPGroup::cyclic(p, e), q), simplified);
    }
  }
}
