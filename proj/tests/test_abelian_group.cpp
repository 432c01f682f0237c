#include <gtest/gtest.h>

#include "ascgf/abelian_group.hpp"
#include "ascgf/verification.hpp"
#include "oracles.hpp"

using namespace ascgf;

namespace {

AbelianPGroup G(const char* spec) { return AbelianPGroup::parse(spec); }

// mu(H, G) = (-1)^k p^{k(k-1)/2} if G/H is elementary abelian of rank k, else 0.
long moebius_oracle(std::uint64_t p, const AbelianPGroup& ambient, const Subgroup& h) {
  // G/H is elementary abelian iff pG <= H; its rank is log_p [G:H].
  const ElementTable table(ambient, 1 << 20);
  for (std::size_t x = 0; x < table.size(); ++x) {
    std::size_t px = 0;
    for (std::uint64_t i = 0; i < p; ++i) px = table.add(px, x);
    if (!h.contains(px)) return 0;
  }
  std::size_t index = table.size() / h.order;
  long k = 0;
  while (index > 1) {
    index /= p;
    ++k;
  }
  long value = k % 2 == 0 ? 1 : -1;
  for (long i = 0; i < k * (k - 1) / 2; ++i) value *= static_cast<long>(p);
  return value;
}

}  // namespace

TEST(AbelianPGroup, ParsesAndEchoesCanonically) {
  const auto g = G("p=3; m=1,0,2,0");
  EXPECT_EQ(g.prime(), 3u);
  EXPECT_EQ(g.multiplicities(), (std::vector<unsigned>{1, 0, 2}));
  EXPECT_EQ(g.spec(), "p=3;m=1,0,2");
  EXPECT_EQ(g.name(), "C3 x C27^2");
  EXPECT_EQ(g.order(), ipow(3, 7));
  EXPECT_EQ(g.exponent_log(), 3u);
  EXPECT_EQ(g.rank(), 3u);

  const auto trivial = G("p=3;m=");
  EXPECT_TRUE(trivial.is_trivial());
  EXPECT_EQ(trivial.spec(), "p=3;m=");
  EXPECT_EQ(trivial.order(), 1);
}

TEST(AbelianPGroup, RejectsMalformedSpecs) {
  for (const char* bad : {"p=4;m=1", "p=3", "q=3;m=1", "p=3;m=1,x", "p=3;n=1", "p=;m=1"}) {
    EXPECT_THROW(G(bad), std::invalid_argument) << bad;
  }
  try {
    G("p=3;m=a");
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("expected p=<prime>"), std::string::npos);
  }
}

TEST(InvariantSequence, SmallExamples) {
  const auto c9 = invariant_sequence(G("p=3;m=0,1"));
  EXPECT_EQ(c9.c, (std::vector<Rational>{0, 1, 1, Rational(8, 9)}));
  EXPECT_EQ(c9.a, Rational(8, 9));
  EXPECT_EQ(c9.a_prime, 2u);

  const auto c3sq = invariant_sequence(G("p=3;m=2"));
  EXPECT_EQ(c3sq.c, (std::vector<Rational>{0, 2, Rational(4, 3)}));
  EXPECT_EQ(c3sq.a, Rational(4, 3));
  EXPECT_EQ(c3sq.a_prime, 3u);

  const auto trivial = invariant_sequence(AbelianPGroup::trivial(5));
  EXPECT_EQ(trivial.c, (std::vector<Rational>{0}));
  EXPECT_EQ(trivial.a, 0);
  EXPECT_EQ(trivial.a_prime, 1u);
}

TEST(InvariantSequence, RecursionMatchesClosedFormInR) {
  for (std::uint64_t p : {2, 3, 5}) {
    for (const auto& g : groups_up_to(p, 6)) {
      if (g.is_trivial()) continue;
      const auto inv = invariant_sequence(g);
      const unsigned t = g.exponent_log();
      ASSERT_EQ(inv.c.size(), t + 2) << g.spec();
      ASSERT_EQ(inv.r.size(), t);
      // r_i from element counts: |G[p^i]| / |G[p^{i-1}]| = p^{r_i}.
      for (unsigned i = 1; i <= t; ++i) {
        const auto ratio = oracle::killed_count(g, to_u64(ipow(p, i))) / oracle::killed_count(g, to_u64(ipow(p, i - 1)));
        EXPECT_EQ(ipow(p, inv.r[i - 1]), ratio) << g.spec();
        if (i > 1) EXPECT_LE(inv.r[i - 1], inv.r[i - 2]);
      }
      for (unsigned i = 1; i <= t + 1; ++i) {
        Rational closed = 0;
        for (unsigned j = 1; j + 1 <= i; ++j) closed += Rational((p - 1) * inv.r[j - 1]) / Rational(ipow(p, j));
        if (i <= t) closed += Rational(inv.r[i - 1]) / Rational(ipow(p, i - 1));
        EXPECT_EQ(inv.c[i], closed) << g.spec() << " i=" << i;
      }
      for (unsigned i = 0; i <= t + 1; ++i) {
        EXPECT_TRUE(is_integer(inv.c[i] * Rational(ipow(p, i)))) << g.spec();
      }
      EXPECT_EQ(inv.a, inv.c.back());
      EXPECT_EQ(inv.a_prime, 1 + g.rank());
      EXPECT_EQ(inv.c_at(t + 5), inv.a);
    }
  }
}

TEST(TorsionSize, Examples) {
  EXPECT_EQ(torsion_size(G("p=3;m=0,1"), 1), oracle::killed_count(G("p=3;m=0,1"), 3));
  EXPECT_EQ(torsion_size(G("p=3;m=0,1"), 1), 3);
  EXPECT_EQ(torsion_size(G("p=3;m=1,1"), 2), oracle::killed_count(G("p=3;m=1,1"), 9));
  EXPECT_EQ(torsion_size(G("p=3;m=1,1"), 2), 27);
  EXPECT_EQ(torsion_size(G("p=5;m=1,2"), 0), 1);
}

TEST(TorsionSize, MatchesElementCounting) {
  for (std::uint64_t p : {2, 3}) {
    for (const auto& g : groups_up_to(p, p == 2 ? 9 : 6)) {
      for (unsigned r = 0; r <= g.exponent_log() + 1; ++r) {
        EXPECT_EQ(torsion_size(g, r), oracle::killed_count(g, to_u64(ipow(p, r)))) << g.spec() << " r=" << r;
      }
    }
  }
}

TEST(Tau, Examples) {
  EXPECT_EQ(tau(G("p=3;m=1"), 3), 2u);
  EXPECT_EQ(tau(G("p=3;m=0,1"), 10), 9u);
  EXPECT_EQ(tau(G("p=2;m=1,1"), 0), 0u);
  // Q^tau(k) against the element-level count on U^1/U^{k+1}.
  EXPECT_EQ(ipow(3, tau(G("p=3;m=1"), 3)), hom_count_bruteforce(unit_quotient(3, 1, 3).factors(), G("p=3;m=1")));
  EXPECT_EQ(ipow(3, tau(G("p=3;m=0,1"), 10)), hom_count_bruteforce(unit_quotient(3, 1, 10).factors(), G("p=3;m=0,1")));
}

TEST(Tau, EventuallyArithmetic) {
  for (std::uint64_t p : {2, 3}) {
    for (const auto& g : groups_up_to(p, 4)) {
      const auto inv = invariant_sequence(g);
      const std::uint64_t pt = to_u64(ipow(p, g.exponent_log()));
      const BigInt step = to_integer(inv.a * Rational(pt), "a p^t");
      std::uint64_t prev = 0;
      for (std::uint64_t k = 0; k <= 50; ++k) {
        EXPECT_EQ(BigInt(static_cast<unsigned long>(tau(g, k + pt) - tau(g, k))), step) << g.spec();
        EXPECT_GE(tau(g, k), prev);
        prev = tau(g, k);
      }
    }
  }
}

TEST(HomCount, Examples) {
  EXPECT_EQ(hom_count({3, {1}}, G("p=3;m=0,1")), 3);
  EXPECT_EQ(hom_count({3, {}}, G("p=3;m=0,1")), 1);
  EXPECT_EQ(hom_count({3, {1, 1}}, G("p=3;m=2")), 81);
  EXPECT_EQ(hom_count({3, {1, 1}}, G("p=3;m=2")), hom_count_bruteforce({3, {1, 1}}, G("p=3;m=2")));
  EXPECT_THROW(hom_count({2, {1}}, G("p=3;m=1")), std::invalid_argument);
}

TEST(SubgroupLattice, Examples) {
  const auto c3 = subgroup_lattice(G("p=3;m=1"));
  ASSERT_EQ(c3.size(), 2u);
  EXPECT_EQ(c3.moebius(c3.trivial_index()), -1);
  EXPECT_EQ(c3.moebius(c3.whole_index()), 1);

  // Lines in a 2-dimensional space over F_3: (9 - 1)/(3 - 1) = 4.
  const auto c3sq = subgroup_lattice(G("p=3;m=2"));
  EXPECT_EQ(c3sq.size(), 1u + (9 - 1) / (3 - 1) + 1u);
  EXPECT_EQ(c3sq.moebius(c3sq.trivial_index()), 3);

  const auto c9 = subgroup_lattice(G("p=3;m=0,1"));
  EXPECT_EQ(c9.size(), 3u);
  EXPECT_EQ(c9.moebius(c9.trivial_index()), 0);

  const auto trivial = subgroup_lattice(AbelianPGroup::trivial(2));
  EXPECT_EQ(trivial.size(), 1u);
  EXPECT_EQ(trivial.moebius(0), 1);
}

TEST(SubgroupLattice, MoebiusAndTypesAgreeWithOracles) {
  for (std::uint64_t p : {2, 3}) {
    for (const auto& g : groups_up_to(p, p == 2 ? 5 : 4)) {
      const auto lat = subgroup_lattice(g);
      EXPECT_EQ(lat.subgroup(lat.whole_index()).order, oracle::elements(oracle::moduli(g)).size());
      for (std::size_t i = 0; i < lat.size(); ++i) {
        const auto& h = lat.subgroup(i);
        EXPECT_EQ(lat.moebius(i), moebius_oracle(p, g, h)) << g.spec() << " subgroup " << i;
        EXPECT_EQ(h.type.order(), BigInt(static_cast<unsigned long>(h.order)));
        // sum_{H <= K <= G} mu(K, G) = 0 for proper H.
        long sum = 0;
        for (std::size_t k = 0; k < lat.size(); ++k) {
          if (lat.is_subgroup_of(i, k)) sum += lat.moebius(k);
        }
        EXPECT_EQ(sum, i == lat.whole_index() ? 1 : 0) << g.spec();
      }
    }
  }
}

TEST(SubgroupLattice, CountsSubgroupsOfElementaryAbelianGroups) {
  // Gaussian binomials: F_2^3 has 1 + 7 + 7 + 1 subgroups, F_2^4 has 1 + 15 + 35 + 15 + 1.
  EXPECT_EQ(subgroup_lattice(G("p=2;m=3")).size(), 16u);
  EXPECT_EQ(subgroup_lattice(G("p=2;m=4")).size(), 67u);
}

TEST(SubgroupLattice, BoundIsEnforced) {
  EXPECT_THROW(subgroup_lattice(G("p=2;m=7")), BoundExceeded);
  LatticeOptions small;
  small.max_order = 8;
  EXPECT_THROW(subgroup_lattice(G("p=2;m=4"), small), BoundExceeded);
  try {
    subgroup_lattice(G("p=2;m=4"), small);
  } catch (const BoundExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("8"), std::string::npos);
  }
}
