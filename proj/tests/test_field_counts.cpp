#include <gtest/gtest.h>

#include "ascgf/conductor.hpp"
#include "ascgf/field_counts.hpp"
#include "ascgf/verification.hpp"

using namespace ascgf;

namespace {
AbelianPGroup G(const char* spec) { return AbelianPGroup::parse(spec); }
}  // namespace

TEST(FieldCounts, CyclicOfPrimeOrder) {
  const auto c3 = field_count_series(G("p=3;m=1"), 3, 6);
  EXPECT_EQ(c3[0], 2);  // surjections from Z/3 onto C_3
  EXPECT_EQ(c3[1], 3 * 8);
  for (std::uint64_t p : {2, 3, 5}) {
    const auto g = AbelianPGroup::cyclic(p, 1);
    const auto fields = field_count_series(g, p, 12);
    const auto asc = global_asc_gf(g, p).expand(12);
    EXPECT_EQ(fields[0], p - 1);
    for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(fields[n], Rational(p) * asc[n] - (n == 0 ? 1 : 0));
  }
}

TEST(FieldCounts, TrivialGroup) {
  EXPECT_EQ(field_count_series(AbelianPGroup::trivial(3), 3, 4), TruncatedSeries::one(4));
}

TEST(FieldCounts, NonNegativeIntegers) {
  for (std::uint64_t p : {2, 3}) {
    for (const auto& g : groups_up_to(p, p == 2 ? 4 : 3)) {
      for (const auto& c : field_count_series(g, p, 10).integer_coefficients()) EXPECT_GE(c, 0) << g.spec();
    }
  }
}

TEST(FieldCounts, MoebiusInversionRoundTrips) {
  // sum_{H <= G} #Sur(-, H) = #Hom(-, G) = |G| F_G.
  for (std::uint64_t p : {2, 3}) {
    for (const auto& g : groups_up_to(p, 3)) {
      const unsigned N = 8;
      const auto lattice = subgroup_lattice(g);
      TruncatedSeries total(N);
      for (const auto& h : lattice.subgroups()) total += field_count_series(h.type, p, N);
      EXPECT_EQ(total, global_asc_gf(g, p).expand(N) * Rational(g.order())) << g.spec();
    }
  }
}

TEST(FieldCounts, CombinationReproducesSeries) {
  const auto counts = field_counts(G("p=2;m=1,1"), 2, 10);
  TruncatedSeries rebuilt(10);
  std::size_t subgroups = 0;
  for (const auto& t : counts.combination) rebuilt += t.gf.expand(10) * Rational(t.weight);
  for (const auto& t : counts.combination) subgroups += t.subgroups;
  EXPECT_EQ(rebuilt, counts.series);
  EXPECT_GT(subgroups, 0u);
  LatticeOptions tight;
  tight.max_order = 4;
  EXPECT_THROW(field_counts(G("p=2;m=1,1"), 2, 4, tight), BoundExceeded);
}
