#include <algorithm>

#include "fixtures.hpp"
#include "gtest/gtest.h"
#include "oracle.hpp"
#include "radact/congruence.hpp"

namespace {

using fixtures::E2;
using fixtures::R2;
using fixtures::T1;
using radact::Congruence;
using radact::ElemSet;
using radact::FiniteAct;
using radact::parse_partition;

FiniteAct three_points() { return fixtures::trivial_points(T1(), 3); }

TEST(Congruence, PartitionTextRoundTrip) {
  const Congruence c = parse_partition("0 2 | 1 | 3", 4);
  EXPECT_EQ("0 2 | 1 | 3", c.to_string());
  EXPECT_EQ(3u, c.num_blocks());
  EXPECT_TRUE(c.related(0, 2));
  EXPECT_EQ(c, parse_partition("3 | 1 | 2 0", 4));
}

TEST(Congruence, ParseRejectsMalformedPartitions) {
  EXPECT_THROW(parse_partition("0 1", 3), radact::Error);
  EXPECT_THROW(parse_partition("0 1 | 1 2", 3), radact::Error);
  EXPECT_THROW(parse_partition("0 | x", 2), radact::Error);
}

TEST(Congruence, DiagonalAndTotal) {
  const FiniteAct theta = radact::trivial_act(T1());
  EXPECT_EQ(radact::diagonal(theta), radact::total(theta));
  const FiniteAct a = three_points();
  EXPECT_EQ(3u, radact::diagonal(a).num_blocks());
  for (const Congruence& c : radact::all_congruences(a)) {
    EXPECT_TRUE(radact::diagonal(a).leq(c));
    EXPECT_TRUE(c.leq(radact::total(a)));
  }
}

TEST(Congruence, GeneratedByPairs) {
  EXPECT_EQ(radact::diagonal(R2()), radact::generated_congruence(R2(), {}));
  const std::vector<std::pair<radact::Elem, radact::Elem>> pair = {{0, 1}};
  EXPECT_EQ(parse_partition("0 1 | 2", 3), radact::generated_congruence(three_points(), pair));
  EXPECT_EQ(radact::total(R2()), radact::generated_congruence(R2(), pair));
}

TEST(Congruence, MeetAndJoin) {
  const FiniteAct a = three_points();
  const Congruence x = parse_partition("0 1 | 2", 3);
  const Congruence y = parse_partition("0 | 1 2", 3);
  EXPECT_EQ(radact::diagonal(a), radact::meet(x, y));
  EXPECT_EQ(radact::diagonal(a), radact::meet(x, radact::diagonal(a)));
  EXPECT_EQ(radact::total(a), radact::join(a, x, radact::total(a)));
  EXPECT_EQ(radact::total(a), radact::join(a, x, y));
}

TEST(Congruence, ReesCongruences) {
  const FiniteAct a = R2();
  EXPECT_EQ(radact::diagonal(a), radact::rees_congruence(a, std::vector<radact::Subact>{}));
  EXPECT_EQ(radact::total(a), radact::rees_congruence(a, a.carrier()));
  EXPECT_TRUE(radact::is_rees(a, radact::total(a)));
  EXPECT_TRUE(radact::is_rees(a, radact::diagonal(a)));
  EXPECT_TRUE(radact::is_rees(three_points(), parse_partition("0 1 | 2", 3)));
}

TEST(Congruence, ReesRejectsOverlappingSystem) {
  const FiniteAct a = three_points();
  const std::vector<radact::Subact> sys = {{a, 0b011}, {a, 0b110}};
  try {
    radact::rees_congruence(a, sys);
    FAIL() << "expected NotDisjoint";
  } catch (const radact::Error& e) {
    EXPECT_EQ(radact::ErrorKind::NotDisjoint, e.kind());
  }
}

TEST(Congruence, ClassSystem) {
  EXPECT_TRUE(radact::class_system(R2(), radact::diagonal(R2())).blocks.empty());
  const radact::ClassSystem all = radact::class_system(R2(), radact::total(R2()));
  ASSERT_EQ(1u, all.blocks.size());
  EXPECT_EQ(R2().carrier(), all.blocks[0].members);
  const radact::ClassSystem s = radact::class_system(three_points(), parse_partition("0 1 | 2", 3));
  ASSERT_EQ(1u, s.blocks.size());
  EXPECT_EQ(ElemSet{0b011}, s.blocks[0].members);
}

TEST(Congruence, SmallestExtension) {
  const FiniteAct a = three_points();
  const radact::Subact b{a, 0b011};
  const FiniteAct local = radact::as_act(b).act;
  EXPECT_EQ(radact::diagonal(a), radact::smallest_extension(b, radact::diagonal(local)));
  EXPECT_EQ(radact::rees_congruence(a, b.members), radact::smallest_extension(b, radact::total(local)));
  const radact::Subact whole{a, a.carrier()};
  const Congruence c = parse_partition("0 | 1 2", 3);
  EXPECT_EQ(c, radact::smallest_extension(whole, c));
}

TEST(Congruence, LatticeSizes) {
  EXPECT_EQ(1u, radact::all_congruences(radact::trivial_act(T1())).size());
  EXPECT_EQ(2u, radact::all_congruences(fixtures::trivial_points(T1(), 2)).size());
  EXPECT_EQ(5u, radact::all_congruences(three_points()).size());
  EXPECT_EQ(15u, radact::all_congruences(fixtures::trivial_points(T1(), 4)).size());
}

TEST(Congruence, LatticeAboveBoundThrows) {
  const FiniteAct big = fixtures::trivial_points(T1(), 8);
  try {
    radact::all_congruences(big, 7);
    FAIL() << "expected SizeBound";
  } catch (const radact::Error& e) {
    EXPECT_EQ(radact::ErrorKind::SizeBound, e.kind());
  }
}

TEST(Congruence, LatticeMatchesBruteForceOnUniverse) {
  const radact::Universe& u = fixtures::standard_universe();
  for (std::size_t i = 0; i < u.num_monoids(); ++i) {
    for (const FiniteAct& a : u.acts(i)) {
      std::vector<oracle::Labels> expected = oracle::congruences(oracle::raw(a));
      std::vector<oracle::Labels> actual;
      for (const Congruence& c : radact::all_congruences(a)) actual.push_back(oracle::labels_of(c));
      std::sort(expected.begin(), expected.end());
      std::sort(actual.begin(), actual.end());
      EXPECT_EQ(expected, actual) << a.name();
    }
  }
}

TEST(Congruence, Essentiality) {
  EXPECT_TRUE(radact::is_essential(radact::trivial_act(T1()), radact::diagonal(radact::trivial_act(T1()))));
  const FiniteAct two = fixtures::trivial_points(T1(), 2);
  EXPECT_TRUE(radact::is_essential(two, radact::total(two)));
  EXPECT_FALSE(radact::is_essential(three_points(), parse_partition("0 1 | 2", 3)));
}

TEST(Congruence, Kernels) {
  EXPECT_EQ(radact::diagonal(R2()), radact::kernel(radact::identity_hom(R2())));
  const radact::ActHom to_zero = radact::make_hom(R2(), R2(), {1, 1});
  EXPECT_EQ(radact::total(R2()), radact::kernel(to_zero));
  const FiniteAct a = three_points();
  const std::vector<radact::Subact> sys = {{a, 0b011}};
  EXPECT_EQ(radact::rees_congruence(a, sys), radact::kernel(radact::rees_quotient(a, sys).projection));
}

TEST(Congruence, MaximalComplements) {
  const FiniteAct a = three_points();
  EXPECT_EQ(radact::total(a), radact::maximal_complement(a, radact::diagonal(a)));
  const FiniteAct two = fixtures::trivial_points(T1(), 2);
  EXPECT_EQ(radact::diagonal(two), radact::maximal_complement(two, radact::total(two)));
  const Congruence chi = parse_partition("0 1 | 2", 3);
  const std::vector<Congruence> all = radact::maximal_complements(a, chi);
  ASSERT_EQ(2u, all.size());
  EXPECT_NE(all.end(), std::find(all.begin(), all.end(), parse_partition("0 | 1 2", 3)));
  EXPECT_NE(all.end(), std::find(all.begin(), all.end(), parse_partition("0 2 | 1", 3)));
  EXPECT_EQ(*std::min_element(all.begin(), all.end()), radact::maximal_complement(a, chi));
  EXPECT_EQ(parse_partition("0 2 | 1", 3), radact::maximal_complement(a, chi));
}

TEST(Congruence, QuotientAndPreimage) {
  const FiniteAct a = three_points();
  const Congruence kappa = parse_partition("0 1 | 2", 3);
  const radact::Quotient q = radact::quotient(a, kappa);
  EXPECT_EQ(2u, q.act.size());
  EXPECT_EQ(radact::total(q.act), radact::quotient_congruence(q, radact::total(a)));
  EXPECT_EQ(kappa, radact::preimage(q.projection, radact::diagonal(q.act)));
}

}  // namespace
