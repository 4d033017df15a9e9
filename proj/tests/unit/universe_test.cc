#include <array>
#include <map>

#include "fixtures.hpp"
#include "gtest/gtest.h"
#include "oracle.hpp"
#include "radact/universe.hpp"

namespace {

using radact::Bounds;
using radact::FiniteAct;
using radact::Universe;

// Acts of size 1..4 per monoid of the default universe.
const std::map<std::string, std::array<std::size_t, 4>> kActCounts = {
    {"M1.0", {1, 1, 1, 1}}, {"M2.0", {1, 2, 2, 3}}, {"M2.1", {1, 2, 3, 5}},
    {"M3.0", {1, 2, 4, 7}}, {"M3.1", {1, 2, 4, 8}}, {"M3.2", {1, 3, 7, 17}},
    {"M3.3", {1, 3, 5, 10}}, {"M3.4", {1, 2, 4, 10}}, {"M3.5", {1, 3, 5, 11}},
    {"M3.6", {1, 1, 2, 2}},
};

TEST(Universe, DefaultShape) {
  const Universe& u = fixtures::standard_universe();
  EXPECT_EQ(10u, u.num_monoids());
  EXPECT_EQ(142u, u.num_acts());
  ASSERT_EQ(4u, u.radicals().size());
  EXPECT_EQ("delta", u.radicals()[0].name());
  EXPECT_EQ("nabla", u.radicals()[1].name());
  EXPECT_EQ("rG", u.radicals()[2].name());
  EXPECT_EQ("tL_rG", u.radicals()[3].name());
}

TEST(Universe, ActCountsMatchFrozenTableAndBruteForce) {
  const Universe& u = fixtures::standard_universe();
  for (std::size_t i = 0; i < u.num_monoids(); ++i) {
    const std::string& name = u.monoid(i).name();
    ASSERT_EQ(1u, kActCounts.count(name)) << name;
    std::array<std::size_t, 4> by_size{};
    for (const FiniteAct& a : u.acts(i)) ++by_size[a.size() - 1];
    EXPECT_EQ(kActCounts.at(name), by_size) << name;
    const oracle::RawMonoid m = oracle::raw(u.monoid(i));
    for (int k = 1; k <= 4; ++k) {
      EXPECT_EQ(oracle::count_acts(m, k), by_size[k - 1]) << name << " size " << k;
    }
  }
}

TEST(Universe, MembersArePairwiseNonIsomorphic) {
  const Universe& u = fixtures::standard_universe();
  for (std::size_t i = 0; i < u.num_monoids(); ++i) {
    const std::vector<FiniteAct>& acts = u.acts(i);
    for (std::size_t x = 0; x < acts.size(); ++x) {
      for (std::size_t y = x + 1; y < acts.size(); ++y) {
        EXPECT_FALSE(oracle::isomorphic(oracle::raw(acts[x]), oracle::raw(acts[y])))
            << acts[x].name() << " " << acts[y].name();
      }
    }
  }
}

TEST(Universe, SmallBounds) {
  const Universe one(Bounds{1, 1, 1});
  EXPECT_EQ(1u, one.num_monoids());
  EXPECT_EQ(1u, one.num_acts());
  const Universe two(Bounds{2, 2, 2});
  EXPECT_EQ(3u, two.num_monoids());
  EXPECT_EQ(2u, two.acts(0).size());
}

TEST(Universe, OrderTwoMonoidsAreIdempotentPairAndGroup) {
  const std::vector<radact::FiniteMonoid> two = radact::enumerate_monoids(2);
  ASSERT_EQ(2u, two.size());
  bool has_e2 = false;
  bool has_z2 = false;
  for (const auto& m : two) {
    has_e2 = has_e2 || radact::monoids_isomorphic(m, fixtures::E2());
    has_z2 = has_z2 || radact::monoids_isomorphic(m, fixtures::Z2());
  }
  EXPECT_TRUE(has_e2 && has_z2);
}

TEST(Universe, LookupByIsomorphism) {
  const Universe& u = fixtures::standard_universe();
  const FiniteAct relabelled = FiniteAct::validate(fixtures::E2(), {{0, 1}, {0, 0}});
  const std::optional<FiniteAct> member = u.lookup(relabelled);
  ASSERT_TRUE(member.has_value());
  EXPECT_TRUE(radact::find_isomorphism(*member, fixtures::R2()).has_value());
  const std::optional<radact::ActHom> iso = u.iso_to_member(relabelled);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(iso->injective() && iso->surjective());
  EXPECT_FALSE(u.lookup(fixtures::trivial_points(fixtures::T1(), 5)).has_value());
}

TEST(Universe, NamesResolve) {
  const Universe& u = fixtures::standard_universe();
  ASSERT_TRUE(u.monoid_by_name("M2.0").has_value());
  const std::optional<FiniteAct> a = u.act_by_name("M2.0/A2.1");
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ("M2.0/A2.1", a->name());
  EXPECT_FALSE(u.act_by_name("M9.9/A1.0").has_value());
}

TEST(Universe, EnumerationIsDeterministic) {
  const Universe a(Bounds{3, 3, 4});
  const Universe b(Bounds{3, 3, 4});
  ASSERT_EQ(a.num_monoids(), b.num_monoids());
  for (std::size_t i = 0; i < a.num_monoids(); ++i) {
    ASSERT_EQ(a.acts(i).size(), b.acts(i).size());
    for (std::size_t k = 0; k < a.acts(i).size(); ++k) EXPECT_EQ(a.acts(i)[k], b.acts(i)[k]);
  }
}

}  // namespace
