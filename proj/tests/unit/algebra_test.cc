#include <algorithm>
#include <array>

#include "fixtures.hpp"
#include "gtest/gtest.h"
#include "oracle.hpp"
#include "radact/act.hpp"
#include "radact/congruence.hpp"
#include "radact/monoid.hpp"

namespace {

using fixtures::E2;
using fixtures::R2;
using fixtures::T1;
using radact::Elem;
using radact::ElemSet;
using radact::Error;
using radact::ErrorKind;
using radact::FiniteAct;
using radact::FiniteMonoid;

ErrorKind monoid_error(const std::vector<std::vector<int>>& table, int identity) {
  try {
    FiniteMonoid::validate(table, identity);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a validation error";
  return ErrorKind::InvalidArgument;
}

TEST(FiniteMonoid, IdempotentPairIsValid) {
  const FiniteMonoid m = E2();
  EXPECT_EQ(2u, m.size());
  EXPECT_EQ(0, m.identity());
  EXPECT_EQ(1, m.mul(1, 1));
  EXPECT_EQ(1, m.mul(0, 1));
}

TEST(FiniteMonoid, RejectsBadIdentity) {
  EXPECT_EQ(ErrorKind::BadIdentity, monoid_error({{0, 1}, {1, 1}}, 1));
}

TEST(FiniteMonoid, RejectsNonAssociativeTable) {
  // 1·(1·2) = 1·0 = 1 but (1·1)·2 = 2·2 = 2.
  EXPECT_EQ(ErrorKind::NotAssociative, monoid_error({{0, 1, 2}, {1, 2, 0}, {2, 0, 2}}, 0));
}

TEST(FiniteMonoid, ValidationAgreesWithBruteForceOnAllOrderThreeTables) {
  std::size_t accepted = 0;
  for (int cell = 0; cell < 81; ++cell) {
    std::vector<std::vector<int>> t = {{0, 1, 2}, {1, 0, 0}, {2, 0, 0}};
    int code = cell;
    for (int x = 1; x < 3; ++x) {
      for (int y = 1; y < 3; ++y) {
        t[x][y] = code % 3;
        code /= 3;
      }
    }
    bool ok = true;
    try {
      FiniteMonoid::validate(t, 0);
    } catch (const Error&) {
      ok = false;
    }
    EXPECT_EQ(oracle::is_monoid(t, 0), ok) << "cell code " << cell;
    accepted += ok ? 1 : 0;
  }
  EXPECT_EQ(11u, accepted);
}

TEST(FiniteMonoid, EnumerationCountsMatchBruteForce) {
  const std::array<std::size_t, 3> frozen = {1, 2, 7};
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(frozen[n - 1], radact::enumerate_monoids(n).size());
    EXPECT_EQ(oracle::count_monoids(n), radact::enumerate_monoids(n).size());
  }
}

TEST(FiniteMonoid, CanonicalFormIdentifiesIsomorphicTables) {
  // E2 with the labels swapped: identity at index 1.
  const FiniteMonoid swapped = FiniteMonoid::validate({{0, 0}, {0, 1}}, 1);
  EXPECT_TRUE(radact::monoids_isomorphic(E2(), swapped));
  EXPECT_EQ(radact::canonical_monoid(E2()), radact::canonical_monoid(swapped));
  EXPECT_FALSE(radact::monoids_isomorphic(E2(), fixtures::Z2()));
}

TEST(FiniteAct, LeftRegularActOfIdempotentPairIsValid) {
  const FiniteAct a = R2();
  EXPECT_EQ(2u, a.size());
  EXPECT_EQ(1, a.act(1, 0));
  EXPECT_EQ(radact::left_regular_act(E2()), FiniteAct::trusted(E2(), 2, {0, 1, 1, 1}));
}

TEST(FiniteAct, RejectsActionBreakingCompatibility) {
  try {
    FiniteAct::validate(E2(), {{0, 1}, {1, 0}});
    FAIL() << "expected AssocAxiom";
  } catch (const Error& e) {
    EXPECT_EQ(ErrorKind::AssocAxiom, e.kind());
  }
}

TEST(FiniteAct, RejectsIdentityRowThatMoves) {
  try {
    FiniteAct::validate(E2(), {{1, 1}, {1, 1}});
    FAIL() << "expected IdentityAxiom";
  } catch (const Error& e) {
    EXPECT_EQ(ErrorKind::IdentityAxiom, e.kind());
  }
}

TEST(FiniteAct, RejectsMisshapenTable) {
  try {
    FiniteAct::validate(E2(), {{0, 1}});
    FAIL() << "expected BadTable";
  } catch (const Error& e) {
    EXPECT_EQ(ErrorKind::BadTable, e.kind());
  }
}

TEST(FiniteAct, ValidationAgreesWithBruteForceOverIdempotentPair) {
  const oracle::RawMonoid m = oracle::raw(E2());
  for (int k = 1; k <= 3; ++k) {
    int total = 1;
    for (int i = 0; i < k; ++i) total *= k;
    for (int code = 0; code < total; ++code) {
      std::vector<std::vector<int>> rows(2, std::vector<int>(k));
      int c = code;
      for (int x = 0; x < k; ++x) {
        rows[0][x] = x;
        rows[1][x] = c % k;
        c /= k;
      }
      bool ok = true;
      try {
        FiniteAct::validate(E2(), rows);
      } catch (const Error&) {
        ok = false;
      }
      EXPECT_EQ(oracle::is_act(m, rows), ok);
    }
  }
}

TEST(FiniteAct, ZerosOfRegularAct) {
  EXPECT_EQ(radact::singleton(1), radact::zeros(R2()));
  const oracle::RawAct raw = oracle::raw(R2());
  EXPECT_EQ(std::vector<int>{1}, oracle::zeros(raw));
}

TEST(FiniteAct, CyclicSubacts) {
  EXPECT_EQ(ElemSet{0b11}, radact::cyclic_subact(R2(), 0).members);
  EXPECT_EQ(ElemSet{0b10}, radact::cyclic_subact(R2(), 1).members);
  const FiniteAct points = fixtures::trivial_points(T1(), 3);
  for (Elem a = 0; a < 3; ++a) EXPECT_EQ(radact::singleton(a), radact::cyclic_subact(points, a).members);
}

TEST(FiniteAct, SubactsOfRegularAct) {
  const std::vector<radact::Subact> subs = radact::subacts(R2());
  ASSERT_EQ(2u, subs.size());
  EXPECT_EQ(ElemSet{0b10}, subs[0].members);
  EXPECT_EQ(ElemSet{0b11}, subs[1].members);
  EXPECT_EQ(oracle::subacts(oracle::raw(R2())).size(), subs.size());
}

TEST(FiniteAct, MakeSubactRejectsOpenSet) {
  EXPECT_THROW(radact::make_subact(R2(), 0b01), Error);
  EXPECT_THROW(radact::make_subact(R2(), 0), Error);
}

TEST(FiniteAct, AsActRelabelsMembers) {
  const radact::EmbeddedSubact e = radact::as_act(radact::Subact{R2(), 0b10});
  EXPECT_EQ(1u, e.act.size());
  EXPECT_EQ(std::vector<Elem>{1}, e.inclusion.map);
}

TEST(Quotient, ReesBySingletonIsRelabelling) {
  const radact::Quotient q = radact::rees_quotient(R2(), radact::Subact{R2(), 0b10});
  EXPECT_TRUE(radact::find_isomorphism(q.act, R2()).has_value());
}

TEST(Quotient, DiagonalAndTotal) {
  const FiniteAct a = R2();
  EXPECT_TRUE(radact::find_isomorphism(radact::quotient(a, radact::diagonal(a)).act, a));
  EXPECT_EQ(1u, radact::quotient(a, radact::total(a)).act.size());
}

TEST(Coproduct, TwoTrivialActsHaveTwoZeros) {
  const FiniteAct theta = radact::trivial_act(E2());
  const radact::Coproduct c = radact::coproduct(theta, theta);
  EXPECT_EQ(2u, c.act.size());
  EXPECT_EQ(ElemSet{0b11}, radact::zeros(c.act));
}

TEST(Coproduct, SizesAdd) {
  const FiniteAct theta = radact::trivial_act(E2());
  EXPECT_EQ(3u, radact::coproduct(R2(), theta).act.size());
}

TEST(Coproduct, TwoRegularActsHaveTwoZeros) {
  const radact::Coproduct c = radact::coproduct(R2(), R2());
  EXPECT_EQ(2u, radact::cardinality(radact::zeros(c.act)));
  EXPECT_EQ(2u, oracle::zeros(oracle::raw(c.act)).size());
}

TEST(Product, Basics) {
  const FiniteAct a = R2();
  const std::vector<FiniteAct> one = {a};
  EXPECT_EQ(a, radact::product(one));
  const std::vector<FiniteAct> with_theta = {radact::trivial_act(E2()), a};
  EXPECT_TRUE(radact::find_isomorphism(radact::product(with_theta), a).has_value());
  const std::vector<FiniteAct> square = {a, a};
  const FiniteAct p = radact::product(square);
  EXPECT_EQ(4u, p.size());
  EXPECT_EQ(1u, radact::cardinality(radact::zeros(p)));
  EXPECT_EQ(1u, oracle::zeros(oracle::raw(p)).size());
}

TEST(Isomorphism, FindsRelabelling) {
  // R2 with 1 and e swapped.
  const FiniteAct relabelled = FiniteAct::validate(E2(), {{0, 1}, {0, 0}});
  const std::optional<radact::ActHom> iso = radact::find_isomorphism(R2(), relabelled);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ((std::vector<Elem>{1, 0}), iso->map);
  EXPECT_TRUE(radact::find_isomorphism(R2(), R2()).has_value());
  EXPECT_FALSE(radact::find_isomorphism(R2(), radact::trivial_act(E2())).has_value());
}

TEST(Homs, IntoAndOutOfTrivialAct) {
  const FiniteAct theta = radact::trivial_act(E2());
  const FiniteAct two = radact::coproduct(R2(), R2()).act;
  EXPECT_EQ(radact::cardinality(radact::zeros(two)), radact::all_homs(theta, two).size());
  EXPECT_EQ(1u, radact::all_homs(two, theta).size());
}

TEST(Homs, RegularActEndomorphisms) {
  EXPECT_EQ(2u, radact::all_homs(R2(), R2()).size());
  EXPECT_EQ(oracle::homs(oracle::raw(R2()), oracle::raw(R2())).size(),
            radact::all_homs(R2(), R2()).size());
}

TEST(Homs, MakeHomRejectsNonEquivariantMap) {
  try {
    radact::make_hom(R2(), R2(), {1, 0});
    FAIL() << "expected NotEquivariant";
  } catch (const Error& e) {
    EXPECT_EQ(ErrorKind::NotEquivariant, e.kind());
  }
}

TEST(Homs, ExtendPartialMap) {
  std::vector<Elem> partial = {radact::kUnset, 1};
  const auto ext = radact::extend_partial_hom(R2(), R2(), partial);
  ASSERT_TRUE(ext.has_value());
  EXPECT_EQ(1, (*ext)[1]);
  EXPECT_EQ(2u, radact::count_extensions(R2(), R2(), partial, 10));
}

TEST(Homs, RequireSameMonoid) {
  EXPECT_THROW(radact::require_same_monoid(R2(), radact::trivial_act(T1())), Error);
}

}  // namespace
