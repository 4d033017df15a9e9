#include <sstream>

#include "fixtures.hpp"
#include "gtest/gtest.h"
#include "radact/catalog.hpp"

namespace {

using radact::Catalog;
using radact::FiniteAct;
using radact::FiniteMonoid;
using radact::ParseError;

constexpr const char* kT1 = "monoid T1\nelements 1\nidentity 0\ntable\n0\n";
constexpr const char* kE2 =
    "# idempotent pair\n"
    "monoid E2\n"
    "elements 2\n"
    "identity 0   # the unit\n"
    "table\n"
    "0 1\n"
    "\n"
    "1 1\n";

FiniteMonoid parse_monoid_text(const std::string& text) {
  std::istringstream in(text);
  return radact::parse_monoid(in, "test.monoid");
}

std::optional<FiniteMonoid> resolve_e2(const std::string& name) {
  if (name == "E2") return fixtures::E2();
  return std::nullopt;
}

ParseError parse_error(const std::string& text) {
  try {
    parse_monoid_text(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected ParseError";
  return ParseError("", 0, 0, "");
}

TEST(CatalogParse, TrivialMonoid) {
  const FiniteMonoid m = parse_monoid_text(kT1);
  EXPECT_EQ("T1", m.name());
  EXPECT_EQ(fixtures::T1(), m);
}

TEST(CatalogParse, IdempotentPairWithCommentsAndBlankLines) {
  const FiniteMonoid m = parse_monoid_text(kE2);
  EXPECT_EQ("E2", m.name());
  EXPECT_EQ(fixtures::E2(), m);
}

TEST(CatalogParse, TruncatedTable) {
  const ParseError e = parse_error("monoid E2\nelements 2\nidentity 0\ntable\n0 1\n");
  EXPECT_EQ(6u, e.line());
  EXPECT_EQ(1u, e.column());
  EXPECT_EQ("test.monoid", e.source());
}

TEST(CatalogParse, ShortRowReportsColumn) {
  const ParseError e = parse_error("monoid E2\nelements 2\nidentity 0\ntable\n0 1\n1\n");
  EXPECT_EQ(6u, e.line());
  EXPECT_EQ(2u, e.column());
}

TEST(CatalogParse, BadKeywordAndNumber) {
  EXPECT_EQ(1u, parse_error("monoi E2\n").line());
  const ParseError e = parse_error("monoid E2\nelements two\n");
  EXPECT_EQ(2u, e.line());
  EXPECT_EQ(10u, e.column());
  const std::string msg = e.what();
  EXPECT_EQ(0u, msg.find("test.monoid:2:10: expected"));
}

TEST(CatalogParse, TrailingContent) {
  EXPECT_EQ(6u, parse_error(std::string(kT1) + "extra\n").line());
}

TEST(CatalogParse, ValidationErrorCarriesPosition) {
  std::istringstream in("monoid X\nelements 2\nidentity 1\ntable\n0 1\n1 1\n");
  try {
    radact::parse_monoid(in, "x.monoid");
    FAIL() << "expected BadIdentity";
  } catch (const radact::Error& e) {
    EXPECT_EQ(radact::ErrorKind::BadIdentity, e.kind());
    EXPECT_EQ(0u, std::string(e.what()).find("x.monoid:5:"));
  }
}

TEST(CatalogParse, ActOverResolvedMonoid) {
  std::istringstream in("act R2 over E2\nelements 2\naction\n0 1\n1 1\n");
  const FiniteAct a = radact::parse_act(in, resolve_e2, "r2.act");
  EXPECT_EQ(fixtures::R2(), a);
  EXPECT_EQ("R2", a.name());
}

TEST(CatalogParse, ActWithUnknownMonoid) {
  std::istringstream in("act R2 over Q7\nelements 2\naction\n0 1\n1 1\n");
  try {
    radact::parse_act(in, resolve_e2, "r2.act");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(1u, e.line());
    EXPECT_EQ(13u, e.column());
  }
}

TEST(CatalogParse, ActBreakingCompatibility) {
  std::istringstream in("act bad over E2\nelements 2\naction\n0 1\n1 0\n");
  try {
    radact::parse_act(in, resolve_e2, "bad.act");
    FAIL() << "expected AssocAxiom";
  } catch (const radact::Error& e) {
    EXPECT_EQ(radact::ErrorKind::AssocAxiom, e.kind());
  }
}

TEST(CatalogParse, RadicalTable) {
  const radact::ActResolver acts = [](const std::string& name) -> std::optional<FiniteAct> {
    if (name == "R2") return fixtures::R2();
    return std::nullopt;
  };
  std::istringstream in("radical flat extensional\nact R2 partition 0 1\n");
  const radact::Radical r = radact::parse_radical_table(in, acts, "flat.radical");
  EXPECT_EQ("flat", r.name());
  EXPECT_EQ(radact::total(fixtures::R2()), r(fixtures::R2()));
  std::istringstream bad("radical flat extensional\nact R2 partition 0 | 1 1\n");
  EXPECT_THROW(radact::parse_radical_table(bad, acts, "bad.radical"), ParseError);
}

TEST(CatalogParse, RadicalTableRejectsNonCongruence) {
  const radact::ActResolver acts = [](const std::string&) -> std::optional<FiniteAct> {
    return FiniteAct::validate(fixtures::E2(), {{0, 1, 2}, {1, 1, 2}});
  };
  std::istringstream in("radical r extensional\nact A partition 0 2 | 1\n");
  try {
    radact::parse_radical_table(in, acts, "r.radical");
    FAIL() << "expected InvalidArgument";
  } catch (const radact::Error& e) {
    EXPECT_EQ(radact::ErrorKind::InvalidArgument, e.kind());
    EXPECT_EQ(0u, std::string(e.what()).find("r.radical:2:"));
  }
}

TEST(CatalogParse, DetectKind) {
  std::istringstream m(kE2);
  EXPECT_EQ(radact::CatalogKind::Monoid, radact::detect_kind(m));
  std::istringstream a("act A over E2\n");
  EXPECT_EQ(radact::CatalogKind::Act, radact::detect_kind(a));
  std::istringstream r("# c\nradical r extensional\n");
  EXPECT_EQ(radact::CatalogKind::RadicalTable, radact::detect_kind(r));
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(radact::detect_kind(empty), ParseError);
}

TEST(CatalogRoundTrip, EveryUniverseMonoidAndAct) {
  const radact::Universe& u = fixtures::standard_universe();
  for (std::size_t i = 0; i < u.num_monoids(); ++i) {
    const FiniteMonoid& m = u.monoid(i);
    std::istringstream min(radact::print_monoid(m));
    const FiniteMonoid back = radact::parse_monoid(min);
    EXPECT_EQ(m, back);
    EXPECT_EQ(m.name(), back.name());
    const radact::MonoidResolver resolve = [&](const std::string&) { return std::optional(m); };
    for (const FiniteAct& a : u.acts(i)) {
      const std::string text = radact::print_act(a);
      std::istringstream ain(text);
      const FiniteAct parsed = radact::parse_act(ain, resolve);
      EXPECT_EQ(a, parsed);
      EXPECT_EQ(text, radact::print_act(parsed));
    }
  }
}

TEST(CatalogRoundTrip, RadicalTable) {
  const FiniteAct a = FiniteAct::validate(fixtures::E2(), {{0, 1, 2}, {1, 1, 2}}, "A");
  const std::vector<std::pair<FiniteAct, radact::Congruence>> entries = {
      {fixtures::R2(), radact::total(fixtures::R2())},
      {a, radact::parse_partition("0 1 | 2", 3)}};
  const std::string text = radact::print_radical_table("t", entries);
  EXPECT_EQ("radical t extensional\nact R2 partition 0 1\nact A partition 0 1 | 2\n", text);
  const radact::ActResolver acts = [&](const std::string& n) -> std::optional<FiniteAct> {
    if (n == "R2") return fixtures::R2();
    if (n == "A") return a;
    return std::nullopt;
  };
  std::istringstream in(text);
  const radact::Radical r = radact::parse_radical_table(in, acts);
  for (const auto& [act, c] : entries) EXPECT_EQ(c, r(act));
}

TEST(Catalog, LoadsSeedDirectory) {
  Catalog cat;
  cat.load_dir(RADACT_CATALOG_DIR);
  ASSERT_TRUE(cat.monoid("E2").has_value());
  EXPECT_EQ(fixtures::E2(), *cat.monoid("E2"));
  EXPECT_EQ(fixtures::T1(), *cat.monoid("T1"));
  EXPECT_EQ(fixtures::Z2(), *cat.monoid("Z2"));
  ASSERT_TRUE(cat.act("R2").has_value());
  EXPECT_EQ(fixtures::R2(), *cat.act("R2"));
  ASSERT_EQ(1u, cat.radicals().size());
  EXPECT_EQ("collapse", cat.radicals()[0].name());
  EXPECT_FALSE(cat.act("missing").has_value());
}

TEST(Catalog, FallbackResolvers) {
  Catalog cat;
  cat.fallback_monoids = resolve_e2;
  EXPECT_TRUE(cat.monoid("E2").has_value());
  EXPECT_FALSE(cat.monoid("T1").has_value());
  EXPECT_THROW(cat.load_dir("/nonexistent/radact"), radact::Error);
}

}  // namespace
