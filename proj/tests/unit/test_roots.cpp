#include <gtest/gtest.h>

#include "symcut/errors.hpp"
#include "symcut/roots.hpp"

using namespace symcut;

TEST(RootSystemType, ParsesNames) {
  EXPECT_EQ(RootSystemType::parse("a3").name(), "A3");
  EXPECT_EQ(RootSystemType::parse("E_7").name(), "E7");
  EXPECT_FALSE(RootSystemType::parse("BC2").reduced());
  EXPECT_THROW(RootSystemType::parse("X3"), Error);
  EXPECT_THROW(RootSystemType::parse("A"), Error);
}

TEST(RootSystemType, EnforcesRankBounds) {
  EXPECT_THROW(RootSystemType::make(Family::D, 3), Error);
  EXPECT_THROW(RootSystemType::make(Family::B, 1), Error);
  EXPECT_THROW(RootSystemType::make(Family::E6, 7), Error);
}

TEST(RootSystemType, C2IsStoredAsB2) {
  const auto t = RootSystemType::parse("C2");
  EXPECT_EQ(t.family, Family::B);
  EXPECT_TRUE(t.written_as_c2);
}

TEST(RootDatum, PositiveRootCounts) {
  for (const char* name : {"A1", "A5", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"}) {
    const auto t = RootSystemType::parse(name);
    const RootDatum d = build_datum(t);
    EXPECT_EQ(static_cast<int>(d.positive_roots.size()), classical_positive_root_count(t)) << name;
    EXPECT_EQ(enumerate_roots(d).size(), 2 * d.positive_roots.size()) << name;
  }
}

TEST(RootDatum, HighestRootIsLongWithKnownCoefficients) {
  const RootDatum e8 = build_datum(RootSystemType::parse("E8"));
  EXPECT_EQ(e8.d_coeffs, (std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2}));
  const RootDatum g2 = build_datum(RootSystemType::parse("G2"));
  EXPECT_EQ(g2.inner(g2.highest_root(), g2.highest_root()), Rational(2));
}

TEST(RootDatum, RejectsNonReduced) {
  try {
    build_datum(RootSystemType::parse("BC3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonReducedType);
  }
}
