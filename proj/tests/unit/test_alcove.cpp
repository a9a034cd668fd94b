#include <gtest/gtest.h>

#include "symcut/alcove.hpp"

using namespace symcut;

TEST(Alcove, VerticesAreDualToSimpleRoots) {
  for (const char* name : {"A4", "B3", "C3", "D5", "E6", "F4", "G2"}) {
    const Alcove a = build_alcove(build_datum(RootSystemType::parse(name)));
    for (std::size_t j = 0; j < a.rank(); ++j)
      for (std::size_t i = 0; i < a.rank(); ++i)
        EXPECT_EQ(a.datum.d_coeffs[i] * a.pair(j, a.datum.simple_roots[i]), Rational(i == j ? 1 : 0))
            << name;
  }
}

TEST(Alcove, GramRoutesAgree) {
  for (const char* name : {"A3", "B4", "C5", "D6", "E7", "E8", "F4", "G2"}) {
    const Alcove a = build_alcove(build_datum(RootSystemType::parse(name)));
    EXPECT_EQ(gram_e_ambient(a), a.gram_e) << name;
    EXPECT_TRUE(positive_definite(a.gram_e)) << name;
    if (auto ref = reference_gram_e(a.datum.type)) EXPECT_EQ(*ref, a.gram_e) << name;
  }
}

TEST(Alcove, A1IsAnInterval) {
  const Alcove a = build_alcove(build_datum(RootSystemType::parse("A1")));
  EXPECT_EQ(a.gram_e(0, 0), Rational(1));
}
