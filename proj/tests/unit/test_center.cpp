#include <gtest/gtest.h>

#include "symcut/center.hpp"
#include "symcut/errors.hpp"

using namespace symcut;

namespace {
CenterGroup group(const char* name) { return build_center_group(build_datum(RootSystemType::parse(name))); }
}  // namespace

TEST(Center, StructureMatchesExpectation) {
  for (const char* name : {"A1", "A6", "B4", "C5", "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2"}) {
    const CenterGroup g = group(name);
    const ExpectedCenter want = expected_center(g.alcove.datum.type);
    EXPECT_EQ(static_cast<int>(g.order()), want.order) << name;
    EXPECT_EQ(g.structure(), want.structure) << name;
  }
}

TEST(Center, CayleyTableIsAGroup) {
  const CenterGroup g = group("D6");
  const int n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a) {
    EXPECT_EQ(g.cayley[a][g.inverse[a]], 0);
    for (int b = 0; b < n; ++b) {
      EXPECT_EQ(g.cayley[a][b], g.cayley[b][a]);
      for (int c = 0; c < n; ++c)
        EXPECT_EQ(g.cayley[g.cayley[a][b]][c], g.cayley[a][g.cayley[b][c]]);
    }
  }
}

TEST(Center, SubgroupsOfCyclicCenter) {
  const CenterGroup g = group("A5");
  std::vector<std::string> names;
  for (const auto& s : subgroups(g)) names.push_back(subgroup_name(g, s));
  EXPECT_EQ(names.size(), 4u);
  EXPECT_EQ(parse_subgroup(g, "Z3").order(), 3u);
  EXPECT_EQ(parse_subgroup(g, "full").order(), 6u);
  EXPECT_TRUE(parse_subgroup(g, "trivial").trivial());
  EXPECT_THROW(parse_subgroup(g, "Z4"), Error);
}

TEST(Center, KleinFourHasThreeOrderTwoSubgroups) {
  const CenterGroup g = group("D6");
  int order_two = 0;
  for (const auto& s : subgroups(g)) order_two += s.order() == 2;
  EXPECT_EQ(order_two, 3);
  EXPECT_EQ(parse_subgroup(g, "gen=e1").order(), 2u);
}

TEST(Center, ReductionFixesAlcovePoints) {
  const CenterGroup g = group("B3");
  const Vector c{frac(1, 4), frac(1, 4), frac(1, 4)};
  EXPECT_EQ(reduce_to_alcove(c, g.alcove.datum), c);
}
