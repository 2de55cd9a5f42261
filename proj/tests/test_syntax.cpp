#include <gtest/gtest.h>

#include <random>

#include "bzf/error.hpp"
#include "bzf/syntax.hpp"

using namespace bzf;

TEST(Syntax, sets) {
  EXPECT_EQ(parse_set("{}"), EpSet());
  EXPECT_EQ(parse_set("{2, 0}"), EpSet::finite({0, 2}));
  EXPECT_EQ(parse_set("[7)"), EpSet::ray(7));
  EXPECT_EQ(parse_set("2+3*w"), EpSet::progression(2, 3));
  EXPECT_EQ(parse_set("3*w"), EpSet::progression(0, 3));
  EXPECT_EQ(parse_set("w"), EpSet::ray(0));
  EXPECT_EQ(parse_set("{0,2}|[7)").to_string(), "{0,2}|[7)");
  // Normalization: 0+2*w | 1+2*w is the full set.
  EXPECT_EQ(parse_set("0+2*w | 1+2*w"), EpSet::ray(0));
  EXPECT_EQ(parse_set("{0,1,2}|[3)"), EpSet::ray(0));
}

TEST(Syntax, round_trip) {
  for (char const* text : {"{}", "{0,2}|[7)", "2+3*w", "{1}|0+4*w|3+4*w",
                           "[0)", "{5}"}) {
    EpSet const s = parse_set(text);
    EXPECT_EQ(parse_set(s.to_string()), s) << text;
  }
  ElementExpr const e = parse_element("(-3,4;{1}|[6))");
  EXPECT_EQ(e.i, -3);
  EXPECT_EQ(e.j, 4);
  Element const el = Element::triple(e.i, e.j, e.set);
  ElementExpr const back = parse_element(el.to_string());
  EXPECT_EQ(Element::triple(back.i, back.j, back.set), el);
  EXPECT_TRUE(parse_element("0").zero);
}

TEST(Syntax, families) {
  FamilyExpr const f = parse_family("family{ {}; 2+3*w }");
  EXPECT_FALSE(f.closure);
  EXPECT_EQ(f.sets.size(), 2u);
  FamilyExpr const g = parse_family("closure{ {0,1} }");
  EXPECT_TRUE(g.closure);
  EXPECT_EQ(g.build().size(), 3u);
  EXPECT_EQ(parse_family(g.build().to_string()).build(), g.build());
}

TEST(Syntax, products) {
  auto const factors = parse_product("(0,0;[0)) * (1,1;[0)) * 0");
  ASSERT_EQ(factors.size(), 3u);
  EXPECT_TRUE(factors[2].zero);
}

TEST(Syntax, errors_carry_position) {
  try {
    parse_set("{1,2");
    FAIL();
  } catch (SyntaxError const& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.col(), 5u);
    EXPECT_EQ(e.expected(), "'}'");
  }
  try {
    parse_family("family{ [0);\n  2+0*w }");
    FAIL();
  } catch (SyntaxError const& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.col(), 5u);
  }
  EXPECT_THROW(parse_element("(1,2,[0))"), SyntaxError);
  EXPECT_THROW(parse_set("[0) junk"), SyntaxError);
}

TEST(Syntax, random_round_trip) {
  std::mt19937_64                             rng(17);
  std::uniform_int_distribution<std::int64_t> t(0, 8), p(1, 6), c(0, 1);
  for (int trial = 0; trial < 2000; ++trial) {
    std::int64_t const        th = t(rng), pe = p(rng);
    std::vector<std::int64_t> head;
    for (std::int64_t n = 0; n < th; ++n) {
      if (c(rng)) {
        head.push_back(n);
      }
    }
    std::vector<bool> res(pe);
    for (std::int64_t r = 0; r < pe; ++r) {
      res[r] = c(rng);
    }
    EpSet const s = EpSet::from_parts(head, th, pe, res);
    ASSERT_EQ(parse_set(s.to_string()), s) << s.to_string();
    Element const e = Element::zero();
    ASSERT_TRUE(parse_element(e.to_string()).zero);
  }
}
