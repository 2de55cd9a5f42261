#include <gtest/gtest.h>

#include <random>

#include "bzf/omega_set.hpp"

using namespace bzf;

namespace {
  // Membership on [0, 256) computed directly from the definition.
  constexpr std::int64_t kLimit = 256;

  std::vector<bool> bits(EpSet const& s) {
    std::vector<bool> out(kLimit);
    for (std::int64_t n = 0; n < kLimit; ++n) {
      out[n] = s.contains(n);
    }
    return out;
  }

  EpSet random_set(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> t(0, 8), p(1, 6), c(0, 1);
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
    return EpSet::from_parts(head, th, pe, res);
  }
}  // namespace

TEST(EpSet, canonical_form) {
  EpSet a = EpSet::from_parts({0, 2, 4}, 6, 2, {true, false});
  EXPECT_EQ(a, EpSet::progression(0, 2));
  EXPECT_EQ(a.threshold(), 0);
  EXPECT_EQ(a.period(), 1 * 2);
  EXPECT_EQ(EpSet::from_parts({}, 3, 4, {true, true, true, true}),
            EpSet::ray(3));
  EXPECT_EQ(EpSet::finite({}), EpSet());
  EXPECT_TRUE(EpSet().is_empty());
  EXPECT_THROW(EpSet::finite({-1}), std::invalid_argument);
  EXPECT_THROW(EpSet::from_parts({5}, 3, 1, {false}), std::invalid_argument);
}

TEST(EpSet, to_string) {
  EXPECT_EQ(EpSet().to_string(), "{}");
  EXPECT_EQ(EpSet::finite({2, 0}).to_string(), "{0,2}");
  EXPECT_EQ(EpSet::ray(7).to_string(), "[7)");
  EXPECT_EQ(EpSet::progression(2, 3).to_string(), "2+3*w");
  EXPECT_EQ(unite(EpSet::finite({0, 2}), EpSet::ray(7)).to_string(),
            "{0,2}|[7)");
}

TEST(EpSet, shift_examples) {
  EXPECT_EQ(shift(EpSet(), 5), EpSet());
  for (std::int64_t k = 0; k < 5; ++k) {
    EXPECT_EQ(shift(EpSet::ray(k), -1), EpSet::ray(std::max<std::int64_t>(k - 1, 0)));
  }
  EXPECT_EQ(shift(EpSet::finite({3}), -3), EpSet::finite({0}));
}

TEST(EpSet, intersect_examples) {
  EpSet const f = EpSet::progression(2, 3);
  EXPECT_EQ(intersect(f, f), f);
  EXPECT_EQ(intersect(EpSet::ray(0), f), f);
  EXPECT_EQ(intersect(shift(f, -1), f), EpSet());
}

TEST(EpSet, subset_examples) {
  EXPECT_TRUE(is_subset(EpSet(), EpSet::finite({1})));
  EXPECT_TRUE(is_subset(EpSet::ray(3), EpSet::ray(1)));
  EXPECT_FALSE(is_subset(EpSet::ray(1), EpSet::ray(3)));
  EXPECT_TRUE(is_subset(EpSet::finite({0, 2}), EpSet::progression(0, 2)));
}

TEST(EpSet, shift_subset_examples) {
  EpSet const f = EpSet::progression(2, 3);
  EXPECT_EQ(exists_shift_subset(f, f), 0);
  EXPECT_EQ(exists_shift_subset(EpSet::finite({5}), EpSet::finite({3})),
            std::nullopt);
  EXPECT_EQ(exists_shift_subset(EpSet::ray(4), EpSet::ray(0)), 0);
  EXPECT_EQ(exists_shift_subset(EpSet::ray(0), EpSet::ray(4)), 4);
  EXPECT_EQ(exists_shift_subset(EpSet::ray(1), EpSet::ray(5)), 4);
  EXPECT_EQ(exists_shift_subset(EpSet::ray(5), EpSet::ray(1)), 0);
}

TEST(EpSet, recognizers) {
  EXPECT_TRUE(is_inductive(EpSet::ray(3)));
  EXPECT_FALSE(is_inductive(EpSet::finite({0, 2})));
  EXPECT_TRUE(is_inductive(EpSet()));
  EXPECT_EQ(as_singleton(EpSet::finite({7})), 7);
  EXPECT_EQ(as_singleton(EpSet()), std::nullopt);
  EXPECT_EQ(as_singleton(EpSet::ray(2)), std::nullopt);
  using P = std::pair<std::int64_t, std::int64_t>;
  EXPECT_EQ(as_arith_progression(EpSet::progression(2, 3)), P(2, 3));
  EXPECT_EQ(as_arith_progression(EpSet::ray(5)), P(5, 1));
  EXPECT_EQ(as_arith_progression(EpSet::finite({0, 1, 3})), std::nullopt);
}

TEST(EpSet, operations_match_membership) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    EpSet const a = random_set(rng), b = random_set(rng);
    auto const  ba = bits(a), bb = bits(b);
    std::int64_t const d = std::int64_t(trial % 21) - 10;

    auto const sh = bits(shift(a, d));
    auto const in = bits(intersect(a, b));
    auto const un = bits(unite(a, b));
    bool       sub = true;
    for (std::int64_t n = 0; n < kLimit; ++n) {
      bool const expect_shift = n - d >= 0 && n - d < kLimit && ba[n - d];
      if (n - d < kLimit) {
        ASSERT_EQ(sh[n], expect_shift) << a.to_string() << " shifted by " << d;
      }
      ASSERT_EQ(in[n], ba[n] && bb[n]);
      ASSERT_EQ(un[n], ba[n] || bb[n]);
      sub = sub && (!ba[n] || bb[n]);
    }
    ASSERT_EQ(is_subset(a, b), sub) << a.to_string() << " " << b.to_string();

    // Canonical form: equal membership implies equal representation.
    EpSet const via = unite(intersect(a, b), intersect(a, b));
    ASSERT_EQ(via, intersect(b, a));
  }
}

TEST(EpSet, members_and_min) {
  EpSet const s = unite(EpSet::finite({1, 4}), EpSet::progression(9, 4));
  EXPECT_EQ(s.members_below(20), (std::vector<std::int64_t>{1, 4, 9, 13, 17}));
  EXPECT_EQ(s.min(), 1);
  EXPECT_EQ(s.size(), std::nullopt);
  EXPECT_EQ(EpSet::finite({3, 8}).size(), 2u);
  EXPECT_EQ(EpSet().min(), std::nullopt);
}
