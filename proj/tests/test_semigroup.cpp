#include <gtest/gtest.h>

#include <map>
#include <random>

#include "bzf/error.hpp"
#include "bzf/semigroup.hpp"

using namespace bzf;

namespace {
  using Sets = std::vector<EpSet>;

  EpSet const ray0 = EpSet::ray(0);
  EpSet const prog = EpSet::progression(2, 3);

  // An element as a partial injection x -> x - i + j on {i + f : f in F},
  // tabulated on [-W, W].
  constexpr std::int64_t W = 160;

  std::map<std::int64_t, std::int64_t> as_map(Element const& a) {
    std::map<std::int64_t, std::int64_t> m;
    if (a.is_zero()) {
      return m;
    }
    for (std::int64_t x = -W; x <= W; ++x) {
      if (a.set().contains(x - a.i())) {
        m[x] = x - a.i() + a.j();
      }
    }
    return m;
  }

  // Product by composing maps (a first, then b), restricted to points where
  // every intermediate value is tabulated.
  std::map<std::int64_t, std::int64_t> composed(Element const& a,
                                                Element const& b) {
    auto const ma = as_map(a), mb = as_map(b);
    std::map<std::int64_t, std::int64_t> out;
    for (auto [x, y] : ma) {
      if (auto it = mb.find(y); it != mb.end()) {
        out[x] = it->second;
      }
    }
    return out;
  }

  std::map<std::int64_t, std::int64_t> trimmed(
      std::map<std::int64_t, std::int64_t> const& m, std::int64_t w) {
    std::map<std::int64_t, std::int64_t> out;
    for (auto [x, y] : m) {
      if (x >= -w && x <= w) {
        out[x] = y;
      }
    }
    return out;
  }
}  // namespace

TEST(Semigroup, multiply_examples) {
  SemigroupCtx const r(Family::close(Sets{ray0}));
  EXPECT_EQ(r.multiply(r.make(0, 0, ray0), r.make(1, 1, ray0)),
            r.make(1, 1, intersect(shift(ray0, -1), ray0)));
  EXPECT_EQ(r.multiply(r.make(-3, -1, ray0), r.make(2, 4, ray0)),
            r.make(0, 4, ray0));
  EXPECT_EQ(r.multiply(r.make(4, 4, ray0), r.make(4, 4, ray0)),
            r.make(4, 4, ray0));

  SemigroupCtx const p(Family::close(Sets{prog}));
  EXPECT_EQ(p.multiply(p.make(0, 5, prog), p.make(1, 0, prog)), p.zero());
  EXPECT_EQ(p.multiply(p.make(0, 4, prog), p.make(1, 0, prog)),
            p.make(0, 3, prog));
  EXPECT_EQ(p.multiply(p.zero(), p.make(1, 0, prog)), p.zero());
}

TEST(Semigroup, multiply_matches_partial_maps) {
  SemigroupCtx const ctx(
      Family::close(Sets{unite(EpSet::finite({0, 3}), EpSet::progression(5, 2))}));
  auto const&     members = ctx.family()->members();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> idx(-12, 12);
  std::uniform_int_distribution<std::size_t>  pick(0, members.size() - 1);
  auto draw = [&] {
    EpSet const& f = members[pick(rng)];
    return f.is_empty() ? Element::zero()
                        : Element::triple(idx(rng), idx(rng), f);
  };
  for (int trial = 0; trial < 3000; ++trial) {
    Element const a = draw(), b = draw();
    Element const ab = ctx.multiply(a, b);
    // Points within 100 never leave the tabulated range in between.
    ASSERT_EQ(trimmed(as_map(ab), 100), trimmed(composed(a, b), 100))
        << a.to_string() << " * " << b.to_string() << " = " << ab.to_string();
  }
}

TEST(Semigroup, empty_outside_family) {
  // {[0), 2+3w} is not omega-closed; a product landing on the empty set
  // is reported rather than silently mapped to zero.
  Triple const t = multiply_triples({0, 5, prog}, {1, 0, prog});
  EXPECT_TRUE(t.set.is_empty());
  SemigroupCtx const r(Family::close(Sets{ray0}));
  EXPECT_THROW(r.zero(), Error);
  try {
    r.make(0, 0, prog);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), "InvalidElement");
  }
}

TEST(Semigroup, inverse_and_idempotents) {
  Element const a = Element::triple(2, 5, ray0);
  EXPECT_EQ(inverse(a), Element::triple(5, 2, ray0));
  EXPECT_EQ(inverse(Element::zero()), Element::zero());
  Element const e = Element::triple(3, 3, ray0);
  EXPECT_EQ(inverse(e), e);
  EXPECT_TRUE(is_idempotent(Element::triple(4, 4, EpSet::finite({0}))));
  EXPECT_FALSE(is_idempotent(Element::triple(4, 5, EpSet::finite({0}))));
  EXPECT_TRUE(is_idempotent(Element::zero()));
}

TEST(Semigroup, natural_order_examples) {
  auto t = [](std::int64_t i, std::int64_t j) {
    return Element::triple(i, j, ray0);
  };
  EXPECT_TRUE(natural_leq(t(1, 1), t(0, 0)));
  EXPECT_FALSE(natural_leq(t(0, 0), t(1, 1)));
  EXPECT_TRUE(natural_leq(t(2, 7), t(2, 7)));
  EXPECT_TRUE(natural_leq(Element::zero(), t(2, 7)));
  EXPECT_TRUE(idempotent_leq(t(3, 3), t(1, 1)));
  EXPECT_FALSE(idempotent_leq(t(1, 1), t(3, 3)));
  EXPECT_THROW(idempotent_leq(t(1, 2), t(3, 3)), Error);
  // Definitional check a = a a^-1 b.
  SemigroupCtx const ctx(Family::close(Sets{ray0}));
  for (std::int64_t i = -3; i <= 3; ++i) {
    for (std::int64_t j = -3; j <= 3; ++j) {
      Element const a = t(i, j), b = t(0, 1);
      EXPECT_EQ(natural_leq(a, b), ctx.multiply(a, inverse(a), b) == a);
    }
  }
}

TEST(Semigroup, green_examples) {
  EpSet const   two = EpSet::finite({2});
  Element const a   = Element::triple(0, 3, two);
  EXPECT_TRUE(green(a, Element::triple(0, 7, two), GreenRel::R));
  EXPECT_TRUE(green(a, Element::triple(5, 8, two), GreenRel::D));
  EXPECT_FALSE(green(a, Element::triple(5, 8, two), GreenRel::H));
  EXPECT_TRUE(green(Element::triple(0, 0, EpSet::ray(1)),
                    Element::triple(0, 0, EpSet::ray(5)),
                    GreenRel::J));
  EXPECT_FALSE(green(Element::triple(0, 0, EpSet::ray(1)),
                     Element::triple(0, 0, EpSet::ray(5)),
                     GreenRel::D));
  EXPECT_TRUE(green(Element::zero(), Element::zero(), GreenRel::H));
  EXPECT_FALSE(green(Element::zero(), a, GreenRel::J));
}

TEST(Semigroup, green_witnesses_recompute) {
  SemigroupCtx const ctx(Family::from_members(Sets{EpSet(), EpSet::finite({2})}));
  EpSet const        two = EpSet::finite({2});
  Element const      a   = Element::triple(0, 3, two);
  Element const      b   = Element::triple(0, 7, two);
  auto [x, y]            = green_witness(a, b, GreenRel::R);
  EXPECT_EQ(ctx.multiply(a, x), b);
  EXPECT_EQ(ctx.multiply(b, y), a);

  Element const c = Element::triple(-4, 3, two);
  auto [u, v]     = green_witness(a, c, GreenRel::L);
  EXPECT_EQ(ctx.multiply(u, a), c);
  EXPECT_EQ(ctx.multiply(v, c), a);

  Element const d = Element::triple(5, 8, two);
  auto [m, mi]    = green_witness(a, d, GreenRel::D);
  EXPECT_EQ(ctx.multiply(m, mi), ctx.multiply(a, inverse(a)));
  EXPECT_EQ(ctx.multiply(mi, m), ctx.multiply(inverse(d), d));

  try {
    green_witness(a, d, GreenRel::R);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), "NotRelated");
  }
}

TEST(Semigroup, parse_green_rel) {
  EXPECT_EQ(parse_green_rel("D"), GreenRel::D);
  EXPECT_EQ(parse_green_rel("Q"), std::nullopt);
  EXPECT_EQ(to_string(GreenRel::J), "J");
}

TEST(Semigroup, singleton_context) {
  SemigroupCtx const ctx = SemigroupCtx::singletons();
  EXPECT_TRUE(ctx.has_empty());
  EXPECT_EQ(ctx.family(), nullptr);
  Element const a = ctx.make(0, 2, EpSet::finite({4}));
  Element const b = ctx.make(1, 0, EpSet::finite({5}));
  EXPECT_EQ(ctx.multiply(a, b), Element::triple(0, 1, EpSet::finite({4})));
  EXPECT_THROW(ctx.make(0, 0, EpSet::finite({1, 2})), Error);
}
