#include <gtest/gtest.h>

#include "bzf/error.hpp"
#include "bzf/morphisms.hpp"

using namespace bzf;

namespace {
  using Sets = std::vector<EpSet>;

  std::string code_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return "";
  }
}  // namespace

TEST(Morphisms, ext_bicyclic_product) {
  EXPECT_EQ(ext_bicyclic_mul({0, 1}, {1, 0}), (ExtBicyclicElt{0, 0}));
  EXPECT_EQ(ext_bicyclic_mul({0, 0}, {2, 3}), (ExtBicyclicElt{2, 3}));
  // j1 > i2: (i1, j1 - i2 + j2).
  EXPECT_EQ(ext_bicyclic_mul({5, 2}, {1, 1}), (ExtBicyclicElt{5, 2}));
  EXPECT_EQ(ext_bicyclic_mul({5, 2}, {1, 1}),
            partial_shift_iso(compose_shifts({5, 2}, {1, 1})));
}

TEST(Morphisms, sigma) {
  SemigroupCtx const ctx(Family::from_members(Sets{EpSet::ray(0)}));
  EXPECT_EQ(sigma_hom(ctx, Element::triple(2, 5, EpSet::ray(0))), -3);
  EXPECT_EQ(sigma_hom(ctx, Element::triple(4, 4, EpSet::ray(0))), 0);
  SemigroupCtx const z(Family::from_members(Sets{EpSet(), EpSet::finite({3})}));
  EXPECT_EQ(code_of([&] { sigma_hom(z, Element::zero()); }), "ZeroInFamily");
}

TEST(Morphisms, ext_bicyclic_map) {
  SemigroupCtx const ctx(Family::from_members(Sets{EpSet::ray(0)}));
  EXPECT_EQ(to_ext_bicyclic(ctx, Element::triple(3, -2, EpSet::ray(0))),
            (ExtBicyclicElt{3, -2}));
  EXPECT_EQ(from_ext_bicyclic(ctx, {3, -2}),
            Element::triple(3, -2, EpSet::ray(0)));
  SemigroupCtx const bad(Family::from_members(Sets{EpSet(), EpSet::finite({3})}));
  EXPECT_EQ(code_of([&] { to_ext_bicyclic(bad, Element::zero()); }),
            "WrongIsoType");
}

TEST(Morphisms, matrix_units) {
  EpSet const        three = EpSet::finite({3});
  SemigroupCtx const ctx(Family::from_members(Sets{EpSet(), three}));
  Element const      a = Element::triple(0, 1, three);
  Element const      b = Element::triple(2, 0, three);
  EXPECT_EQ(to_matrix_units(ctx, a), MatrixUnitElt::unit(0, 1));
  EXPECT_EQ(to_matrix_units(ctx, Element::zero()), MatrixUnitElt::zero());
  EXPECT_EQ(ctx.multiply(a, b), Element::zero());
  EXPECT_EQ(matrix_unit_mul(MatrixUnitElt::unit(0, 1), MatrixUnitElt::unit(2, 0)),
            MatrixUnitElt::zero());
  EXPECT_EQ(matrix_unit_mul(MatrixUnitElt::unit(0, 1), MatrixUnitElt::unit(1, 4)),
            MatrixUnitElt::unit(0, 4));
  for (std::int64_t n = -20; n <= 20; ++n) {
    EXPECT_GE(omega_index(n), 0);
    EXPECT_EQ(omega_index_inverse(omega_index(n)), n);
  }
  EXPECT_EQ(to_matrix_units_omega(ctx, Element::triple(-1, 2, three)),
            MatrixUnitElt::unit(1, 4));
  SemigroupCtx const rays(Family::from_members(Sets{EpSet::ray(0)}));
  EXPECT_EQ(code_of([&] { to_matrix_units(rays, a); }), "WrongIsoType");
}

TEST(Morphisms, brandt) {
  EXPECT_EQ(to_brandt(Element::triple(0, 0, EpSet::finite({5}))),
            BrandtElt::make(5, 5, 5));
  EXPECT_EQ(to_brandt(Element::triple(-2, 3, EpSet::finite({4}))),
            BrandtElt::make(2, 4, 7));
  EXPECT_EQ(to_brandt(Element::zero()), BrandtElt::zero());
  EXPECT_EQ(from_brandt(BrandtElt::make(2, 4, 7)),
            Element::triple(-2, 3, EpSet::finite({4})));
  EXPECT_EQ(code_of([] { to_brandt(Element::triple(0, 0, EpSet::ray(1))); }),
            "NotSingletonSet");
  // Middle coordinates multiply by min; inner indices must match.
  EXPECT_EQ(brandt_mul(BrandtElt::make(1, 4, 2), BrandtElt::make(2, 3, 6)),
            BrandtElt::make(1, 3, 6));
  EXPECT_EQ(brandt_mul(BrandtElt::make(1, 4, 2), BrandtElt::make(3, 3, 6)),
            BrandtElt::zero());
}

TEST(Morphisms, reindex) {
  EpSet const from = EpSet::progression(2, 3);
  EXPECT_EQ(progression_reindex(Element::triple(0, 1, from), 2, 0, 3),
            Element::triple(0, 1, EpSet::progression(0, 3)));
  EXPECT_EQ(progression_reindex(Element::zero(), 2, 0, 3), Element::zero());
  EXPECT_EQ(code_of([&] {
              progression_reindex(Element::triple(0, 1, from), 1, 0, 3);
            }),
            "WrongProgression");
}

TEST(Morphisms, partial_shift_iso) {
  EXPECT_EQ(partial_shift_iso({0, 0}), (ExtBicyclicElt{0, 0}));
  EXPECT_EQ(partial_shift_iso({2, -1}), (ExtBicyclicElt{2, -1}));
}
