#include "bzf/morphisms.hpp"

#include <algorithm>
#include <stdexcept>

#include "bzf/error.hpp"

namespace bzf {

  std::string ExtBicyclicElt::to_string() const {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }

  ExtBicyclicElt ext_bicyclic_mul(ExtBicyclicElt const& a,
                                  ExtBicyclicElt const& b) {
    std::int64_t const m = std::min(a.j, b.i);
    return {a.i + b.i - m, a.j + b.j - m};
  }

  std::string MatrixUnitElt::to_string() const {
    if (is_zero()) {
      return "0";
    }
    return "(" + std::to_string(row()) + "," + std::to_string(col()) + ")";
  }

  MatrixUnitElt matrix_unit_mul(MatrixUnitElt const& a,
                                MatrixUnitElt const& b) {
    if (a.is_zero() || b.is_zero() || a.col() != b.row()) {
      return MatrixUnitElt::zero();
    }
    return MatrixUnitElt::unit(a.row(), b.col());
  }

  BrandtElt BrandtElt::make(std::int64_t alpha, std::int64_t s, std::int64_t beta) {
    if (s < 0) {
      throw std::invalid_argument("BrandtElt: middle coordinate must be >= 0");
    }
    BrandtElt b;
    b._coords = Coords{alpha, s, beta};
    return b;
  }

  std::string BrandtElt::to_string() const {
    if (is_zero()) {
      return "O";
    }
    return "(" + std::to_string(_coords->alpha) + "," + std::to_string(_coords->s)
           + "," + std::to_string(_coords->beta) + ")";
  }

  BrandtElt brandt_mul(BrandtElt const& a, BrandtElt const& b) {
    if (a.is_zero() || b.is_zero() || a.coords().beta != b.coords().alpha) {
      return BrandtElt::zero();
    }
    return BrandtElt::make(a.coords().alpha,
                           std::min(a.coords().s, b.coords().s),
                           b.coords().beta);
  }

  std::int64_t sigma_hom(SemigroupCtx const& ctx, Element const& a) {
    if (ctx.has_empty()) {
      throw Error("ZeroInFamily",
                  "the sigma quotient is trivial when the family contains "
                  "the empty set");
    }
    return a.i() - a.j();
  }

  namespace {
    [[noreturn]] void wrong_iso(SemigroupCtx const& ctx, char const* want) {
      throw Error("WrongIsoType",
                  ctx.to_string() + " is not of the form " + want);
    }

    void require_ext_bicyclic(SemigroupCtx const& ctx) {
      Family const* f = ctx.family();
      if (f == nullptr || f->size() != 1 || f->has_empty()
          || !is_inductive(f->members().front())) {
        wrong_iso(ctx, "{[k)}");
      }
    }

    EpSet const& matrix_units_point(SemigroupCtx const& ctx) {
      Family const* f = ctx.family();
      if (f == nullptr || f->size() != 2 || !f->has_empty()
          || !as_singleton(f->members().back())) {
        wrong_iso(ctx, "{{}, {k}}");
      }
      return f->members().back();
    }
  }  // namespace

  ExtBicyclicElt to_ext_bicyclic(SemigroupCtx const& ctx, Element const& a) {
    require_ext_bicyclic(ctx);
    return {a.i(), a.j()};
  }

  Element from_ext_bicyclic(SemigroupCtx const& ctx, ExtBicyclicElt const& e) {
    require_ext_bicyclic(ctx);
    return Element::triple(e.i, e.j, ctx.family()->members().front());
  }

  MatrixUnitElt to_matrix_units(SemigroupCtx const& ctx, Element const& a) {
    matrix_units_point(ctx);
    if (a.is_zero()) {
      return MatrixUnitElt::zero();
    }
    return MatrixUnitElt::unit(a.i(), a.j());
  }

  Element from_matrix_units(SemigroupCtx const& ctx, MatrixUnitElt const& m) {
    EpSet const& point = matrix_units_point(ctx);
    if (m.is_zero()) {
      return Element::zero();
    }
    return Element::triple(m.row(), m.col(), point);
  }

  std::int64_t omega_index(std::int64_t n) {
    return n >= 0 ? 2 * n : -2 * n - 1;
  }

  std::int64_t omega_index_inverse(std::int64_t m) {
    if (m < 0) {
      throw std::invalid_argument("omega_index_inverse: negative index");
    }
    return m % 2 == 0 ? m / 2 : -(m + 1) / 2;
  }

  MatrixUnitElt to_matrix_units_omega(SemigroupCtx const& ctx,
                                      Element const& a) {
    MatrixUnitElt m = to_matrix_units(ctx, a);
    if (m.is_zero()) {
      return m;
    }
    return MatrixUnitElt::unit(omega_index(m.row()), omega_index(m.col()));
  }

  BrandtElt to_brandt(Element const& a) {
    if (a.is_zero()) {
      return BrandtElt::zero();
    }
    auto k = as_singleton(a.set());
    if (!k) {
      throw Error("NotSingletonSet",
                  a.set().to_string() + " is not a singleton");
    }
    return BrandtElt::make(a.i() + *k, *k, a.j() + *k);
  }

  Element from_brandt(BrandtElt const& b) {
    if (b.is_zero()) {
      return Element::zero();
    }
    auto const [alpha, s, beta] = b.coords();
    return Element::triple(alpha - s, beta - s, EpSet::finite({s}));
  }

  Element progression_reindex(Element const& a,
                              std::int64_t   i1,
                              std::int64_t   i2,
                              std::int64_t   j0) {
    if (i1 < 0 || i2 < 0 || j0 < 1) {
      throw Error("WrongProgression",
                  "need i1, i2 >= 0 and j0 >= 1");
    }
    if (a.is_zero()) {
      return a;
    }
    if (a.set() != EpSet::progression(i1, j0)) {
      throw Error("WrongProgression",
                  a.set().to_string() + " is not "
                      + EpSet::progression(i1, j0).to_string());
    }
    return Element::triple(a.i(), a.j(), EpSet::progression(i2, j0));
  }

  ExtBicyclicElt partial_shift_iso(PartialShift const& alpha) {
    return {alpha.i, alpha.j};
  }

}  // namespace bzf
