#ifndef BZF_MORPHISMS_HPP_
#define BZF_MORPHISMS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "bzf/partial_maps.hpp"
#include "bzf/semigroup.hpp"

namespace bzf {

  //! Element of the extended bicyclic semigroup Z x Z.
  struct ExtBicyclicElt {
    std::int64_t i;
    std::int64_t j;

    std::string to_string() const;
    bool        operator==(ExtBicyclicElt const&) const = default;
  };

  //! (i1 + i2 - min(j1, i2), j1 + j2 - min(j1, i2))
  ExtBicyclicElt ext_bicyclic_mul(ExtBicyclicElt const& a,
                                  ExtBicyclicElt const& b);

  //! Matrix unit (row, col) or zero; (a, b)(c, d) = (a, d) iff b == c.
  class MatrixUnitElt {
   public:
    static MatrixUnitElt zero() {
      return MatrixUnitElt();
    }
    static MatrixUnitElt unit(std::int64_t row, std::int64_t col) {
      MatrixUnitElt m;
      m._unit = {row, col};
      return m;
    }

    bool is_zero() const noexcept {
      return !_unit.has_value();
    }
    std::int64_t row() const {
      return _unit->first;
    }
    std::int64_t col() const {
      return _unit->second;
    }

    std::string to_string() const;
    bool        operator==(MatrixUnitElt const&) const = default;

   private:
    MatrixUnitElt() = default;
    std::optional<std::pair<std::int64_t, std::int64_t>> _unit;
  };

  MatrixUnitElt matrix_unit_mul(MatrixUnitElt const& a, MatrixUnitElt const& b);

  //! Brandt Z-extension of (omega, min): zero or (alpha, s, beta) with
  //! (alpha, s, beta)(gamma, t, delta) = (alpha, min(s, t), delta) iff
  //! beta == gamma.
  class BrandtElt {
   public:
    struct Coords {
      std::int64_t alpha;
      std::int64_t s;
      std::int64_t beta;
      bool         operator==(Coords const&) const = default;
    };

    static BrandtElt zero() {
      return BrandtElt();
    }
    //! Throws std::invalid_argument for s < 0.
    static BrandtElt make(std::int64_t alpha, std::int64_t s, std::int64_t beta);

    bool is_zero() const noexcept {
      return !_coords.has_value();
    }
    Coords const& coords() const {
      return *_coords;
    }

    std::string to_string() const;
    bool        operator==(BrandtElt const&) const = default;

   private:
    BrandtElt() = default;
    std::optional<Coords> _coords;
  };

  BrandtElt brandt_mul(BrandtElt const& a, BrandtElt const& b);

  //! i - j, a homomorphism onto (Z, +) whose kernel classes are the sigma
  //! classes. Throws Error("ZeroInFamily") when ctx contains the empty set.
  std::int64_t sigma_hom(SemigroupCtx const& ctx, Element const& a);

  //! (i, j, F) -> (i, j) for a family {[k)}. Throws Error("WrongIsoType").
  ExtBicyclicElt to_ext_bicyclic(SemigroupCtx const& ctx, Element const& a);
  Element        from_ext_bicyclic(SemigroupCtx const& ctx,
                                   ExtBicyclicElt const& e);

  //! (i, j, {k}) -> (i, j), 0 -> 0 for a family {empty, {k}}; indices stay
  //! in Z. Throws Error("WrongIsoType").
  MatrixUnitElt to_matrix_units(SemigroupCtx const& ctx, Element const& a);
  Element       from_matrix_units(SemigroupCtx const& ctx,
                                  MatrixUnitElt const& m);

  //! Fixed bijection Z -> omega: n -> 2n for n >= 0, n -> -2n - 1 otherwise.
  std::int64_t omega_index(std::int64_t n);
  std::int64_t omega_index_inverse(std::int64_t m);

  //! to_matrix_units followed by omega_index on both coordinates.
  MatrixUnitElt to_matrix_units_omega(SemigroupCtx const& ctx,
                                      Element const& a);

  //! (i, j, {k}) -> (i + k, k, j + k), 0 -> zero. Throws
  //! Error("NotSingletonSet").
  BrandtElt to_brandt(Element const& a);
  Element   from_brandt(BrandtElt const& b);

  //! (n, m, i1 + j0 * omega) -> (n, m, i2 + j0 * omega), 0 -> 0. Throws
  //! Error("WrongProgression") if the set of a is not i1 + j0 * omega.
  Element progression_reindex(Element const& a,
                              std::int64_t   i1,
                              std::int64_t   i2,
                              std::int64_t   j0);

  //! alpha^i_j -> (i, j).
  ExtBicyclicElt partial_shift_iso(PartialShift const& alpha);

}  // namespace bzf

#endif  // BZF_MORPHISMS_HPP_
