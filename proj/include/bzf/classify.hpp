#ifndef BZF_CLASSIFY_HPP_
#define BZF_CLASSIFY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "bzf/semigroup.hpp"

namespace bzf {

  enum class IsoKind {
    Trivial,
    ExtendedBicyclic,
    MatrixUnitsOmega,
    ZeroBisimpleProgression,
    General
  };

  std::string_view to_string(IsoKind kind);

  struct IsoType {
    IsoKind kind = IsoKind::General;
    // ZeroBisimpleProgression: the family is {empty, i0 + j0 * omega}.
    std::int64_t i0 = 0;
    std::int64_t j0 = 0;

    bool operator==(IsoType const&) const = default;
  };

  //! Evidence for a negative verdict: a pair of elements where one exists,
  //! otherwise only a note.
  struct Counterexample {
    std::string                                note;
    std::optional<std::pair<Element, Element>> pair;
  };

  struct StructureReport {
    bool has_zero      = false;
    bool has_identity  = false;
    bool simple        = false;
    bool zero_simple   = false;
    bool bisimple      = false;
    bool zero_bisimple = false;
    bool e_unitary     = false;

    //! Some member is a nonempty ray, so (i, j, [k)) spans a copy of the
    //! extended bicyclic semigroup.
    bool contains_extended_bicyclic = false;

    IsoType iso_type;

    //! For 0-bisimple families {empty, F}: "matrix_units" (F a singleton),
    //! "inductive" (F a ray), "progression" (F = i0 + j0 * omega, j0 > 1) or
    //! "unresolved". Empty otherwise.
    std::string zero_bisimple_branch;

    //! Number of D-classes other than {0}.
    std::size_t nonzero_d_classes = 0;

    //! Keyed by the name of the false field.
    std::map<std::string, Counterexample> witnesses;
  };

  //! Requires a finite family; throws Error("UnsupportedFamily") for the
  //! symbolic singleton family.
  StructureReport classify(SemigroupCtx const& ctx);

  //! Nonzero D-classes, i.e. nonempty members of the family.
  std::size_t d_class_count(SemigroupCtx const& ctx);

  //! (0, 0, F), or zero when F is empty.
  Element representative(EpSet const& set);

}  // namespace bzf

#endif  // BZF_CLASSIFY_HPP_
