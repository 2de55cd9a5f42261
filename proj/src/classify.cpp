#include "bzf/classify.hpp"

#include <algorithm>

#include "bzf/error.hpp"

namespace bzf {

  std::string_view to_string(IsoKind kind) {
    switch (kind) {
      case IsoKind::Trivial: return "Trivial";
      case IsoKind::ExtendedBicyclic: return "ExtendedBicyclic";
      case IsoKind::MatrixUnitsOmega: return "MatrixUnitsOmega";
      case IsoKind::ZeroBisimpleProgression: return "ZeroBisimpleProgression";
      case IsoKind::General: return "General";
    }
    return "?";
  }

  Element representative(EpSet const& set) {
    return set.is_empty() ? Element::zero() : Element::triple(0, 0, set);
  }

  namespace {
    Family const& finite_family(SemigroupCtx const& ctx) {
      if (ctx.family() == nullptr) {
        throw Error("UnsupportedFamily",
                    "classification needs a finite family");
      }
      return *ctx.family();
    }

    bool j_related(EpSet const& a, EpSet const& b) {
      return exists_shift_subset(a, b) && exists_shift_subset(b, a);
    }

    // First pair of sets that are not J-related, if any.
    std::optional<std::pair<EpSet, EpSet>>
    j_separated(std::vector<EpSet> const& sets) {
      for (std::size_t x = 0; x < sets.size(); ++x) {
        for (std::size_t y = x + 1; y < sets.size(); ++y) {
          if (!j_related(sets[x], sets[y])) {
            return std::make_pair(sets[x], sets[y]);
          }
        }
      }
      return std::nullopt;
    }

    Counterexample pair_of(EpSet const& a, EpSet const& b, std::string note) {
      return {std::move(note),
              std::make_pair(representative(a), representative(b))};
    }

    IsoType iso_type_of(std::vector<EpSet> const& members, bool has_zero) {
      if (members.size() == 1) {
        EpSet const& f = members.front();
        if (f.is_empty()) {
          return {IsoKind::Trivial};
        }
        if (is_inductive(f)) {
          return {IsoKind::ExtendedBicyclic};
        }
        return {IsoKind::General};
      }
      if (members.size() == 2 && has_zero) {
        EpSet const& f = members.front().is_empty() ? members.back()
                                                    : members.front();
        if (as_singleton(f)) {
          return {IsoKind::MatrixUnitsOmega};
        }
        if (auto ap = as_arith_progression(f)) {
          return {IsoKind::ZeroBisimpleProgression, ap->first, ap->second};
        }
      }
      return {IsoKind::General};
    }
  }  // namespace

  StructureReport classify(SemigroupCtx const& ctx) {
    Family const&             family   = finite_family(ctx);
    std::vector<EpSet> const& members  = family.members();
    std::vector<EpSet> const  nonempty = family.nonempty_members();
    bool const                trivial
        = members.size() == 1 && members.front().is_empty();

    StructureReport r;
    r.has_zero          = family.has_empty();
    r.has_identity      = trivial;
    r.bisimple          = members.size() == 1;
    r.zero_bisimple     = r.has_zero && members.size() == 2;
    r.e_unitary         = !r.has_zero || trivial;
    r.nonzero_d_classes = nonempty.size();
    r.iso_type          = iso_type_of(members, r.has_zero);
    r.contains_extended_bicyclic
        = std::any_of(nonempty.begin(), nonempty.end(), [](EpSet const& f) {
            return is_inductive(f);
          });

    if (!r.has_zero) {
      r.witnesses["has_zero"] = {"the empty set is not a member", {}};
    }
    if (!r.has_identity) {
      // (i, i, F) * (i - 1, i - 1, F) = (i, i, F & (-1 + F)) != (i - 1, ...)
      EpSet const& f = nonempty.front();
      r.witnesses["has_identity"]
          = {"(0,0;F) * (-1,-1;F) differs from (-1,-1;F)",
             std::make_pair(Element::triple(0, 0, f),
                            Element::triple(-1, -1, f))};
    }
    if (!r.bisimple) {
      r.witnesses["bisimple"]
          = pair_of(members[0], members[1], "distinct D-classes");
    }

    if (!r.has_zero) {
      auto sep = j_separated(members);
      r.simple = !sep.has_value();
      if (sep) {
        r.witnesses["simple"]
            = pair_of(sep->first, sep->second, "distinct J-classes");
      }
      r.witnesses["zero_simple"]   = {"no zero", {}};
      r.witnesses["zero_bisimple"] = {"no zero", {}};
    } else if (trivial) {
      r.simple = true;
      r.witnesses["zero_simple"]   = {"S * S = {0}", {}};
      r.witnesses["zero_bisimple"] = {"S = {0}", {}};
    } else {
      r.witnesses["simple"]
          = pair_of(EpSet(), nonempty.front(), "{0} is a proper ideal");
      auto sep      = j_separated(nonempty);
      r.zero_simple = !sep.has_value();
      if (sep) {
        r.witnesses["zero_simple"]
            = pair_of(sep->first, sep->second, "distinct nonzero J-classes");
      }
      if (!r.zero_bisimple) {
        r.witnesses["zero_bisimple"] = pair_of(
            nonempty[0], nonempty[1], "distinct nonzero D-classes");
      }
    }
    if (!r.e_unitary) {
      r.witnesses["e_unitary"]
          = {"0 lies below the non-idempotent (0,1;F)",
             std::make_pair(Element::zero(),
                            Element::triple(0, 1, nonempty.front()))};
    }

    if (r.zero_bisimple) {
      EpSet const& f = nonempty.front();
      if (as_singleton(f)) {
        r.zero_bisimple_branch = "matrix_units";
      } else if (is_inductive(f)) {
        r.zero_bisimple_branch = "inductive";
      } else if (as_arith_progression(f)) {
        r.zero_bisimple_branch = "progression";
      } else {
        r.zero_bisimple_branch = "unresolved";
      }
    }
    return r;
  }

  std::size_t d_class_count(SemigroupCtx const& ctx) {
    return finite_family(ctx).nonempty_members().size();
  }

}  // namespace bzf
