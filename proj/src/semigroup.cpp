#include "bzf/semigroup.hpp"

#include <stdexcept>

#include "bzf/error.hpp"

namespace bzf {

  Triple multiply_triples(Triple const& a, Triple const& b) {
    if (a.j < b.i) {
      return {a.i - a.j + b.i, b.j, intersect(shift(a.set, a.j - b.i), b.set)};
    } else if (a.j == b.i) {
      return {a.i, b.j, intersect(a.set, b.set)};
    }
    return {a.i, a.j - b.i + b.j, intersect(a.set, shift(b.set, b.i - a.j))};
  }

  Element Element::triple(std::int64_t i, std::int64_t j, EpSet set) {
    if (set.is_empty()) {
      throw std::invalid_argument("Element::triple: empty set");
    }
    Element e;
    e._triple = Triple{i, j, std::move(set)};
    return e;
  }

  std::string Element::to_string() const {
    if (is_zero()) {
      return "0";
    }
    return "(" + std::to_string(i()) + "," + std::to_string(j()) + ";"
           + set().to_string() + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // SemigroupCtx
  ////////////////////////////////////////////////////////////////////////

  SemigroupCtx::SemigroupCtx(Family family) : _family(std::move(family)) {}

  SemigroupCtx::SemigroupCtx(SingletonFamily s) : _family(s) {}

  bool SemigroupCtx::has_empty() const noexcept {
    if (auto const* f = family()) {
      return f->has_empty();
    }
    return true;
  }

  bool SemigroupCtx::admits(EpSet const& set) const {
    if (auto const* f = family()) {
      return f->contains(set);
    }
    return set.is_empty() || as_singleton(set).has_value();
  }

  Element SemigroupCtx::make(std::int64_t i, std::int64_t j, EpSet set) const {
    if (set.is_empty()) {
      throw Error("InvalidElement",
                  "triples with the empty set are identified with zero");
    }
    if (!admits(set)) {
      throw Error("InvalidElement",
                  set.to_string() + " is not a member of " + to_string());
    }
    return Element::triple(i, j, std::move(set));
  }

  Element SemigroupCtx::zero() const {
    if (!has_empty()) {
      throw Error("InvalidElement",
                  "no zero: the empty set is not a member of " + to_string());
    }
    return Element::zero();
  }

  void SemigroupCtx::validate(Element const& a) const {
    if (a.is_zero()) {
      zero();
    } else if (!admits(a.set())) {
      throw Error("InvalidElement",
                  a.set().to_string() + " is not a member of " + to_string());
    }
  }

  Element SemigroupCtx::multiply(Element const& a, Element const& b) const {
    if (a.is_zero() || b.is_zero()) {
      return Element::zero();
    }
    Triple t = multiply_triples(a.as_triple(), b.as_triple());
    if (t.set.is_empty()) {
      if (!has_empty()) {
        throw Error("EmptyOutsideFamily",
                    a.to_string() + " * " + b.to_string()
                        + " has empty set but the family lacks it");
      }
      return Element::zero();
    }
    return Element::triple(t.i, t.j, std::move(t.set));
  }

  std::string SemigroupCtx::to_string() const {
    if (auto const* f = family()) {
      return f->to_string();
    }
    return "singletons";
  }

  ////////////////////////////////////////////////////////////////////////
  // Inverses, idempotents, order
  ////////////////////////////////////////////////////////////////////////

  Element inverse(Element const& a) {
    if (a.is_zero()) {
      return a;
    }
    return Element::triple(a.j(), a.i(), a.set());
  }

  bool is_idempotent(Element const& a) {
    return a.is_zero() || a.i() == a.j();
  }

  bool natural_leq(Element const& a, Element const& b) {
    if (a.is_zero()) {
      return true;
    }
    if (b.is_zero()) {
      return false;
    }
    std::int64_t const k = a.i() - b.i();
    return k >= 0 && a.j() - b.j() == k
           && is_subset(a.set(), shift(b.set(), -k));
  }

  bool idempotent_leq(Element const& e, Element const& f) {
    if (!is_idempotent(e) || !is_idempotent(f)) {
      throw Error("NotIdempotent", "idempotent_leq needs idempotents");
    }
    if (e.is_zero()) {
      return true;
    }
    if (f.is_zero()) {
      return false;
    }
    return e.i() >= f.i() && is_subset(e.set(), shift(f.set(), f.i() - e.i()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(GreenRel rel) {
    switch (rel) {
      case GreenRel::R: return "R";
      case GreenRel::L: return "L";
      case GreenRel::H: return "H";
      case GreenRel::D: return "D";
      case GreenRel::J: return "J";
    }
    return "?";
  }

  std::optional<GreenRel> parse_green_rel(std::string_view text) {
    for (GreenRel r :
         {GreenRel::R, GreenRel::L, GreenRel::H, GreenRel::D, GreenRel::J}) {
      if (text == to_string(r)) {
        return r;
      }
    }
    return std::nullopt;
  }

  bool green(Element const& a, Element const& b, GreenRel rel) {
    if (a.is_zero() || b.is_zero()) {
      return a.is_zero() && b.is_zero();
    }
    bool const same_set = a.set() == b.set();
    switch (rel) {
      case GreenRel::R: return same_set && a.i() == b.i();
      case GreenRel::L: return same_set && a.j() == b.j();
      case GreenRel::H: return same_set && a.i() == b.i() && a.j() == b.j();
      case GreenRel::D: return same_set;
      case GreenRel::J:
        return exists_shift_subset(a.set(), b.set()).has_value()
               && exists_shift_subset(b.set(), a.set()).has_value();
    }
    return false;
  }

  std::pair<Element, Element> green_witness(Element const& a,
                                            Element const& b,
                                            GreenRel       rel) {
    if (rel != GreenRel::R && rel != GreenRel::L && rel != GreenRel::D) {
      throw Error("NotRelated",
                  "witnesses are only produced for R, L and D");
    }
    if (!green(a, b, rel)) {
      throw Error("NotRelated",
                  a.to_string() + " and " + b.to_string() + " are not "
                      + std::string(to_string(rel)) + "-related");
    }
    if (a.is_zero()) {
      return {a, a};
    }
    switch (rel) {
      case GreenRel::R:
        return {Element::triple(a.j(), b.j(), a.set()),
                Element::triple(b.j(), a.j(), a.set())};
      case GreenRel::L:
        return {Element::triple(b.i(), a.i(), a.set()),
                Element::triple(a.i(), b.i(), a.set())};
      default: {
        Element c = Element::triple(a.i(), b.j(), a.set());
        return {c, inverse(c)};
      }
    }
  }

}  // namespace bzf
