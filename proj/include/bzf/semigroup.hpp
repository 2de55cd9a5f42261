#ifndef BZF_SEMIGROUP_HPP_
#define BZF_SEMIGROUP_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "bzf/family.hpp"
#include "bzf/omega_set.hpp"

namespace bzf {

  //! (i, j, F) in B_Z x P(omega), before the Rees quotient.
  struct Triple {
    std::int64_t i;
    std::int64_t j;
    EpSet        set;

    auto operator<=>(Triple const&) const = default;
    bool operator==(Triple const&) const  = default;
  };

  //! The product on B_Z x P(omega):
  //!
  //!   j1 <  i2: (i1 - j1 + i2, j2, (j1 - i2 + F1) & F2)
  //!   j1 == i2: (i1, j2, F1 & F2)
  //!   j1 >  i2: (i1, j1 - i2 + j2, F1 & (i2 - j1 + F2))
  Triple multiply_triples(Triple const& a, Triple const& b);

  //! An element of the semigroup: the zero or a triple with nonempty set.
  class Element {
   public:
    static Element zero() {
      return Element();
    }

    //! Unvalidated; prefer SemigroupCtx::make. Throws std::invalid_argument
    //! if set is empty.
    static Element triple(std::int64_t i, std::int64_t j, EpSet set);

    bool is_zero() const noexcept {
      return !_triple.has_value();
    }

    //! Preconditions: !is_zero().
    std::int64_t i() const {
      return _triple->i;
    }
    std::int64_t j() const {
      return _triple->j;
    }
    EpSet const& set() const {
      return _triple->set;
    }
    Triple const& as_triple() const {
      return *_triple;
    }

    //! "(i,j;<set>)" or "0".
    std::string to_string() const;

    auto operator<=>(Element const&) const = default;
    bool operator==(Element const&) const  = default;

   private:
    Element() = default;
    std::optional<Triple> _triple;
  };

  //! Marker for the infinite family of all sets with at most one member.
  struct SingletonFamily {
    bool operator==(SingletonFamily const&) const = default;
  };

  //! The ambient omega-closed family against which elements are validated.
  class SemigroupCtx {
   public:
    explicit SemigroupCtx(Family family);
    explicit SemigroupCtx(SingletonFamily);

    //! Context over all subsets of omega with at most one member.
    static SemigroupCtx singletons() {
      return SemigroupCtx(SingletonFamily{});
    }

    bool has_empty() const noexcept;

    //! Membership of set in the ambient family.
    bool admits(EpSet const& set) const;

    //! nullptr for the symbolic singleton family.
    Family const* family() const noexcept {
      return std::get_if<Family>(&_family);
    }

    bool is_singletons() const noexcept {
      return std::holds_alternative<SingletonFamily>(_family);
    }

    //! Validated construction; throws Error("InvalidElement").
    Element make(std::int64_t i, std::int64_t j, EpSet set) const;
    Element zero() const;

    //! Throws Error("InvalidElement") unless a belongs to this context.
    void validate(Element const& a) const;

    //! Zero is absorbing; a product triple with empty set collapses to zero.
    //! Throws Error("EmptyOutsideFamily") when that happens in a context
    //! without the empty set.
    Element multiply(Element const& a, Element const& b) const;

    template <typename... Rest>
    Element multiply(Element const& a,
                     Element const& b,
                     Element const& c,
                     Rest const&... rest) const {
      return multiply(multiply(a, b), c, rest...);
    }

    std::string to_string() const;

   private:
    std::variant<Family, SingletonFamily> _family;
  };

  Element inverse(Element const& a);

  bool is_idempotent(Element const& a);

  //! The natural partial order: zero lies below everything; for triples,
  //! i1 - i2 == j1 - j2 == k >= 0 and F1 is contained in -k + F2.
  bool natural_leq(Element const& a, Element const& b);

  //! Order on idempotents: i >= j and F1 contained in j - i + F2.
  //! Throws Error("NotIdempotent").
  bool idempotent_leq(Element const& e, Element const& f);

  enum class GreenRel { R, L, H, D, J };

  std::string_view to_string(GreenRel rel);
  std::optional<GreenRel> parse_green_rel(std::string_view text);

  //! Closed-form Green criteria. Zero is only related to itself.
  bool green(Element const& a, Element const& b, GreenRel rel);

  //! For R: (x, y) with a*x == b and b*y == a.
  //! For L: (x, y) with x*a == b and y*b == a.
  //! For D: (c, c^-1) where c R a and c L b.
  //! Throws Error("NotRelated") when green(a, b, rel) is false, and for
  //! relations other than R, L, D.
  std::pair<Element, Element> green_witness(Element const& a,
                                            Element const& b,
                                            GreenRel       rel);

}  // namespace bzf

#endif  // BZF_SEMIGROUP_HPP_
