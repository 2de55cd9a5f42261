#ifndef BZF_OMEGA_SET_HPP_
#define BZF_OMEGA_SET_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bzf {

  //! An eventually periodic subset of the naturals.
  //!
  //! A natural n is a member iff either n < threshold() and n occurs in
  //! head(), or n >= threshold() and residues()[n % period()] is set.
  //!
  //! Every value is kept in canonical form: the period is the least
  //! eventual period of the set, the threshold is the least index from which
  //! that period holds, and an empty tail has period 1. Two EpSets are equal
  //! as sets iff they compare equal field by field.
  class EpSet {
   public:
    using value_type = std::int64_t;

    //! The empty set.
    EpSet();

    static EpSet empty() {
      return EpSet();
    }

    //! Finite set; throws std::invalid_argument on negative members.
    static EpSet finite(std::vector<value_type> members);

    //! The ray [k) intersected with the naturals.
    static EpSet ray(value_type k);

    //! {start + step * n : n natural}; requires start >= 0, step >= 1.
    static EpSet progression(value_type start, value_type step);

    //! Builds and canonicalizes from raw parts. Head entries must be
    //! naturals below threshold, period >= 1, residues.size() == period.
    static EpSet from_parts(std::vector<value_type> head,
                            value_type               threshold,
                            value_type               period,
                            std::vector<bool>        residues);

    bool contains(value_type n) const noexcept;

    bool is_empty() const noexcept {
      return _head.empty() && !has_tail();
    }

    //! True iff the periodic tail contains at least one residue.
    bool has_tail() const noexcept;

    bool is_finite() const noexcept {
      return !has_tail();
    }

    //! Number of members, or nullopt for infinite sets.
    std::optional<std::size_t> size() const noexcept;

    //! Least member, if any.
    std::optional<value_type> min() const noexcept;

    std::vector<value_type> const& head() const noexcept {
      return _head;
    }
    value_type threshold() const noexcept {
      return _threshold;
    }
    value_type period() const noexcept {
      return _period;
    }
    std::vector<bool> const& residues() const noexcept {
      return _residues;
    }

    //! Members below bound, in increasing order.
    std::vector<value_type> members_below(value_type bound) const;

    //! Canonical text form: {} / {a,b} / [k) / a+p*w joined by '|'.
    std::string to_string() const;

    auto operator<=>(EpSet const&) const = default;
    bool operator==(EpSet const&) const  = default;

   private:
    void canonicalize();

    std::vector<value_type> _head;
    value_type              _threshold;
    value_type              _period;
    std::vector<bool>       _residues;
  };

  //! {d + k : k in F} with negative results discarded.
  EpSet shift(EpSet const& set, EpSet::value_type d);

  EpSet intersect(EpSet const& a, EpSet const& b);

  EpSet unite(EpSet const& a, EpSet const& b);

  bool is_subset(EpSet const& a, EpSet const& b);

  //! threshold(a) + threshold(b) + 2 * lcm(period(a), period(b)).
  EpSet::value_type shift_subset_bound(EpSet const& a, EpSet const& b);

  //! Least k in [0, shift_subset_bound(a, b)] with k + a contained in b.
  std::optional<EpSet::value_type> exists_shift_subset(EpSet const& a,
                                                       EpSet const& b);

  //! True iff the set is empty or a ray [k).
  bool is_inductive(EpSet const& set);

  std::optional<EpSet::value_type> as_singleton(EpSet const& set);

  //! (i0, j0) with set == i0 + j0 * omega, j0 >= 1.
  std::optional<std::pair<EpSet::value_type, EpSet::value_type>>
  as_arith_progression(EpSet const& set);

}  // namespace bzf

#endif  // BZF_OMEGA_SET_HPP_
