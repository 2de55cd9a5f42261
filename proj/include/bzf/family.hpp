#ifndef BZF_FAMILY_HPP_
#define BZF_FAMILY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bzf/omega_set.hpp"

namespace bzf {

  //! A pair (left, right) and shift n with left & (-n + right) outside the
  //! candidate family.
  struct ClosureWitness {
    EpSet        left;
    EpSet        right;
    std::int64_t shift;
  };

  struct ClosedCheck {
    bool                          closed;
    std::optional<ClosureWitness> witness;
  };

  //! Shifts n >= horizon produce no new values of left & (-n + right):
  //! past threshold(right) the shifted set only depends on n mod period.
  std::int64_t shift_horizon(EpSet const& right);

  //! Decides whether candidate is closed under (F1, F2, n) -> F1 & (-n + F2)
  //! for all naturals n. Duplicates in candidate are ignored.
  ClosedCheck is_omega_closed(std::span<EpSet const> candidate);

  //! A finite omega-closed family of eventually periodic sets.
  class Family {
   public:
    static constexpr std::size_t default_cap = 4096;

    //! Least omega-closed family containing the generators. Throws
    //! Error("ClosureDiverged") once more than cap members are produced and
    //! std::invalid_argument for an empty generator list.
    static Family close(std::span<EpSet const> generators,
                        std::size_t            cap = default_cap);

    //! Adopts candidate as is; throws Error("NotOmegaClosed") with the
    //! witness in the message when it is not omega-closed.
    static Family from_members(std::span<EpSet const> candidate);

    //! Sorted, pairwise distinct.
    std::vector<EpSet> const& members() const noexcept {
      return _members;
    }

    bool has_empty() const noexcept {
      return _has_empty;
    }

    std::size_t size() const noexcept {
      return _members.size();
    }

    bool contains(EpSet const& set) const noexcept;

    //! Members other than the empty set.
    std::vector<EpSet> nonempty_members() const;

    std::string to_string() const;

    bool operator==(Family const&) const = default;

   private:
    explicit Family(std::vector<EpSet> members);

    std::vector<EpSet> _members;
    bool               _has_empty;
  };

}  // namespace bzf

#endif  // BZF_FAMILY_HPP_
