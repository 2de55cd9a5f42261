#ifndef BZF_PARTIAL_MAPS_HPP_
#define BZF_PARTIAL_MAPS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bzf/omega_set.hpp"

// Partial shift bijections of the integers, evaluated pointwise. These are
// the ground truth that the closed-form products are checked against.

namespace bzf {

  //! The partial bijection with domain [i), range [j) and rule n -> n - i + j.
  struct PartialShift {
    std::int64_t i;
    std::int64_t j;

    std::optional<std::int64_t> apply(std::int64_t n) const {
      if (n < i) {
        return std::nullopt;
      }
      return n - i + j;
    }

    bool operator==(PartialShift const&) const = default;
  };

  //! Composition in diagrammatic order: first a, then b.
  PartialShift compose_shifts(PartialShift const& a, PartialShift const& b);

  //! A partial shift restricted to i + offsets, a subset of its domain.
  struct RestrictedShift {
    PartialShift shift;
    EpSet        offsets;

    std::optional<std::int64_t> apply(std::int64_t n) const {
      if (!offsets.contains(n - shift.i)) {
        return std::nullopt;
      }
      return shift.apply(n);
    }
  };

  //! Finite explicit partial injection with domain and range in [-W, W].
  class WindowFn {
   public:
    explicit WindowFn(std::int64_t window) : _window(window) {}

    std::int64_t window() const noexcept {
      return _window;
    }

    std::map<std::int64_t, std::int64_t> const& graph() const noexcept {
      return _graph;
    }

    std::optional<std::int64_t> apply(std::int64_t n) const;

    std::vector<std::int64_t> domain() const;

    //! Throws std::invalid_argument if the pair leaves the window or breaks
    //! injectivity.
    void insert(std::int64_t from, std::int64_t to);

    bool operator==(WindowFn const&) const = default;

   private:
    std::int64_t                         _window;
    std::map<std::int64_t, std::int64_t> _graph;
    std::map<std::int64_t, std::int64_t> _inverse;
  };

  //! Graph of the map restricted to points whose source and image lie in
  //! [-W, W]. Requires W >= 1.
  WindowFn eval_window(PartialShift const& a, std::int64_t window);
  WindowFn eval_window(RestrictedShift const& a, std::int64_t window);

  //! x -> g(f(x)) on the common window.
  WindowFn compose(WindowFn const& f, WindowFn const& g);

  //! Domain of a;b within [-W, W], computed point by point.
  std::vector<std::int64_t> restricted_compose_dom(RestrictedShift const& a,
                                                   RestrictedShift const& b,
                                                   std::int64_t window);

  //! offset + set, a subset of the integers.
  struct ShiftedSet {
    std::int64_t offset;
    EpSet        set;

    std::vector<std::int64_t> members_in(std::int64_t window) const;
  };

  //! The three-case closed form of dom(a;b):
  //!
  //!   j1 <  i2: i1 - j1 + i2 + ((j1 - i2 + F1) & F2)
  //!   j1 == i2: i1 + (F1 & F2)
  //!   j1 >  i2: i1 + (F1 & (i2 - j1 + F2))
  ShiftedSet closed_form_dom(RestrictedShift const& a,
                             RestrictedShift const& b);

  inline constexpr std::int64_t default_window = 128;

  //! Widens base until it covers |i| + |j| + threshold + 2 * lcm(periods)
  //! for every map involved.
  std::int64_t covering_window(std::span<RestrictedShift const> maps,
                               std::int64_t base = default_window);

}  // namespace bzf

#endif  // BZF_PARTIAL_MAPS_HPP_
