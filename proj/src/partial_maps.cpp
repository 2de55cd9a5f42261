#include "bzf/partial_maps.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace bzf {

  PartialShift compose_shifts(PartialShift const& a, PartialShift const& b) {
    std::int64_t const m = std::min(a.j, b.i);
    return {a.i + b.i - m, a.j + b.j - m};
  }

  std::optional<std::int64_t> WindowFn::apply(std::int64_t n) const {
    auto it = _graph.find(n);
    if (it == _graph.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::vector<std::int64_t> WindowFn::domain() const {
    std::vector<std::int64_t> out;
    out.reserve(_graph.size());
    for (auto const& [from, to] : _graph) {
      out.push_back(from);
    }
    return out;
  }

  void WindowFn::insert(std::int64_t from, std::int64_t to) {
    if (std::abs(from) > _window || std::abs(to) > _window) {
      throw std::invalid_argument("WindowFn::insert: point outside window");
    }
    auto const prev = _inverse.find(to);
    if ((prev != _inverse.end() && prev->second != from)
        || (_graph.contains(from) && _graph.at(from) != to)) {
      throw std::invalid_argument("WindowFn::insert: not injective");
    }
    _graph[from]  = to;
    _inverse[to] = from;
  }

  namespace {
    template <typename Map>
    WindowFn eval(Map const& a, std::int64_t window) {
      if (window < 1) {
        throw std::invalid_argument("eval_window: window must be >= 1");
      }
      WindowFn out(window);
      for (std::int64_t n = -window; n <= window; ++n) {
        auto image = a.apply(n);
        if (image && std::abs(*image) <= window) {
          out.insert(n, *image);
        }
      }
      return out;
    }
  }  // namespace

  WindowFn eval_window(PartialShift const& a, std::int64_t window) {
    return eval(a, window);
  }

  WindowFn eval_window(RestrictedShift const& a, std::int64_t window) {
    return eval(a, window);
  }

  WindowFn compose(WindowFn const& f, WindowFn const& g) {
    WindowFn out(std::min(f.window(), g.window()));
    for (auto const& [from, mid] : f.graph()) {
      if (auto to = g.apply(mid);
          to && std::abs(from) <= out.window() && std::abs(*to) <= out.window()) {
        out.insert(from, *to);
      }
    }
    return out;
  }

  std::vector<std::int64_t> restricted_compose_dom(RestrictedShift const& a,
                                                   RestrictedShift const& b,
                                                   std::int64_t window) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = -window; n <= window; ++n) {
      if (auto mid = a.apply(n); mid && b.apply(*mid)) {
        out.push_back(n);
      }
    }
    return out;
  }

  std::vector<std::int64_t> ShiftedSet::members_in(std::int64_t window) const {
    std::vector<std::int64_t> out;
    for (std::int64_t n = -window; n <= window; ++n) {
      if (set.contains(n - offset)) {
        out.push_back(n);
      }
    }
    return out;
  }

  ShiftedSet closed_form_dom(RestrictedShift const& a,
                             RestrictedShift const& b) {
    auto const [i1, j1] = a.shift;
    auto const [i2, j2] = b.shift;
    EpSet const& f1     = a.offsets;
    EpSet const& f2     = b.offsets;
    if (j1 < i2) {
      return {i1 - j1 + i2, intersect(shift(f1, j1 - i2), f2)};
    } else if (j1 == i2) {
      return {i1, intersect(f1, f2)};
    }
    return {i1, intersect(f1, shift(f2, i2 - j1))};
  }

  std::int64_t covering_window(std::span<RestrictedShift const> maps,
                               std::int64_t base) {
    std::int64_t reach  = 0;
    std::int64_t period = 1;
    for (RestrictedShift const& m : maps) {
      reach = std::max(reach,
                       std::abs(m.shift.i) + std::abs(m.shift.j)
                           + m.offsets.threshold());
      period = std::lcm(period, m.offsets.period());
    }
    return std::max(base, reach + 2 * period);
  }

}  // namespace bzf
