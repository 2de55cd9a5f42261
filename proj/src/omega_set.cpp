#include "bzf/omega_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bzf {

  using value_type = EpSet::value_type;

  namespace {
    value_type mod(value_type a, value_type m) {
      value_type r = a % m;
      return r < 0 ? r + m : r;
    }
  }  // namespace

  EpSet::EpSet() : _head(), _threshold(0), _period(1), _residues(1, false) {}

  EpSet EpSet::finite(std::vector<value_type> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && members.front() < 0) {
      throw std::invalid_argument("EpSet::finite: negative member");
    }
    value_type threshold = members.empty() ? 0 : members.back() + 1;
    return from_parts(std::move(members), threshold, 1, {false});
  }

  EpSet EpSet::ray(value_type k) {
    return from_parts({}, std::max<value_type>(k, 0), 1, {true});
  }

  EpSet EpSet::progression(value_type start, value_type step) {
    if (start < 0 || step < 1) {
      throw std::invalid_argument(
          "EpSet::progression: need start >= 0 and step >= 1");
    }
    std::vector<bool> residues(step, false);
    residues[start % step] = true;
    return from_parts({}, start, step, std::move(residues));
  }

  EpSet EpSet::from_parts(std::vector<value_type> head,
                          value_type               threshold,
                          value_type               period,
                          std::vector<bool>        residues) {
    if (threshold < 0 || period < 1
        || residues.size() != static_cast<std::size_t>(period)) {
      throw std::invalid_argument("EpSet::from_parts: malformed tail");
    }
    std::sort(head.begin(), head.end());
    head.erase(std::unique(head.begin(), head.end()), head.end());
    if (!head.empty() && (head.front() < 0 || head.back() >= threshold)) {
      throw std::invalid_argument(
          "EpSet::from_parts: head entries must lie in [0, threshold)");
    }
    EpSet result;
    result._head      = std::move(head);
    result._threshold = threshold;
    result._period    = period;
    result._residues  = std::move(residues);
    result.canonicalize();
    return result;
  }

  void EpSet::canonicalize() {
    // Least period: a divisor d of the current period such that the residue
    // pattern repeats with step d.
    for (value_type d = 1; d < _period; ++d) {
      if (_period % d != 0) {
        continue;
      }
      bool periodic = true;
      for (value_type x = d; x < _period && periodic; ++x) {
        periodic = _residues[x] == _residues[x % d];
      }
      if (periodic) {
        _residues.resize(d);
        _period = d;
        break;
      }
    }
    // Least threshold: pull it down while the member just below agrees with
    // the tail pattern.
    while (_threshold > 0) {
      value_type n       = _threshold - 1;
      bool       in_head = !_head.empty() && _head.back() == n;
      if (in_head != _residues[n % _period]) {
        break;
      }
      if (in_head) {
        _head.pop_back();
      }
      --_threshold;
    }
  }

  bool EpSet::has_tail() const noexcept {
    return std::find(_residues.begin(), _residues.end(), true)
           != _residues.end();
  }

  bool EpSet::contains(value_type n) const noexcept {
    if (n < 0) {
      return false;
    }
    if (n < _threshold) {
      return std::binary_search(_head.begin(), _head.end(), n);
    }
    return _residues[n % _period];
  }

  std::optional<std::size_t> EpSet::size() const noexcept {
    if (has_tail()) {
      return std::nullopt;
    }
    return _head.size();
  }

  std::optional<value_type> EpSet::min() const noexcept {
    if (!_head.empty()) {
      return _head.front();
    }
    for (value_type n = _threshold; n < _threshold + _period; ++n) {
      if (_residues[n % _period]) {
        return n;
      }
    }
    return std::nullopt;
  }

  std::vector<value_type> EpSet::members_below(value_type bound) const {
    std::vector<value_type> out;
    for (value_type n = 0; n < bound; ++n) {
      if (contains(n)) {
        out.push_back(n);
      }
    }
    return out;
  }

  std::string EpSet::to_string() const {
    std::vector<std::string> parts;
    if (!_head.empty()) {
      std::string s = "{";
      for (std::size_t k = 0; k < _head.size(); ++k) {
        s += (k == 0 ? "" : ",") + std::to_string(_head[k]);
      }
      parts.push_back(s + "}");
    }
    if (_period == 1 && _residues[0]) {
      parts.push_back("[" + std::to_string(_threshold) + ")");
    } else {
      for (value_type n = _threshold; n < _threshold + _period; ++n) {
        if (_residues[n % _period]) {
          parts.push_back(std::to_string(n) + "+" + std::to_string(_period)
                          + "*w");
        }
      }
    }
    if (parts.empty()) {
      return "{}";
    }
    std::string out = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) {
      out += "|" + parts[k];
    }
    return out;
  }

  EpSet shift(EpSet const& set, value_type d) {
    value_type const        p = set.period();
    std::vector<bool>       residues(p);
    for (value_type r = 0; r < p; ++r) {
      residues[r] = set.residues()[mod(r - d, p)];
    }
    std::vector<value_type> head;
    for (value_type h : set.head()) {
      if (h + d >= 0) {
        head.push_back(h + d);
      }
    }
    value_type threshold = std::max<value_type>(set.threshold() + d, 0);
    return EpSet::from_parts(
        std::move(head), threshold, p, std::move(residues));
  }

  namespace {
    template <typename Op>
    EpSet combine(EpSet const& a, EpSet const& b, Op op) {
      value_type const  threshold = std::max(a.threshold(), b.threshold());
      value_type const  period    = std::lcm(a.period(), b.period());
      std::vector<bool> residues(period);
      for (value_type r = 0; r < period; ++r) {
        residues[r] = op(a.residues()[r % a.period()],
                         b.residues()[r % b.period()]);
      }
      std::vector<value_type> head;
      for (value_type n = 0; n < threshold; ++n) {
        if (op(a.contains(n), b.contains(n))) {
          head.push_back(n);
        }
      }
      return EpSet::from_parts(
          std::move(head), threshold, period, std::move(residues));
    }
  }  // namespace

  EpSet intersect(EpSet const& a, EpSet const& b) {
    if (a.is_empty() || b.is_empty()) {
      return EpSet();
    }
    if (a == b) {
      return a;
    }
    return combine(a, b, [](bool x, bool y) { return x && y; });
  }

  EpSet unite(EpSet const& a, EpSet const& b) {
    return combine(a, b, [](bool x, bool y) { return x || y; });
  }

  bool is_subset(EpSet const& a, EpSet const& b) {
    value_type const end = std::max(a.threshold(), b.threshold())
                           + std::lcm(a.period(), b.period());
    for (value_type n = 0; n < end; ++n) {
      if (a.contains(n) && !b.contains(n)) {
        return false;
      }
    }
    return true;
  }

  value_type shift_subset_bound(EpSet const& a, EpSet const& b) {
    return a.threshold() + b.threshold() + 2 * std::lcm(a.period(), b.period());
  }

  std::optional<value_type> exists_shift_subset(EpSet const& a,
                                                EpSet const& b) {
    value_type const bound = shift_subset_bound(a, b);
    for (value_type k = 0; k <= bound; ++k) {
      if (is_subset(shift(a, k), b)) {
        return k;
      }
    }
    return std::nullopt;
  }

  bool is_inductive(EpSet const& set) {
    return set.is_empty()
           || (set.head().empty() && set.period() == 1 && set.residues()[0]);
  }

  std::optional<value_type> as_singleton(EpSet const& set) {
    if (set.has_tail() || set.head().size() != 1) {
      return std::nullopt;
    }
    return set.head().front();
  }

  std::optional<std::pair<value_type, value_type>>
  as_arith_progression(EpSet const& set) {
    if (!set.head().empty()
        || std::count(set.residues().begin(), set.residues().end(), true)
               != 1) {
      return std::nullopt;
    }
    return std::make_pair(*set.min(), set.period());
  }

}  // namespace bzf
