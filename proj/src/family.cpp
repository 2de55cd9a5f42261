#include "bzf/family.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "bzf/error.hpp"

namespace bzf {

  std::int64_t shift_horizon(EpSet const& right) {
    return right.threshold() + right.period();
  }

  ClosedCheck is_omega_closed(std::span<EpSet const> candidate) {
    std::set<EpSet> const members(candidate.begin(), candidate.end());
    for (EpSet const& left : members) {
      for (EpSet const& right : members) {
        std::int64_t const horizon = shift_horizon(right);
        for (std::int64_t n = 0; n < horizon; ++n) {
          if (!members.contains(intersect(left, shift(right, -n)))) {
            return {false, ClosureWitness{left, right, n}};
          }
        }
      }
    }
    return {true, std::nullopt};
  }

  Family::Family(std::vector<EpSet> members)
      : _members(std::move(members)), _has_empty(false) {
    std::sort(_members.begin(), _members.end());
    _members.erase(std::unique(_members.begin(), _members.end()),
                   _members.end());
    _has_empty = std::any_of(_members.begin(),
                             _members.end(),
                             [](EpSet const& s) { return s.is_empty(); });
  }

  Family Family::close(std::span<EpSet const> generators, std::size_t cap) {
    if (generators.empty()) {
      throw std::invalid_argument("Family::close: no generators");
    }
    std::set<EpSet>   members;
    std::deque<EpSet> pending;
    auto              add = [&](EpSet set) {
      if (members.insert(set).second) {
        if (members.size() > cap) {
          throw Error("ClosureDiverged",
                      "closure exceeded " + std::to_string(cap) + " members");
        }
        pending.push_back(std::move(set));
      }
    };
    for (EpSet const& g : generators) {
      add(g);
    }
    while (!pending.empty()) {
      EpSet const x = std::move(pending.front());
      pending.pop_front();
      std::vector<EpSet> const snapshot(members.begin(), members.end());
      for (EpSet const& y : snapshot) {
        for (std::int64_t n = 0; n < shift_horizon(y); ++n) {
          add(intersect(x, shift(y, -n)));
        }
        for (std::int64_t n = 0; n < shift_horizon(x); ++n) {
          add(intersect(y, shift(x, -n)));
        }
      }
    }
    return Family(std::vector<EpSet>(members.begin(), members.end()));
  }

  Family Family::from_members(std::span<EpSet const> candidate) {
    if (candidate.empty()) {
      throw std::invalid_argument("Family::from_members: no members");
    }
    ClosedCheck check = is_omega_closed(candidate);
    if (!check.closed) {
      ClosureWitness const& w = *check.witness;
      throw Error("NotOmegaClosed",
                  "family is not omega-closed: " + w.left.to_string() + " & (-"
                      + std::to_string(w.shift) + " + " + w.right.to_string()
                      + ") is missing");
    }
    return Family(std::vector<EpSet>(candidate.begin(), candidate.end()));
  }

  bool Family::contains(EpSet const& set) const noexcept {
    return std::binary_search(_members.begin(), _members.end(), set);
  }

  std::vector<EpSet> Family::nonempty_members() const {
    std::vector<EpSet> out;
    std::copy_if(_members.begin(),
                 _members.end(),
                 std::back_inserter(out),
                 [](EpSet const& s) { return !s.is_empty(); });
    return out;
  }

  std::string Family::to_string() const {
    std::string out = "family{ ";
    for (std::size_t k = 0; k < _members.size(); ++k) {
      out += (k == 0 ? "" : "; ") + _members[k].to_string();
    }
    return out + " }";
  }

}  // namespace bzf
