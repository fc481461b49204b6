#include "turancover/setcover.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "turancover/errors.hpp"

namespace turancover {

bool is_simple_system(const SetSystem& s) {
  std::set<std::pair<Element, Element>> pairs;
  for (const auto& set : s.sets()) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        if (!pairs.insert({set[i], set[j]}).second) return false;
      }
    }
  }
  return true;
}

namespace {

void require_coverable(const SetSystem& s) {
  std::vector<char> seen(s.universe_size(), 0);
  for (const auto& set : s.sets()) {
    for (Element x : set) seen[x] = 1;
  }
  for (std::size_t x = 0; x < seen.size(); ++x) {
    if (!seen[x]) throw ParameterError("element " + std::to_string(x) + " lies in no set");
  }
}

}  // namespace

GreedyTrace greedy_set_cover(const SetSystem& s) {
  require_coverable(s);
  std::vector<char> covered(s.universe_size(), 0);
  std::size_t remaining = s.universe_size();
  GreedyTrace trace;
  while (remaining > 0) {
    std::size_t best_id = 0;
    std::size_t best_gain = 0;
    for (std::size_t id = 0; id < s.num_sets(); ++id) {
      std::size_t gain = 0;
      for (Element x : s.set(id)) gain += covered[x] == 0;
      if (gain > best_gain) {
        best_gain = gain;
        best_id = id;
      }
    }
    for (Element x : s.set(best_id)) covered[x] = 1;
    remaining -= best_gain;
    trace.picked.push_back(best_id);
    trace.newly_covered.push_back(best_gain);
    trace.uncovered_after.push_back(remaining);
  }
  return trace;
}

namespace {

class CoverSearch {
 public:
  explicit CoverSearch(const SetSystem& s)
      : s_(s), hits_(s.universe_size(), 0), containing_(s.universe_size()) {
    for (std::size_t id = 0; id < s.num_sets(); ++id) {
      for (Element x : s.set(id)) containing_[x].push_back(id);
      largest_ = std::max(largest_, s.set(id).size());
    }
  }

  std::size_t run(std::size_t upper) {
    best_ = upper;
    recurse(0, s_.universe_size());
    return best_;
  }

 private:
  void apply(std::size_t id, int delta, std::size_t& uncovered) {
    for (Element x : s_.set(id)) {
      if (delta > 0) {
        if (hits_[x]++ == 0) --uncovered;
      } else {
        if (--hits_[x] == 0) ++uncovered;
      }
    }
  }

  void recurse(std::size_t depth, std::size_t uncovered) {
    if (uncovered == 0) {
      best_ = std::min(best_, depth);
      return;
    }
    const std::size_t needed = (uncovered + largest_ - 1) / largest_;
    if (depth + needed >= best_) return;
    std::size_t pivot = 0;
    while (hits_[pivot]) ++pivot;
    for (std::size_t id : containing_[pivot]) {
      apply(id, +1, uncovered);
      recurse(depth + 1, uncovered);
      apply(id, -1, uncovered);
    }
  }

  const SetSystem& s_;
  std::vector<std::uint32_t> hits_;
  std::vector<std::vector<std::size_t>> containing_;
  std::size_t largest_ = 1;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t brute_force_set_cover(const SetSystem& s) {
  if (s.num_sets() > kMaxBruteForceSets) {
    throw ResourceError("brute-force set cover is limited to " +
                        std::to_string(kMaxBruteForceSets) + " sets");
  }
  require_coverable(s);
  if (s.universe_size() == 0) return 0;
  return CoverSearch(s).run(greedy_set_cover(s).size());
}

double simple_greedy_bound(std::size_t n) {
  return std::log(static_cast<double>(n)) / 2.0 + 1.0;
}

Rational greedy_ratio_check(const SetSystem& s, std::size_t opt) {
  if (!is_simple_system(s)) throw ParameterError("greedy ratio check requires a simple set system");
  if (opt == 0) throw ParameterError("optimum must be positive");
  const auto picks = greedy_set_cover(s).size();
  Rational ratio(static_cast<long>(picks), static_cast<long>(opt));
  if (to_double(ratio) > simple_greedy_bound(s.universe_size())) {
    throw VerificationError("greedy picked " + std::to_string(picks) + " sets against optimum " +
                            std::to_string(opt) + ", above ln(n)/2 + 1");
  }
  return ratio;
}

}  // namespace turancover
