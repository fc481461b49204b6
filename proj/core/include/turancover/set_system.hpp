#pragma once

#include <cstdint>
#include <vector>

namespace turancover {

using Element = std::uint32_t;

/// A family of subsets of the universe [0, n). Each set is stored sorted;
/// the order of the family is preserved (set ids are positions).
class SetSystem {
 public:
  SetSystem() = default;
  /// Sorts each set. Throws ParameterError on out-of-range or repeated elements.
  SetSystem(std::size_t n, std::vector<std::vector<Element>> sets);

  std::size_t universe_size() const { return n_; }
  std::size_t num_sets() const { return sets_.size(); }
  const std::vector<std::vector<Element>>& sets() const { return sets_; }
  const std::vector<Element>& set(std::size_t id) const { return sets_.at(id); }

  bool operator==(const SetSystem&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Element>> sets_;
};

/// Incidence dual: universe = set ids; one set per element that lies in at
/// least one set, listing the ids of the sets containing it.
SetSystem dual(const SetSystem& system);

}  // namespace turancover
