#include "turancover/set_system.hpp"

#include <algorithm>
#include <string>

#include "turancover/errors.hpp"

namespace turancover {

SetSystem::SetSystem(std::size_t n, std::vector<std::vector<Element>> sets)
    : n_(n), sets_(std::move(sets)) {
  for (std::size_t id = 0; id < sets_.size(); ++id) {
    auto& s = sets_[id];
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw ParameterError("set " + std::to_string(id) + " repeats an element");
    }
    if (!s.empty() && s.back() >= n_) {
      throw ParameterError("set " + std::to_string(id) + " has element " +
                           std::to_string(s.back()) + " outside the universe");
    }
  }
}

SetSystem dual(const SetSystem& system) {
  std::vector<std::vector<Element>> by_element(system.universe_size());
  for (std::size_t id = 0; id < system.num_sets(); ++id) {
    for (Element x : system.set(id)) by_element[x].push_back(static_cast<Element>(id));
  }
  std::vector<std::vector<Element>> sets;
  for (auto& s : by_element) {
    if (!s.empty()) sets.push_back(std::move(s));
  }
  return SetSystem(system.num_sets(), std::move(sets));
}

}  // namespace turancover
