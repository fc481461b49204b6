#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace turancover {

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Calls `fn(subset)` for every k-subset of `items` in lexicographic order of
/// positions. `subset` is reused between calls.
template <typename T, typename Fn>
void for_each_subset(std::span<const T> items, std::size_t k, Fn&& fn) {
  const std::size_t n = items.size();
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<T> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = items[idx[i]];
    fn(static_cast<const std::vector<T>&>(subset));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace turancover
