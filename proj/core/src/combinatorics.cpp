#include "turancover/combinatorics.hpp"

#include <limits>

namespace turancover {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  __extension__ using Wide = unsigned __int128;
  Wide result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace turancover
