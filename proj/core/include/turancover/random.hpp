#pragma once

#include <cstdint>
#include <random>

namespace turancover {

/// SplitMix64 finalizer; used to derive per-trial seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for trial `index` under `root`: root XOR splitmix64(index).
inline std::uint64_t child_seed(std::uint64_t root, std::uint64_t index) {
  return root ^ splitmix64(index);
}

/// Thin wrapper over mt19937_64 whose derived draws do not depend on the
/// standard library's distribution implementations, so outputs are identical
/// across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return p >= 1.0 || uniform01() < p; }
  /// Uniform integer in [0, bound), bound > 0; rejection sampling.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace turancover
