#pragma once

#include <cstdint>

namespace eqb {

/// Stateless counter-based generator: value(counter) depends only on
/// (key, stream, counter), so draws reproduce on any platform and in any
/// evaluation order. Mixing uses the SplitMix64 finalizer.
class CounterRng {
 public:
  constexpr CounterRng(std::uint64_t key, std::uint64_t stream)
      : base_(mix(key + kGolden * (stream + 1))) {}

  constexpr std::uint64_t bits(std::uint64_t counter) const {
    return mix(base_ ^ (kGolden * (counter + 1)));
  }

  /// Uniform in [0, 1) with 53 random bits.
  constexpr double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  std::uint64_t base_;
};

}  // namespace eqb
