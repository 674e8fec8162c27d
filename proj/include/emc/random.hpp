#pragma once

#include <cstdint>

#include "emc/family.hpp"

namespace emc {

// SplitMix64: tiny, seedable, and identical on every platform, unlike the
// distribution templates in <random>.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0; rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// Uniformly random m-member family on ([n],k) (distinct members, chosen by
// Floyd's algorithm over colex ranks). Requires m <= C(n,k).
Family random_family(int n, int k, std::uint64_t m, SplitMix64& rng);

}  // namespace emc
