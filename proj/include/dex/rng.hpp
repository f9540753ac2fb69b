#pragma once

#include <cstdint>

namespace dex {

// splitmix64: tiny, fully specified, bit-reproducible everywhere. The
// standard <random> distributions are not guaranteed identical across
// library implementations, and seeded runs must be byte-identical.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Uniform in [lo, hi].
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(int percent) { return range(0, 99) < percent; }

 private:
  std::uint64_t state_;
};

}  // namespace dex
