#pragma once

#include <cstdint>

namespace transit {

// splitmix64; self-contained so that seeded runs are reproducible across
// standard libraries and platforms.
struct rng64 {
  std::uint64_t state;

  explicit rng64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound); bound > 0
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // uniform in [lo, hi] inclusive
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // uniform in [0, 1)
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace transit
