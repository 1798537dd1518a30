#pragma once

#include <cstdint>

namespace composites {

// Default seed for every randomized procedure; reports echo the seed so
// reruns are byte-identical.
inline constexpr std::uint64_t kDefaultSeed = 20240917u;

// splitmix64: tiny, stable across platforms, good enough for test-point
// sampling and equal-degree splitting.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound > 0. Modulo bias is irrelevant here.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Derive an independent stream (per claim, per sample batch).
  SplitMix64 fork(std::uint64_t salt) {
    SplitMix64 s(state_ ^ (salt * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull));
    s.next();
    return s;
  }

 private:
  std::uint64_t state_;
};

}  // namespace composites
