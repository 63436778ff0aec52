#pragma once

#include <cmath>
#include <cstdint>

namespace tsap {

// Counter-based generator: output i is a bijective mix of seed + i, so any
// position in the stream can be addressed directly and disjoint substreams
// are cheap to derive. Every random object in the library records the seed
// it was built from.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform index in [0, m) via 128-bit multiply-shift.
  std::uint64_t next_index(std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * m) >> 64);
  }

  // +1 or -1 with equal probability.
  double next_sign() { return (next_u64() >> 63) ? 1.0 : -1.0; }

  // Standard normal via Box-Muller (cosine branch; two uniforms consumed).
  double next_gaussian() {
    double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  // Independent stream for a sub-task (trial index, phase tag, ...).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed ^ (0xD1B54A32D192ED03ULL + stream * 0x2545F4914F6CDD1DULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace tsap
