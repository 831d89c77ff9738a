#pragma once

#include <cmath>
#include <cstdint>

namespace beta2b {

// SplitMix64, used only to seed the main generator.
struct splitmix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

// xoshiro256** (Blackman & Vigna). Streams are derived per replicate, so no
// jump function is needed.
class xoshiro256ss {
 public:
  explicit xoshiro256ss(std::uint64_t seed) {
    splitmix64 sm{seed};
    for (auto& word : s_) word = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform draw strictly inside (0, 1).
  double uniform01() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  double exponential(double rate) { return -std::log(uniform01()) / rate; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

/// Independent stream for one replicate. The derivation depends only on
/// (seed, replicate), never on worker layout, which is what makes simulation
/// output invariant under the worker count.
inline xoshiro256ss replicate_stream(std::uint64_t seed,
                                     std::uint64_t replicate) {
  splitmix64 whiten{seed};
  const std::uint64_t base = whiten.next();
  return xoshiro256ss(base ^ (0xD1B54A32D192ED03ULL * (replicate + 1)));
}

}  // namespace beta2b
