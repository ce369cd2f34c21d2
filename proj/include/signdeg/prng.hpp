#pragma once

#include <cstdint>

namespace signdeg {

// SplitMix64 (Steele, Lea, Flood 2014). Output i of the stream seeded with
// `seed` is finalize(seed + (i+1)*GAMMA), so values are random-access: the
// per-index splitting rule used by weight sampling and the test harness is
// simply "take output i".
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGamma;
    return finalize(state_);
  }

  // i-th output of the stream seeded with `seed`, without advancing state.
  static std::uint64_t at(std::uint64_t seed, std::uint64_t i) {
    return finalize(seed + (i + 1) * kGamma);
  }

  // Uniform in [0, bound) by rejection from the top of the 64-bit range.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }

  // Signed uniform in [lo, hi].
  long long next_in(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    next_below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool next_bool() { return next() & 1; }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace signdeg
