#pragma once

#include <cstdint>
#include <limits>

namespace ggt {

/// SplitMix64 (Steele, Lea, Flood 2014). Every seeded stream in the engine
/// is drawn from this generator so reports reproduce bit-for-bit on any
/// platform; the standard library distributions are never used.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t operator()() noexcept { return next(); }

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() {
    return std::numeric_limits<std::uint64_t>::max();
  }

  /// Uniform integer in [0, bound). Rejection sampling, so unbiased.
  std::uint64_t below(std::uint64_t bound) noexcept {
    if (bound <= 1) {
      return 0;
    }
    std::uint64_t const limit = max() - max() % bound;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return r % bound;
  }

  /// Uniform integer in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) noexcept {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() noexcept { return (next() >> 63) != 0; }

  /// Independent child stream; the parent advances by one draw.
  SplitMix64 split() noexcept { return SplitMix64(next() ^ 0x6A09E667F3BCC909ULL); }

 private:
  std::uint64_t state_;
};

}  // namespace ggt
