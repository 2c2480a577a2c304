#include "ggt/group.hpp"

namespace ggt {

GroupOracle<Word> free_group_oracle(std::uint32_t rank, std::size_t sample_length) {
  GroupOracle<Word> o;
  o.name = "F" + std::to_string(rank);
  o.multiply = [](Word const& a, Word const& b) { return multiply(a, b); };
  o.invert = [](Word const& a) { return invert(a); };
  o.random = [rank, sample_length](SplitMix64& rng) {
    if (rank == 0) {
      return Word{};
    }
    auto const len = rng.below(sample_length + 1);
    return random_reduced_word(rng, rank, len);
  };
  o.format = [](Word const& w) { return to_string(w); };
  o.order = [](Word const& w) -> std::optional<std::uint64_t> { return w.empty() ? 1 : 0; };
  if (rank == 0) {
    o.enumerate = [](std::size_t) -> std::optional<std::vector<Word>> {
      return std::vector<Word>{Word{}};
    };
  }
  return o;
}

GroupOracle<std::int64_t> cyclic_group_oracle(std::uint64_t m, std::int64_t sample_radius) {
  GroupOracle<std::int64_t> o;
  auto const mod = static_cast<std::int64_t>(m);
  auto reduce = [mod](std::int64_t k) {
    if (mod == 0) {
      return k;
    }
    k %= mod;
    return k < 0 ? k + mod : k;
  };
  o.name = m == 0 ? "Z" : "C" + std::to_string(m);
  o.identity = 0;
  o.multiply = [reduce](std::int64_t a, std::int64_t b) { return reduce(a + b); };
  o.invert = [reduce](std::int64_t a) { return reduce(-a); };
  o.random = [mod, sample_radius, reduce](SplitMix64& rng) {
    return mod == 0 ? rng.range(-sample_radius, sample_radius)
                    : reduce(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(mod))));
  };
  o.format = [](std::int64_t a) { return "g^" + std::to_string(a); };
  o.order = [mod](std::int64_t a) -> std::optional<std::uint64_t> {
    if (a == 0) {
      return 1;
    }
    if (mod == 0) {
      return 0;
    }
    std::int64_t g = mod;
    std::int64_t b = a;
    while (b != 0) {
      std::int64_t t = g % b;
      g = b;
      b = t;
    }
    return static_cast<std::uint64_t>(mod / g);
  };
  if (m != 0) {
    o.enumerate = [mod](std::size_t bound) -> std::optional<std::vector<std::int64_t>> {
      if (static_cast<std::size_t>(mod) > bound) {
        throw BoundExceeded(bound);
      }
      std::vector<std::int64_t> out;
      for (std::int64_t k = 0; k < mod; ++k) {
        out.push_back(k);
      }
      return out;
    };
  }
  return o;
}

}  // namespace ggt
