#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ggt/report.hpp"
#include "ggt/rng.hpp"
#include "ggt/word.hpp"

namespace ggt {

inline constexpr std::size_t kDefaultEnumerationBound = 10'000;

class BoundExceeded : public std::runtime_error {
 public:
  explicit BoundExceeded(std::size_t bound)
      : std::runtime_error("group has more than " + std::to_string(bound) +
                           " elements; choose a bigger bound or a smaller instance"),
        bound_(bound) {}
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t bound_;
};

/// Type-erased group over element type E. Elements must be canonical:
/// operator== on E is group equality.
template <class E>
struct GroupOracle {
  using element_type = E;

  std::string name;
  E identity{};
  std::function<E(E const&, E const&)> multiply;
  std::function<E(E const&)> invert;
  std::function<E(SplitMix64&)> random;
  std::function<std::string(E const&)> format;
  /// All elements when the group has at most `bound` of them; nullopt when
  /// the group is infinite or not enumerable. Throws BoundExceeded for a
  /// finite group that is too large.
  std::function<std::optional<std::vector<E>>(std::size_t bound)> enumerate;
  /// Element order: 0 for infinite, nullopt when undecidable here.
  std::function<std::optional<std::uint64_t>(E const&)> order;

  bool is_identity(E const& g) const { return g == identity; }

  E conjugate(E const& g, E const& h) const {  // h^-1 g h
    return multiply(multiply(invert(h), g), h);
  }

  E power(E const& g, std::int64_t k) const {
    E base = k < 0 ? invert(g) : g;
    E out = identity;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) {
      out = multiply(out, base);
    }
    return out;
  }

  std::optional<std::vector<E>> elements(std::size_t bound = kDefaultEnumerationBound) const {
    if (!enumerate) {
      return std::nullopt;
    }
    return enumerate(bound);
  }

  /// Order of g, falling back to repeated multiplication up to `bound`.
  std::optional<std::uint64_t> element_order(E const& g,
                                             std::size_t bound = kDefaultEnumerationBound) const {
    if (order) {
      return order(g);
    }
    E acc = g;
    for (std::uint64_t k = 1; k <= bound; ++k) {
      if (is_identity(acc)) {
        return k;
      }
      acc = multiply(acc, g);
    }
    return std::nullopt;
  }
};

/// Free group on x1..x<rank>; random elements are reduced words of length
/// at most `sample_length`.
GroupOracle<Word> free_group_oracle(std::uint32_t rank, std::size_t sample_length = 8);

/// Cyclic group Z/m written additively on integers; m == 0 gives Z.
GroupOracle<std::int64_t> cyclic_group_oracle(std::uint64_t m, std::int64_t sample_radius = 6);

template <class A, class B>
GroupOracle<std::pair<A, B>> direct_product(GroupOracle<A> g1, GroupOracle<B> g2) {
  GroupOracle<std::pair<A, B>> p;
  p.name = g1.name + " x " + g2.name;
  p.identity = {g1.identity, g2.identity};
  p.multiply = [g1, g2](auto const& a, auto const& b) {
    return std::pair<A, B>{g1.multiply(a.first, b.first), g2.multiply(a.second, b.second)};
  };
  p.invert = [g1, g2](auto const& a) {
    return std::pair<A, B>{g1.invert(a.first), g2.invert(a.second)};
  };
  p.random = [g1, g2](SplitMix64& rng) {
    A a = g1.random(rng);
    B b = g2.random(rng);
    return std::pair<A, B>{std::move(a), std::move(b)};
  };
  p.format = [g1, g2](auto const& a) {
    return "(" + g1.format(a.first) + ", " + g2.format(a.second) + ")";
  };
  if (g1.enumerate && g2.enumerate) {
    p.enumerate = [g1, g2](std::size_t bound) -> std::optional<std::vector<std::pair<A, B>>> {
      auto e1 = g1.enumerate(bound);
      auto e2 = g2.enumerate(bound);
      if (!e1 || !e2) {
        return std::nullopt;
      }
      if (!e1->empty() && e2->size() > bound / e1->size()) {
        throw BoundExceeded(bound);
      }
      std::vector<std::pair<A, B>> out;
      out.reserve(e1->size() * e2->size());
      for (auto const& a : *e1) {
        for (auto const& b : *e2) {
          out.emplace_back(a, b);
        }
      }
      return out;
    };
  }
  return p;
}

/// Randomized group-law check: associativity, identity and inverse laws on
/// `triples` seeded triples (all triples of a small finite group when the
/// group enumerates below the bound and triples >= |G|^3).
template <class E>
Report check_group_laws(GroupOracle<E> const& g, std::size_t triples, std::uint64_t seed) {
  Report r;
  r.scenario = "group_laws";
  r.parameters["group"] = g.name;
  r.parameters["triples"] = std::to_string(triples);
  r.seed = seed;
  SplitMix64 rng(seed);
  auto check = [&](E const& a, E const& b, E const& c) {
    r.check(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)),
            Violation{"associativity", std::nullopt, {g.format(a), g.format(b), g.format(c)}, {}});
    r.check(g.multiply(a, g.identity) == a && g.multiply(g.identity, a) == a,
            Violation{"identity", std::nullopt, {g.format(a)}, {}});
    r.check(g.is_identity(g.multiply(a, g.invert(a))),
            Violation{"inverse", std::nullopt, {g.format(a)}, {}});
  };
  std::optional<std::vector<E>> all;
  try {
    all = g.elements(64);
  } catch (BoundExceeded const&) {
  }
  if (all && all->size() * all->size() * all->size() <= triples) {
    r.notes.push_back("exhaustive over all " + std::to_string(all->size()) + " elements");
    for (auto const& a : *all) {
      for (auto const& b : *all) {
        for (auto const& c : *all) {
          check(a, b, c);
        }
      }
    }
    return r;
  }
  for (std::size_t i = 0; i < triples; ++i) {
    E a = g.random(rng);
    E b = g.random(rng);
    E c = g.random(rng);
    check(a, b, c);
  }
  return r;
}

}  // namespace ggt
