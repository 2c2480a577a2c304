#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ggt/group.hpp"
#include "ggt/permutation.hpp"
#include "ggt/report.hpp"
#include "ggt/rng.hpp"
#include "ggt/word.hpp"

namespace ggt {

/// A group with a descending chain of normal subgroups P_0 >= P_1 >= ...,
/// given as membership predicates. P_0 is the ambient (or, after a shift,
/// the part of it where `in_ambient` holds).
template <class E>
struct FilteredGroup {
  GroupOracle<E> ambient;
  std::function<bool(std::size_t, E const&)> member;
  /// Seeded stream of ambient elements used by the checkers.
  std::function<std::vector<E>(std::size_t count, std::uint64_t seed)> sample;
  std::function<bool(E const&)> in_ambient = [](E const&) { return true; };
  std::string description;
  /// Descriptor understood by `ggt replay`; empty when not replayable.
  std::string replay_id;
};

/// Elements the checkers should run over: everything when the ambient is
/// finite and small, otherwise `count` seeded samples.
template <class E>
std::pair<std::vector<E>, bool> checker_pool(FilteredGroup<E> const& a, std::size_t count,
                                             std::uint64_t seed,
                                             std::size_t exhaustive_limit = 400) {
  try {
    if (auto all = a.ambient.elements(exhaustive_limit)) {
      std::vector<E> pool;
      for (auto& e : *all) {
        if (a.in_ambient(e)) {
          pool.push_back(std::move(e));
        }
      }
      return {std::move(pool), true};
    }
  } catch (BoundExceeded const&) {
  }
  return {a.sample(count, seed), false};
}

namespace detail {

inline std::vector<std::string> replay_args(std::string const& id, int axiom, std::size_t level,
                                            std::vector<std::string> witnesses) {
  if (id.empty()) {
    return {};
  }
  std::vector<std::string> args{"axiom", id, std::to_string(axiom), std::to_string(level)};
  args.insert(args.end(), witnesses.begin(), witnesses.end());
  return args;
}

}  // namespace detail

/// Checks axioms (1)-(4) of a descending normal chain at levels 0..levels:
/// (1) 1 in P_n, (2) x, y in P_n => x y^-1 in P_n, (3) x in P_n =>
/// z^-1 x z in P_n, (4) P_{n+1} is contained in P_n.
template <class E>
Report check_class_axioms(FilteredGroup<E> const& a, std::size_t levels, std::size_t sample,
                          std::uint64_t seed) {
  Report r;
  r.scenario = "check_class_axioms";
  r.parameters["structure"] = a.description;
  r.parameters["levels"] = std::to_string(levels);
  r.parameters["sample"] = std::to_string(sample);
  r.seed = seed;
  auto [pool, exhaustive] = checker_pool(a, sample, seed);
  r.notes.push_back(std::string(exhaustive ? "exhaustive" : "sampled") + " over " +
                    std::to_string(pool.size()) + " elements");
  if (pool.empty()) {
    return r;
  }
  auto const& g = a.ambient;
  auto fmt = [&](E const& e) { return g.format(e); };
  for (std::size_t n = 0; n <= levels; ++n) {
    r.check(a.member(n, g.identity), [&] {
      return Violation{"identity", n, {fmt(g.identity)},
                       detail::replay_args(a.replay_id, 1, n, {fmt(g.identity)})};
    });
    std::vector<E const*> members;
    for (auto const& x : pool) {
      if (a.member(n, x)) {
        members.push_back(&x);
      }
    }
    auto closure_pair = [&](E const& x, E const& y) {
      r.check(a.member(n, g.multiply(x, g.invert(y))), [&] {
        return Violation{"subgroup", n, {fmt(x), fmt(y)},
                         detail::replay_args(a.replay_id, 2, n, {fmt(x), fmt(y)})};
      });
    };
    auto conj_pair = [&](E const& x, E const& z) {
      r.check(a.member(n, g.conjugate(x, z)), [&] {
        return Violation{"normality", n, {fmt(x), fmt(z)},
                         detail::replay_args(a.replay_id, 3, n, {fmt(x), fmt(z)})};
      });
    };
    if (exhaustive && members.size() * members.size() <= 40'000 &&
        members.size() * pool.size() <= 40'000) {
      for (auto const* x : members) {
        for (auto const* y : members) {
          closure_pair(*x, *y);
        }
        for (auto const& z : pool) {
          conj_pair(*x, z);
        }
      }
    } else {
      for (std::size_t i = 0; i < members.size(); ++i) {
        closure_pair(*members[i], *members[(7 * i + 1) % members.size()]);
        conj_pair(*members[i], pool[(13 * i + 5 + n) % pool.size()]);
      }
    }
    for (auto const& x : pool) {
      bool const deeper = a.member(n + 1, x);
      r.check(!deeper || a.member(n, x), [&] {
        return Violation{"descent", n, {fmt(x)}, detail::replay_args(a.replay_id, 4, n, {fmt(x)})};
      });
    }
  }
  return r;
}

/// Checks that `embed` is a homomorphism and that P_n A = P_n B ∩ embed(P_0 A)
/// pointwise: member_A(n, a) <=> member_B(n, embed(a)).
template <class EA, class EB>
Report is_substructure(FilteredGroup<EA> const& a, FilteredGroup<EB> const& b,
                       std::function<EB(EA const&)> const& embed, std::size_t levels,
                       std::size_t sample, std::uint64_t seed) {
  Report r;
  r.scenario = "is_substructure";
  r.parameters["sub"] = a.description;
  r.parameters["super"] = b.description;
  r.parameters["levels"] = std::to_string(levels);
  r.seed = seed;
  auto [pool, exhaustive] = checker_pool(a, sample, seed);
  r.notes.push_back(std::string(exhaustive ? "exhaustive" : "sampled") + " over " +
                    std::to_string(pool.size()) + " elements");
  std::vector<EB> images;
  images.reserve(pool.size());
  for (auto const& x : pool) {
    images.push_back(embed(x));
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t n = 0; n <= levels; ++n) {
      bool const lhs = a.member(n, pool[i]);
      bool const rhs = b.in_ambient(images[i]) && b.member(n, images[i]);
      r.check(lhs == rhs, [&] {
        return Violation{"restriction", n,
                         {a.ambient.format(pool[i]), b.ambient.format(images[i]),
                          lhs ? "member of sub only" : "member of super only"},
                         {}};
      });
    }
    if (!pool.empty()) {
      auto const& y = pool[(7 * i + 3) % pool.size()];
      EB const lhs = embed(a.ambient.multiply(pool[i], y));
      EB const rhs = b.ambient.multiply(images[i], embed(y));
      r.check(lhs == rhs, [&] {
        return Violation{"homomorphism", std::nullopt,
                         {a.ambient.format(pool[i]), a.ambient.format(y)}, {}};
      });
    }
  }
  return r;
}

/// P_n(F) = F^(n) on the free group of the given rank.
FilteredGroup<Word> derived_filtration(std::uint32_t rank);

/// Seeded elements of a free group of `rank` mixing plain random words with
/// nested commutators of depth 1..max_depth and their conjugates.
std::vector<Word> mixed_word_sample(std::uint32_t rank, std::size_t count, std::uint64_t seed,
                                    std::size_t max_depth = 3);

/// Negative control: P_n for n >= 1 is "first letter is x1", which is not
/// a subgroup.
FilteredGroup<Word> broken_chain_filtration(std::uint32_t rank);

/// A = P_0 > 1 = P_1 = P_2 = ...
template <class E>
FilteredGroup<E> trivial_chain_filtration(GroupOracle<E> ambient, std::string description) {
  FilteredGroup<E> f;
  f.description = std::move(description);
  f.member = [id = ambient.identity](std::size_t n, E const& g) { return n == 0 || g == id; };
  f.sample = [ambient](std::size_t count, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<E> out;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(ambient.random(rng));
    }
    return out;
  };
  f.ambient = std::move(ambient);
  return f;
}

/// Finite chain G = chain[0] >= chain[1] >= ... ; the last term repeats.
FilteredGroup<Permutation> finite_chain_filtration(PermutationGroup const& g,
                                                   std::vector<PermutationSet> chain,
                                                   std::string description);

/// S3 > A3 > 1 on points {1,2,3}.
FilteredGroup<Permutation> s3_chain();

template <class A, class B>
FilteredGroup<std::pair<A, B>> direct_sum_filtration(FilteredGroup<A> const& a1,
                                                     FilteredGroup<B> const& a2) {
  using E = std::pair<A, B>;
  FilteredGroup<E> f;
  f.ambient = direct_product(a1.ambient, a2.ambient);
  f.description = "(" + a1.description + ") + (" + a2.description + ")";
  f.member = [a1, a2](std::size_t n, E const& g) {
    return a1.member(n, g.first) && a2.member(n, g.second);
  };
  f.in_ambient = [a1, a2](E const& g) { return a1.in_ambient(g.first) && a2.in_ambient(g.second); };
  f.sample = [a1, a2](std::size_t count, std::uint64_t seed) {
    SplitMix64 rng(seed);
    auto s1 = a1.sample(count, rng.next());
    auto s2 = a2.sample(count, rng.next());
    std::vector<E> out;
    for (std::size_t i = 0; i < count && i < s1.size() && i < s2.size(); ++i) {
      switch (i % 4) {
        case 0:
          out.emplace_back(s1[i], a2.ambient.identity);
          break;
        case 1:
          out.emplace_back(a1.ambient.identity, s2[i]);
          break;
        default:
          out.emplace_back(s1[i], s2[(i * 5 + 1) % s2.size()]);
      }
    }
    return out;
  };
  return f;
}

template <class A, class B>
std::function<std::pair<A, B>(A const&)> inject_first(FilteredGroup<B> const& other) {
  return [id = other.ambient.identity](A const& a) { return std::pair<A, B>{a, id}; };
}

template <class A, class B>
std::function<std::pair<A, B>(B const&)> inject_second(FilteredGroup<A> const& other) {
  return [id = other.ambient.identity](B const& b) { return std::pair<A, B>{id, b}; };
}

/// (P_k A, P_{k+1} A, ...): the ambient becomes P_k A.
template <class E>
FilteredGroup<E> chain_shift(FilteredGroup<E> const& a, std::size_t k) {
  FilteredGroup<E> f = a;
  f.description = "shift(" + a.description + ", " + std::to_string(k) + ")";
  f.replay_id = a.replay_id.empty() ? "" : "shift:" + std::to_string(k) + ":" + a.replay_id;
  f.in_ambient = [a, k](E const& g) { return a.in_ambient(g) && a.member(k, g); };
  f.member = [a, k](std::size_t n, E const& g) {
    return a.in_ambient(g) && a.member(k, g) && a.member(k + n, g);
  };
  f.sample = [a, k](std::size_t count, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<E> out;
    for (int round = 0; round < 8 && out.size() < count; ++round) {
      for (auto& g : a.sample(count, rng.next())) {
        if (out.size() < count && a.in_ambient(g) && a.member(k, g)) {
          out.push_back(std::move(g));
        }
      }
    }
    // Top up with products of what was found; P_k A is a subgroup.
    std::size_t const found = out.size();
    for (std::size_t i = 0; found > 0 && out.size() < count; ++i) {
      out.push_back(a.ambient.multiply(out[i % found], a.ambient.invert(out[(3 * i + 1) % found])));
    }
    if (out.empty()) {
      out.push_back(a.ambient.identity);
    }
    return out;
  };
  return f;
}

/// Prepends k copies of P_0: member'(n, g) = true for n <= k and
/// member(n - k, g) beyond.
template <class E>
FilteredGroup<E> chain_pad(FilteredGroup<E> const& a, std::size_t k) {
  FilteredGroup<E> f = a;
  f.description = "pad(" + a.description + ", " + std::to_string(k) + ")";
  f.replay_id = a.replay_id.empty() ? "" : "pad:" + std::to_string(k) + ":" + a.replay_id;
  f.member = [a, k](std::size_t n, E const& g) {
    return a.in_ambient(g) && (n <= k || a.member(n - k, g));
  };
  return f;
}

}  // namespace ggt
