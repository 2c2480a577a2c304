#include "ggt/filtration.hpp"

#include "ggt/fox.hpp"

namespace ggt {

std::vector<Word> mixed_word_sample(std::uint32_t rank, std::size_t count, std::uint64_t seed,
                                    std::size_t max_depth) {
  SplitMix64 rng(seed);
  std::vector<Word> out;
  out.reserve(count);
  if (rank < 2) {
    max_depth = 0;
  }
  std::size_t const kinds = max_depth + 2;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t const kind = i % kinds;
    if (kind == 0 || max_depth == 0) {
      out.push_back(random_reduced_word(rng, rank, rng.below(11)));
    } else if (kind <= max_depth) {
      std::size_t const size = kind >= 3 ? 2 : 3;
      Word w = random_derived_element(DerivedLevel{kind}, size, rng.next(), rank);
      if (rng.coin()) {
        w = conjugate(w, random_reduced_word(rng, rank, rng.below(4)));
      }
      out.push_back(std::move(w));
    } else {
      std::size_t const d1 = 1 + rng.below(std::min<std::size_t>(max_depth, 2));
      std::size_t const d2 = 1 + rng.below(std::min<std::size_t>(max_depth, 2));
      out.push_back(multiply(random_derived_element(DerivedLevel{d1}, 3, rng.next(), rank),
                             random_derived_element(DerivedLevel{d2}, 3, rng.next(), rank)));
    }
  }
  return out;
}

FilteredGroup<Word> derived_filtration(std::uint32_t rank) {
  FilteredGroup<Word> f;
  f.ambient = free_group_oracle(rank);
  f.description = "derived series of F" + std::to_string(rank);
  f.replay_id = "derived:" + std::to_string(rank);
  f.member = [](std::size_t n, Word const& w) { return derived_member(w, DerivedLevel{n}); };
  f.sample = [rank](std::size_t count, std::uint64_t seed) {
    return mixed_word_sample(rank, count, seed);
  };
  return f;
}

FilteredGroup<Word> broken_chain_filtration(std::uint32_t rank) {
  FilteredGroup<Word> f;
  f.ambient = free_group_oracle(rank);
  f.description = "broken chain on F" + std::to_string(rank) + " (P_n: first letter is x1)";
  f.replay_id = "broken:" + std::to_string(rank);
  f.member = [](std::size_t n, Word const& w) {
    return n == 0 || (!w.empty() && w[0] == Letter(Generator{1}, 1));
  };
  f.sample = [rank](std::size_t count, std::uint64_t seed) {
    return mixed_word_sample(rank, count, seed, 1);
  };
  return f;
}

FilteredGroup<Permutation> finite_chain_filtration(PermutationGroup const& g,
                                                   std::vector<PermutationSet> chain,
                                                   std::string description) {
  if (chain.empty()) {
    auto const& els = g.elements();
    chain.emplace_back(els.begin(), els.end());
  }
  FilteredGroup<Permutation> f;
  f.ambient = g.oracle(description);
  f.description = std::move(description);
  f.member = [g, chain = std::move(chain)](std::size_t n, Permutation const& p) {
    if (!g.contains(p)) {
      return false;
    }
    return chain[std::min(n, chain.size() - 1)].count(p) != 0;
  };
  f.sample = [g](std::size_t count, std::uint64_t seed) {
    SplitMix64 rng(seed);
    auto const& els = g.elements();
    std::vector<Permutation> out;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(els[rng.below(els.size())]);
    }
    return out;
  };
  return f;
}

FilteredGroup<Permutation> s3_chain() {
  auto s3 = perm_group(std::vector<std::string>{"(1 2)", "(1 2 3)"}, 3);
  auto const& els = s3.elements();
  PermutationSet all(els.begin(), els.end());
  PermutationSet a3 = derived_subgroup_finite(s3);
  PermutationSet trivial{s3.identity()};
  auto f = finite_chain_filtration(s3, {all, a3, trivial}, "S3 > A3 > 1");
  f.replay_id = "s3chain";
  return f;
}

}  // namespace ggt
