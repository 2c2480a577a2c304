#pragma once

// Brute-force reference implementations used by the tests. Deliberately
// naive; none of them share code paths with the library routine they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ggt/fox.hpp"
#include "ggt/permutation.hpp"
#include "ggt/rng.hpp"
#include "ggt/stallings.hpp"
#include "ggt/word.hpp"

namespace oracle {

using ggt::Word;

/// Every product of at most `bound` factors drawn from gens and their
/// inverses.
inline std::set<Word> products_up_to(std::vector<Word> const& gens, std::size_t bound) {
  std::vector<Word> letters;
  for (auto const& g : gens) {
    letters.push_back(g);
    letters.push_back(ggt::invert(g));
  }
  std::set<Word> all{Word{}};
  std::vector<Word> frontier{Word{}};
  for (std::size_t depth = 0; depth < bound; ++depth) {
    std::vector<Word> next;
    for (auto const& p : frontier) {
      for (auto const& l : letters) {
        Word q = ggt::multiply(p, l);
        if (all.insert(q).second) {
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return all;
}

/// Shortlex enumeration of candidates r with r w^-1 in H.
inline Word brute_coset_rep(ggt::SubgroupAutomaton const& h, Word const& w, std::uint32_t rank) {
  for (auto const& r : ggt::all_words_up_to(rank, w.length())) {
    if (ggt::contains(h, ggt::multiply(r, ggt::invert(w)))) {
      return r;
    }
  }
  return w;
}

/// Image of w under the homomorphism sending x_i to images[i-1].
inline ggt::Permutation image(Word const& w, std::vector<ggt::Permutation> const& images) {
  ggt::Permutation out(images.front().degree());
  for (auto l : w.letters()) {
    auto const& p = images.at(l.generator().index - 1);
    out = out * (l.sign() > 0 ? p : p.inverse());
  }
  return out;
}

/// Necessary condition for w in <gens>: under random maps to S_5 the image
/// of w lies in the subgroup generated by the images of gens.
inline bool images_consistent(std::vector<Word> const& gens, Word const& w, std::uint32_t rank,
                              std::uint64_t seed, int maps = 4) {
  ggt::SplitMix64 rng(seed);
  for (int m = 0; m < maps; ++m) {
    std::vector<ggt::Permutation> images;
    for (std::uint32_t i = 0; i < rank; ++i) {
      std::vector<std::uint32_t> pts{1, 2, 3, 4, 5};
      for (std::size_t j = pts.size(); j > 1; --j) {
        std::swap(pts[j - 1], pts[rng.below(j)]);
      }
      images.push_back(ggt::Permutation::from_images(pts));
    }
    std::vector<ggt::Permutation> gen_images;
    for (auto const& g : gens) {
      gen_images.push_back(image(g, images));
    }
    auto const sub = ggt::subgroup_closure(gen_images, 5);
    if (sub.count(image(w, images)) == 0) {
      return false;
    }
  }
  return true;
}

/// Zero test in Z[F/F^(n)] by pairwise merging with derived_member, the
/// textbook formulation.
inline bool pairwise_zero_mod(ggt::GroupRingElement const& e, std::size_t level) {
  std::vector<std::pair<Word, ggt::Integer>> classes;
  for (auto const& [support, c] : e.terms()) {
    bool merged = false;
    for (auto& [rep, sum] : classes) {
      if (ggt::derived_member(ggt::multiply(support, ggt::invert(rep)), ggt::DerivedLevel{level})) {
        sum += c;
        merged = true;
        break;
      }
    }
    if (!merged) {
      classes.emplace_back(support, c);
    }
  }
  return std::all_of(classes.begin(), classes.end(), [](auto const& p) { return p.second == 0; });
}

}  // namespace oracle
