#include <doctest.h>

#include "ggt/stallings.hpp"
#include "oracles.hpp"

using namespace ggt;

namespace {

Word w(char const* s) { return parse_word(s); }

std::vector<Word> random_gens(SplitMix64& rng, std::uint32_t rank) {
  std::vector<Word> gens;
  std::size_t const count = 1 + rng.below(3);
  for (std::size_t i = 0; i < count; ++i) {
    Word g;
    while (g.empty()) {
      g = random_reduced_word(rng, rank, 1 + rng.below(4));
    }
    gens.push_back(g);
  }
  return gens;
}

}  // namespace

TEST_CASE("fold examples") {
  auto h = fold({w("x1^2"), w("x2")});
  CHECK(h.rank() == 2);
  CHECK(h.vertex_count() == 2);
  CHECK(h.is_folded());
  CHECK(h.is_core());

  auto trivial = fold(std::vector<Word>{});
  CHECK(trivial.rank() == 0);
  CHECK(trivial.vertex_count() == 1);

  auto full = fold({w("x1"), w("x1 x2")});
  CHECK(full.rank() == 2);
  CHECK(full.vertex_count() == 1);
  for (auto const& x : all_words_up_to(2, 4)) {
    CHECK(contains(full, x));
  }
}

TEST_CASE("contains examples") {
  auto h = fold({w("x1^2"), w("x2")});
  CHECK(contains(h, w("x1^2 x2")));
  CHECK_FALSE(contains(h, w("x1")));
  CHECK(contains(h, Word{}));
  CHECK(contains(fold({w("x1 x2 X1")}), w("x1 x2^-3 X1")));
  CHECK_FALSE(contains(fold({w("x1 x2 X1")}), w("x2")));
}

TEST_CASE("coset_rep examples") {
  auto h = fold({w("x1^2"), w("x2")});
  CHECK(coset_rep(h, w("x1")) == w("x1"));
  CHECK(coset_rep(h, w("x1^3")) == w("x1"));
  CHECK(coset_rep(h, w("x2 x1^2 x2")).empty());
  CHECK(coset_rep(h, w("x2 x1 x2")) == w("x1 x2"));  // H x2 = H, and x1 x2 X1 is not in H
}

TEST_CASE("is_free_basis examples") {
  CHECK(is_free_basis({w("x1"), w("x1 x2")}));
  CHECK_FALSE(is_free_basis({w("x1^2"), w("x1^3")}));
  CHECK_FALSE(is_free_basis({Word{}}));
  CHECK(is_free_basis({w("x1^2"), w("x2"), w("x1 x2 X1")}));
}

TEST_CASE("cyclic_exponent") {
  CHECK(cyclic_exponent(w("x1 x2"), w("x1 x2 x1 x2")) == 2);
  CHECK(cyclic_exponent(w("x1 x2"), w("X2 X1")) == -1);
  CHECK(cyclic_exponent(w("x1 x2"), Word{}) == 0);
  CHECK_FALSE(cyclic_exponent(w("x1 x2"), w("x2 x1")).has_value());
  CHECK(cyclic_exponent(w("X1 x2 x1"), w("X1 x2^5 x1")) == 5);
}

TEST_CASE("membership agrees with product enumeration") {
  SplitMix64 rng(2024);
  for (int instance = 0; instance < 60; ++instance) {
    std::uint32_t const rank = 1 + static_cast<std::uint32_t>(rng.below(3));
    auto const gens = random_gens(rng, rank);
    auto const h = fold(gens);
    REQUIRE(h.is_folded());
    REQUIRE(h.is_core());
    CHECK(h.rank() <= gens.size());
    auto const products = oracle::products_up_to(gens, 3);
    for (auto const& p : products) {
      CHECK(contains(h, p));
    }
    // Claimed members must survive random finite images.
    for (int t = 0; t < 20; ++t) {
      Word const x = random_reduced_word(rng, rank, rng.below(7));
      if (contains(h, x)) {
        CHECK(oracle::images_consistent(gens, x, rank, rng.next()));
      } else {
        CHECK(products.count(x) == 0);
      }
    }
  }
}

TEST_CASE("coset_rep matches shortlex brute force and is a transversal") {
  SplitMix64 rng(77);
  for (int instance = 0; instance < 40; ++instance) {
    std::uint32_t const rank = 1 + static_cast<std::uint32_t>(rng.below(2));
    auto const gens = random_gens(rng, rank);
    auto const h = fold(gens);
    auto const members = oracle::products_up_to(gens, 2);
    std::vector<Word> const member_list(members.begin(), members.end());
    for (int t = 0; t < 15; ++t) {
      Word const x = random_reduced_word(rng, rank, rng.below(6));
      Word const r = coset_rep(h, x);
      CHECK(r == oracle::brute_coset_rep(h, x, rank));
      CHECK(contains(h, multiply(r, invert(x))));
      CHECK(coset_rep(h, r) == r);
      auto const& m = member_list[rng.below(member_list.size())];
      CHECK(coset_rep(h, multiply(m, x)) == r);
    }
  }
}
