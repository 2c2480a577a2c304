#include <doctest.h>

#include <thread>

#include "ggt/fox.hpp"
#include "ggt/wreath.hpp"
#include "oracles.hpp"

using namespace ggt;

namespace {

Word w(char const* s) { return parse_word(s); }
bool dm(Word const& x, std::size_t n) { return derived_member(x, DerivedLevel{n}); }

GroupRingElement times_right(GroupRingElement const& e, Word const& u) {
  GroupRingElement out;
  for (auto const& [support, c] : e.terms()) {
    out.add(multiply(support, u), c);
  }
  return out;
}

}  // namespace

TEST_CASE("fox derivative examples") {
  CHECK(fox_derivative(w("x1 x2"), Generator{1}) == GroupRingElement::term(1, Word{}));
  CHECK(fox_derivative(w("X1"), Generator{1}) == GroupRingElement::term(-1, w("X1")));
  CHECK(fox_derivative(w("X1 X2 x1 x2"), Generator{1}) ==
        GroupRingElement::term(-1, w("X1")) + GroupRingElement::term(1, w("X1 X2")));
  CHECK(fox_derivative(w("x2"), Generator{1}).is_zero());
  CHECK(to_string(fox_derivative(w("X1 X2 x1 x2"), Generator{1})) == "-1*X1 + 1*X1 X2");
  CHECK(to_string(GroupRingElement{}) == "0");
}

TEST_CASE("product rule and augmentation on seeded pairs") {
  SplitMix64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    std::uint32_t const rank = 1 + static_cast<std::uint32_t>(rng.below(3));
    Word const u = random_reduced_word(rng, rank, rng.below(13));
    Word const v = random_reduced_word(rng, rank, rng.below(13));
    for (std::uint32_t g = 1; g <= rank; ++g) {
      Generator const gen{g};
      CHECK(fox_derivative(multiply(u, v), gen) ==
            fox_derivative(u, gen) + u * fox_derivative(v, gen));
      CHECK(fox_derivative(u, gen).augmentation() == exponent_sum(u, gen));
    }
    // Fundamental formula: sum_g (d u / d x_g)(x_g - 1) = u - 1.
    GroupRingElement lhs;
    for (std::uint32_t g = 1; g <= rank; ++g) {
      auto const d = fox_derivative(u, Generator{g});
      lhs += times_right(d, Word::generator(g)) + -d;
    }
    GroupRingElement rhs = GroupRingElement::term(1, u) + GroupRingElement::term(-1, Word{});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("ring_is_zero_mod examples") {
  auto const e1 = GroupRingElement::term(1, w("x1 x2")) + GroupRingElement::term(-1, w("x2 x1"));
  CHECK(ring_is_zero_mod(e1, DerivedLevel{1}));
  CHECK_FALSE(ring_is_zero_mod(e1, DerivedLevel{2}));
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK_FALSE(ring_is_zero_mod(GroupRingElement::term(1, Word{}), DerivedLevel{n}));
  }
  // Supports differ by [x1,x2]^-1, which is in F' but not in F''.
  auto const e3 = GroupRingElement::term(1, w("x1")) +
                  GroupRingElement::term(-1, multiply(w("x1"), commutator(w("x1"), w("x2"))));
  CHECK(ring_is_zero_mod(e3, DerivedLevel{1}));
  CHECK_FALSE(ring_is_zero_mod(e3, DerivedLevel{2}));
  CHECK(ring_is_zero_mod(GroupRingElement{}, DerivedLevel{2}));
}

TEST_CASE("ring_is_zero_mod agrees with pairwise merging") {
  SplitMix64 rng(5);
  for (int i = 0; i < 300; ++i) {
    GroupRingElement e;
    std::size_t const terms = 1 + rng.below(5);
    Word const base = random_reduced_word(rng, 2, rng.below(5));
    for (std::size_t t = 0; t < terms; ++t) {
      // Supports that often coincide modulo F' or F'' so merging matters.
      Word s = base;
      switch (rng.below(3)) {
        case 0:
          s = multiply(s, random_derived_element(DerivedLevel{1}, 2, rng.next()));
          break;
        case 1:
          s = multiply(s, random_derived_element(DerivedLevel{2}, 2, rng.next()));
          break;
        default:
          s = multiply(s, random_reduced_word(rng, 2, rng.below(3)));
      }
      e.add(s, rng.coin() ? 1 : -1);
      if (rng.coin()) {
        e.add(multiply(base, random_derived_element(DerivedLevel{2}, 2, rng.next())), -1);
        e.add(base, 1);
      }
    }
    for (std::size_t n = 0; n <= 2; ++n) {
      CHECK(ring_is_zero_mod(e, DerivedLevel{n}) == oracle::pairwise_zero_mod(e, n));
    }
  }
}

TEST_CASE("derived_member examples") {
  auto const c = commutator(w("x1"), w("x2"));
  CHECK_FALSE(dm(w("x1"), 1));
  CHECK(dm(c, 1));
  CHECK_FALSE(dm(c, 2));
  CHECK(dm(commutator(c, commutator(w("x1"), w("X2"))), 2));
  CHECK(dm(w("x1"), 0));
  CHECK(dm(Word{}, 5));
}

TEST_CASE("derived_depth examples") {
  CHECK(derived_depth(w("x1"), 4) == DerivedDepth{0, false});
  CHECK(derived_depth(commutator(w("x1"), w("x2")), 4) == DerivedDepth{1, false});
  CHECK(derived_depth(Word{}, 4) == DerivedDepth{4, true});
  CHECK(to_string(derived_depth(Word{}, 4)) == ">=4");
  CHECK(to_string(derived_depth(w("x1"), 4)) == "0");
}

TEST_CASE("wreath oracle agrees with derived_member on all rank-2 words of length <= 7") {
  auto const words = all_words_up_to(2, 7);
  std::size_t members = 0;
  for (auto const& x : words) {
    bool const magnus = dm(x, 2);
    CHECK(magnus == wreath_oracle_member(x, 2));
    CHECK(dm(x, 1) == wreath_oracle_member(x, 1));
    members += magnus ? 1 : 0;
  }
  CHECK(members == 1);  // only the empty word is that short
  CHECK(wreath_oracle_member(commutator(commutator(w("x1"), w("x2")), commutator(w("x1"), w("X2"))), 2));
  CHECK_FALSE(wreath_oracle_member(w("x1 x2 X1 X2"), 2));
  CHECK(wreath_oracle_member(Word{}, 2));
  CHECK_THROWS_AS(wreath_oracle_member(Word{}, 3), std::invalid_argument);
}

TEST_CASE("wreath oracle agrees on structured level-2 candidates") {
  SplitMix64 rng(31);
  std::size_t members = 0;
  for (int i = 0; i < 400; ++i) {
    Word x;
    switch (i % 3) {
      case 0:
        x = random_derived_element(DerivedLevel{2}, 2, rng.next());
        break;
      case 1:
        x = multiply(random_derived_element(DerivedLevel{1}, 2, rng.next()),
                     random_derived_element(DerivedLevel{1}, 2, rng.next()));
        break;
      default:
        x = conjugate(random_derived_element(DerivedLevel{2}, 2, rng.next()),
                      random_reduced_word(rng, 2, 3));
        x = multiply(x, random_derived_element(DerivedLevel{1}, 1, rng.next()));
    }
    bool const magnus = dm(x, 2);
    CHECK(magnus == wreath_oracle_member(x, 2));
    members += magnus ? 1 : 0;
  }
  CHECK(members > 50);
  CHECK(members < 400);
}

TEST_CASE("level 3 agrees with the recursive Fox definition") {
  SplitMix64 rng(8);
  for (int i = 0; i < 60; ++i) {
    Word x = random_derived_element(DerivedLevel{2}, 2, rng.next());
    if (i % 2 == 0) {
      x = commutator(x, conjugate(random_derived_element(DerivedLevel{2}, 2, rng.next()),
                                  random_reduced_word(rng, 2, 2)));
    } else if (i % 3 == 0) {
      x = multiply(x, conjugate(x, random_reduced_word(rng, 2, 2)));
    }
    bool expected = dm(x, 2);
    for (std::uint32_t g = 1; g <= 2 && expected; ++g) {
      expected = oracle::pairwise_zero_mod(fox_derivative(x, Generator{g}), 2);
    }
    CHECK(dm(x, 3) == expected);
  }
}

TEST_CASE("derived series invariants") {
  SplitMix64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Word const u = random_derived_element(DerivedLevel{1 + rng.below(2)}, 2, rng.next());
    Word const h = random_reduced_word(rng, 2, rng.below(5));
    Word const x = i % 2 ? u : random_reduced_word(rng, 2, rng.below(9));
    for (std::size_t n = 0; n <= 2; ++n) {
      if (dm(x, n + 1)) {
        CHECK(dm(x, n));
      }
      if (dm(x, n)) {
        CHECK(dm(conjugate(x, h), n));
      }
    }
    Word const v = random_derived_element(DerivedLevel{1}, 2, rng.next());
    CHECK(dm(commutator(u, v), 2));
  }
}

TEST_CASE("random_derived_element") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto const a0 = random_derived_element(DerivedLevel{0}, 1, seed);
    CHECK(a0.length() == 1);
    auto const a1 = random_derived_element(DerivedLevel{1}, 1, seed);
    CHECK(a1.length() == 4);
    CHECK(a1[0].generator() != a1[1].generator());
    CHECK(dm(random_derived_element(DerivedLevel{2}, 2, seed), 2));
    CHECK(random_derived_element(DerivedLevel{2}, 2, seed) ==
          random_derived_element(DerivedLevel{2}, 2, seed));
  }
  CHECK_THROWS_AS(random_derived_element(DerivedLevel{1}, 2, 1, 1), std::invalid_argument);
}

TEST_CASE("memo cache is transparent and thread safe") {
  std::vector<Word> sample;
  SplitMix64 rng(12);
  for (int i = 0; i < 60; ++i) {
    sample.push_back(multiply(random_derived_element(DerivedLevel{1}, 2, rng.next()),
                              random_derived_element(DerivedLevel{1}, 2, rng.next())));
  }
  clear_derived_member_cache();
  std::vector<bool> cold;
  for (auto const& x : sample) {
    cold.push_back(dm(x, 2));
  }
  CHECK(derived_member_cache_size() > 0);
  std::vector<std::vector<bool>> hot(4);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < hot.size(); ++t) {
    pool.emplace_back([&, t] {
      for (auto const& x : sample) {
        hot[t].push_back(dm(x, 2));
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
  for (auto const& h : hot) {
    CHECK(h == cold);
  }
}

TEST_CASE("Magnus labels separate cosets") {
  MagnusCanonicalizer m(2);
  auto const c = commutator(w("x1"), w("x2"));
  CHECK(m.label(c, 1) == m.label(Word{}, 1));
  CHECK(m.label(c, 2) != m.label(Word{}, 2));
  CHECK(m.label(w("x1 x2"), 1) == m.label(w("x2 x1"), 1));
  CHECK(m.label(w("x1 x2"), 2) != m.label(w("x2 x1"), 2));
  auto const p = m.prefix_labels(w("x1 x2"), 2);
  CHECK(p.size() == 3);
  CHECK(p.front() == m.label(Word{}, 2));
}
