#include <doctest.h>

#include <algorithm>

#include "ggt/rng.hpp"
#include "ggt/word.hpp"

using namespace ggt;

namespace {

Word w(char const* s) { return parse_word(s); }

// Naive stack reduction over raw letter codes, used as an oracle.
std::vector<std::int32_t> naive_reduce(std::vector<std::int32_t> const& codes) {
  std::vector<std::int32_t> out;
  for (auto c : codes) {
    if (!out.empty() && out.back() == -c) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<std::int32_t> codes_of(Word const& x) {
  std::vector<std::int32_t> out;
  for (auto l : x.letters()) {
    out.push_back(l.code());
  }
  return out;
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(w("x1 X1").empty());
  CHECK(to_string(w("x1 x2^3")) == "x1 x2 x2 x2");
  CHECK(to_string(w("x2 X3 x3 x1")) == "x2 x1");
  CHECK(w("ε").empty());
  CHECK(w("").empty());
  CHECK(to_string(w("x1^-2")) == "X1 X1");
  CHECK(to_string(w("X2^2 x10")) == "X2 X2 x10");
}

TEST_CASE("parse errors name the offending token") {
  auto token_of = [](char const* s) {
    try {
      parse_word(s);
    } catch (ParseError const& e) {
      return e.token();
    }
    return std::string("<none>");
  };
  CHECK(token_of("x1 y2") == "y2");
  CHECK(token_of("x0") == "x0");
  CHECK(token_of("x1^") == "x1^");
  CHECK(token_of("x1^2a") == "x1^2a");
  CHECK(token_of("x") == "x");
  CHECK(token_of("x1 x2") == "<none>");
}

TEST_CASE("multiply, invert, conjugate, commutator, power examples") {
  CHECK(multiply(w("x1 x2"), w("X2 x3")) == w("x1 x3"));
  CHECK(invert(w("x1 x2")) == w("X2 X1"));
  CHECK(invert(Word{}).empty());
  CHECK(conjugate(w("x1"), w("x2")) == w("X2 x1 x2"));
  CHECK(commutator(w("x1"), w("x2")) == w("X1 X2 x1 x2"));
  CHECK(commutator(w("x1"), Word{}).empty());
  CHECK(power(w("x1 x2"), 2) == w("x1 x2 x1 x2"));
  CHECK(power(w("x1 x2"), 0).empty());
  CHECK(power(w("x1 x2"), -1) == w("X2 X1"));
  CHECK(power(w("X1 x2 x1"), 3) == w("X1 x2 x2 x2 x1"));
  CHECK(exponent_sum(w("x1 x2 X1 x2"), Generator{2}) == 2);
  CHECK(exponent_sum(w("x1^5"), Generator{1}) == 5);
}

TEST_CASE("cyclic reduction examples") {
  auto c = cyclically_reduce(w("X1 x2 x1"));
  CHECK(c.core == w("x2"));
  CHECK(c.conjugator == w("x1"));
  c = cyclically_reduce(w("x1 x2"));
  CHECK(c.core == w("x1 x2"));
  CHECK(c.conjugator.empty());
  c = cyclically_reduce(Word{});
  CHECK(c.core.empty());
}

TEST_CASE("shortlex order") {
  CHECK(w("x1") < w("X1"));
  CHECK(w("X1") < w("x2"));
  CHECK(w("x2") < w("X2"));
  CHECK(w("X2") < w("x1 x1"));
  CHECK(Word{} < w("x1"));
  auto all = all_words_up_to(2, 3);
  CHECK(all.size() == 1 + 4 + 12 + 36);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("random properties") {
  SplitMix64 rng(7);
  for (int i = 0; i < 500; ++i) {
    std::uint32_t const rank = 1 + static_cast<std::uint32_t>(rng.below(3));
    Word const u = random_reduced_word(rng, rank, rng.below(10));
    Word const v = random_reduced_word(rng, rank, rng.below(10));
    Word const z = random_reduced_word(rng, rank, rng.below(10));
    // Reduction agrees with a naive stack reduction.
    auto cat = codes_of(u);
    auto const cv = codes_of(v);
    cat.insert(cat.end(), cv.begin(), cv.end());
    CHECK(codes_of(multiply(u, v)) == naive_reduce(cat));
    CHECK(multiply(u, v).length() <= u.length() + v.length());
    // Group laws.
    CHECK(multiply(multiply(u, v), z) == multiply(u, multiply(v, z)));
    CHECK(multiply(u, Word{}) == u);
    CHECK(multiply(u, invert(u)).empty());
    CHECK(invert(invert(u)) == u);
    // Printing round-trips.
    CHECK(parse_word(to_string(u)) == u);
    // Conjugation.
    CHECK(conjugate(conjugate(u, v), invert(v)) == u);
    CHECK(cyclically_reduce(conjugate(u, v)).core.length() == cyclically_reduce(u).core.length());
    auto const cr = cyclically_reduce(u);
    CHECK(conjugate(cr.core, cr.conjugator) == u);
    // Exponent sums.
    for (std::uint32_t g = 1; g <= rank; ++g) {
      CHECK(exponent_sum(multiply(u, v), Generator{g}) ==
            exponent_sum(u, Generator{g}) + exponent_sum(v, Generator{g}));
      CHECK(exponent_sum(commutator(u, v), Generator{g}) == 0);
    }
    // Powers.
    std::int64_t const k = rng.range(-4, 4);
    Word naive;
    for (std::int64_t j = 0; j < (k < 0 ? -k : k); ++j) {
      naive = multiply(naive, k < 0 ? invert(u) : u);
    }
    CHECK(power(u, k) == naive);
    CHECK(commutator(u, u).empty());
  }
}

TEST_CASE("random_reduced_word has the requested length and is reduced") {
  SplitMix64 rng(99);
  for (std::size_t len = 0; len < 20; ++len) {
    auto const x = random_reduced_word(rng, 3, len);
    CHECK(x.length() == len);
    CHECK(x.max_generator() <= 3);
  }
}
