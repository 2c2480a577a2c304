#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ggt/rng.hpp"

namespace ggt {

struct Generator {
  std::uint32_t index = 1;  // >= 1

  friend auto operator<=>(Generator, Generator) = default;
};

/// A generator or its inverse, packed as a nonzero signed code: +k is x<k>,
/// -k is X<k>.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(Generator g, int sign)
      : code_(sign > 0 ? static_cast<std::int32_t>(g.index)
                       : -static_cast<std::int32_t>(g.index)) {}

  static constexpr Letter from_code(std::int32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr std::int32_t code() const { return code_; }
  constexpr Generator generator() const {
    return Generator{static_cast<std::uint32_t>(code_ > 0 ? code_ : -code_)};
  }
  constexpr int sign() const { return code_ > 0 ? 1 : -1; }
  constexpr Letter inverse() const { return from_code(-code_); }

  /// Position in the alphabet order x1 < X1 < x2 < X2 < ...
  constexpr std::uint32_t rank() const {
    return 2 * (generator().index - 1) + (code_ < 0 ? 1 : 0);
  }

  friend constexpr bool operator==(Letter, Letter) = default;

 private:
  std::int32_t code_ = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& token, std::string const& why)
      : std::runtime_error("cannot parse token '" + token + "': " + why),
        token_(token) {}
  std::string const& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Freely reduced word in a free group. Reduction happens on construction,
/// so every Word value is in normal form and equality is element equality.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<std::int32_t> codes);

  static Word generator(std::uint32_t index, int sign = 1) {
    return Word(std::vector<Letter>{Letter(Generator{index}, sign)});
  }

  std::span<Letter const> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// Largest generator index occurring (0 for the identity).
  std::uint32_t max_generator() const noexcept;

  friend bool operator==(Word const&, Word const&) = default;

  /// Shortlex: by length, then lexicographic with x1 < X1 < x2 < X2 < ...
  friend std::strong_ordering operator<=>(Word const& a, Word const& b);

 private:
  std::vector<Letter> letters_;
};

Word parse_word(std::string_view text);
std::string to_string(Word const& w);

Word multiply(Word const& u, Word const& v);
Word invert(Word const& w);
/// g^h = h^-1 g h
Word conjugate(Word const& g, Word const& h);
/// [g,h] = g^-1 h^-1 g h
Word commutator(Word const& g, Word const& h);
Word power(Word const& w, std::int64_t k);
std::int64_t exponent_sum(Word const& w, Generator g);

struct CyclicReduction {
  Word core;
  Word conjugator;  // w == conjugate(core, conjugator)
};
CyclicReduction cyclically_reduce(Word const& w);

inline Word operator*(Word const& u, Word const& v) { return multiply(u, v); }

/// Uniformly random reduced word of exactly `length` letters over
/// generators 1..rank.
Word random_reduced_word(SplitMix64& rng, std::uint32_t rank, std::size_t length);

/// All reduced words of length <= max_length over 1..rank, in shortlex order.
std::vector<Word> all_words_up_to(std::uint32_t rank, std::size_t max_length);

}  // namespace ggt

template <>
struct std::hash<ggt::Word> {
  std::size_t operator()(ggt::Word const& w) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (ggt::Letter l : w.letters()) {
      h ^= static_cast<std::uint32_t>(l.code());
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};
