#include "ggt/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace ggt {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverse()) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

// Token powers beyond this are almost certainly typos; refuse rather than
// allocate gigabytes.
constexpr std::int64_t kMaxTokenPower = 1'000'000;

}  // namespace

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    push_reduced(letters_, l);
  }
}

Word::Word(std::initializer_list<std::int32_t> codes) {
  for (std::int32_t c : codes) {
    if (c == 0) {
      throw std::invalid_argument("letter code 0 is not a generator");
    }
    push_reduced(letters_, Letter::from_code(c));
  }
}

std::uint32_t Word::max_generator() const noexcept {
  std::uint32_t m = 0;
  for (Letter l : letters_) {
    m = std::max(m, l.generator().index);
  }
  return m;
}

std::strong_ordering operator<=>(Word const& a, Word const& b) {
  if (auto c = a.length() <=> b.length(); c != 0) {
    return c;
  }
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (auto c = a[i].rank() <=> b[i].rank(); c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "ε") {
      continue;
    }
    if (token.size() < 2 || (token[0] != 'x' && token[0] != 'X')) {
      throw ParseError(token, "expected x<k> or X<k>");
    }
    int const sign = token[0] == 'x' ? 1 : -1;
    std::string_view body(token);
    body.remove_prefix(1);
    std::string_view index_part = body;
    std::string_view power_part;
    bool has_power = false;
    if (auto caret = body.find('^'); caret != std::string_view::npos) {
      index_part = body.substr(0, caret);
      power_part = body.substr(caret + 1);
      has_power = true;
    }
    if (index_part.empty() ||
        !std::all_of(index_part.begin(), index_part.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError(token, "generator index must be a decimal integer");
    }
    std::uint32_t index = 0;
    auto [p, ec] = std::from_chars(index_part.data(),
                                   index_part.data() + index_part.size(), index);
    if (ec != std::errc{} || p != index_part.data() + index_part.size()) {
      throw ParseError(token, "generator index out of range");
    }
    if (index == 0) {
      throw ParseError(token, "generator index must be >= 1");
    }
    std::int64_t repeat = 1;
    if (has_power) {
      auto const* first = power_part.data();
      auto const* last = first + power_part.size();
      if (first != last && *first == '+') {
        ++first;
      }
      auto [q, ec2] = std::from_chars(first, last, repeat);
      if (power_part.empty() || ec2 != std::errc{} || q != last) {
        throw ParseError(token, "malformed power");
      }
      if (std::llabs(repeat) > kMaxTokenPower) {
        throw ParseError(token, "power too large");
      }
    }
    Letter l(Generator{index}, repeat >= 0 ? sign : -sign);
    for (std::int64_t i = 0; i < std::llabs(repeat); ++i) {
      letters.push_back(l);
    }
  }
  return Word(std::move(letters));
}

std::string to_string(Word const& w) {
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i != 0) {
      out += ' ';
    }
    out += w[i].sign() > 0 ? 'x' : 'X';
    out += std::to_string(w[i].generator().index);
  }
  return out;
}

Word multiply(Word const& u, Word const& v) {
  auto const a = u.letters();
  auto const b = v.letters();
  std::size_t cancel = 0;
  while (cancel < a.size() && cancel < b.size() &&
         a[a.size() - 1 - cancel] == b[cancel].inverse()) {
    ++cancel;
  }
  std::vector<Letter> out;
  out.reserve(a.size() + b.size() - 2 * cancel);
  out.insert(out.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(cancel), b.end());
  return Word(std::move(out));
}

Word invert(Word const& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

Word conjugate(Word const& g, Word const& h) {
  return multiply(multiply(invert(h), g), h);
}

Word commutator(Word const& g, Word const& h) {
  return multiply(multiply(invert(g), invert(h)), multiply(g, h));
}

Word power(Word const& w, std::int64_t k) {
  Word base = k < 0 ? invert(w) : w;
  std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1
                          : static_cast<std::uint64_t>(k);
  // Cyclic reduction makes the power a plain repetition of the core.
  auto [core, conj] = cyclically_reduce(base);
  std::vector<Letter> rep;
  rep.reserve(core.length() * n);
  for (std::uint64_t i = 0; i < n; ++i) {
    rep.insert(rep.end(), core.letters().begin(), core.letters().end());
  }
  return conjugate(Word(std::move(rep)), conj);
}

std::int64_t exponent_sum(Word const& w, Generator g) {
  std::int64_t s = 0;
  for (Letter l : w.letters()) {
    if (l.generator() == g) {
      s += l.sign();
    }
  }
  return s;
}

CyclicReduction cyclically_reduce(Word const& w) {
  auto const ls = w.letters();
  std::size_t i = 0;
  std::size_t j = ls.size();
  while (j - i >= 2 && ls[i] == ls[j - 1].inverse()) {
    ++i;
    --j;
  }
  // w = p core p^-1 with p = ls[0..i), so w = core^{p^-1}.
  Word core(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(i),
                                ls.begin() + static_cast<std::ptrdiff_t>(j)));
  Word prefix(std::vector<Letter>(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(i)));
  return {std::move(core), invert(prefix)};
}

Word random_reduced_word(SplitMix64& rng, std::uint32_t rank, std::size_t length) {
  std::vector<Letter> out;
  out.reserve(length);
  while (out.size() < length) {
    auto const g = static_cast<std::uint32_t>(rng.below(rank)) + 1;
    Letter l(Generator{g}, rng.coin() ? 1 : -1);
    if (!out.empty() && out.back() == l.inverse()) {
      continue;
    }
    out.push_back(l);
  }
  return Word(std::move(out));
}

std::vector<Word> all_words_up_to(std::uint32_t rank, std::size_t max_length) {
  std::vector<Letter> alphabet;
  for (std::uint32_t g = 1; g <= rank; ++g) {
    alphabet.emplace_back(Generator{g}, 1);
    alphabet.emplace_back(Generator{g}, -1);
  }
  std::vector<Word> out{Word{}};
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::vector<Letter>> next;
    for (auto const& w : layer) {
      for (Letter l : alphabet) {
        if (!w.empty() && w.back() == l.inverse()) {
          continue;
        }
        auto v = w;
        v.push_back(l);
        next.push_back(std::move(v));
      }
    }
    for (auto const& v : next) {
      out.emplace_back(v);
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace ggt
