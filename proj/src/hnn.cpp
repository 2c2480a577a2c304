#include "ggt/hnn.hpp"

#include <charconv>
#include <sstream>

#include "ggt/stallings.hpp"

namespace ggt {

namespace {

std::function<std::optional<Word>(Word const&)> cyclic_map(Word from, Word to) {
  auto automaton = fold(std::vector<Word>{from});
  return [automaton = std::move(automaton), from = std::move(from),
          to = std::move(to)](Word const& g) -> std::optional<Word> {
    if (!contains(automaton, g)) {
      return std::nullopt;
    }
    auto k = cyclic_exponent(from, g);
    if (!k) {
      return std::nullopt;
    }
    return power(to, *k);
  };
}

}  // namespace

HnnExtension<Word> make_cyclic_hnn(Word x, Word y, std::uint32_t rank) {
  if (x.empty() || y.empty()) {
    throw std::invalid_argument("associated cyclic subgroups need nontrivial generators");
  }
  HnnExtension<Word> ext;
  ext.base = free_group_oracle(rank);
  ext.phi = cyclic_map(x, y);
  ext.phi_inverse = cyclic_map(y, x);
  ext.description = "<F" + std::to_string(rank) + ", t | t^-1 (" + to_string(x) + ") t = " +
                    to_string(y) + ">";
  ext.cyclic_generators = std::make_pair(std::move(x), std::move(y));
  return ext;
}

HnnWord<Word> parse_hnn_word(std::string_view text) {
  HnnWord<Word> out;
  std::string chunk;
  auto flush = [&] {
    out.bases.push_back(parse_word(chunk));
    chunk.clear();
  };
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token[0] != 't' && token[0] != 'T') {
      chunk += token;
      chunk += ' ';
      continue;
    }
    int const sign = token[0] == 't' ? 1 : -1;
    std::int64_t repeat = 1;
    if (token.size() > 1) {
      if (token[1] != '^') {
        throw ParseError(token, "expected t, T or t^<int>");
      }
      char const* first = token.data() + 2;
      char const* last = token.data() + token.size();
      if (first != last && *first == '+') {
        ++first;
      }
      auto [p, ec] = std::from_chars(first, last, repeat);
      if (first == last || ec != std::errc{} || p != last) {
        throw ParseError(token, "malformed power");
      }
    }
    int const s = repeat < 0 ? -sign : sign;
    for (std::int64_t i = 0; i < (repeat < 0 ? -repeat : repeat); ++i) {
      flush();
      out.signs.push_back(s);
    }
  }
  flush();
  return out;
}

}  // namespace ggt
