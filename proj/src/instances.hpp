#pragma once

// Concrete instances shared by the scenarios and by `ggt replay`, so a
// replay vector rebuilds exactly what the scenario checked.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "ggt/amalgam.hpp"
#include "ggt/filtration.hpp"
#include "ggt/fox.hpp"
#include "ggt/hnn.hpp"
#include "ggt/permutation.hpp"
#include "ggt/rng.hpp"
#include "ggt/word.hpp"

namespace ggt::detail {

template <class T>
T parse_number(std::string_view s, char const* what) {
  T value{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(s) + "'");
  }
  return value;
}

// --- HNN lemma instances ----------------------------------------------------

struct LemmaInstance {
  HnnExtension<Word> ext;
  std::function<bool(Word const&)> h_member;
  std::function<Word(SplitMix64&)> h_sampler;
  bool check_hypothesis = true;
};

/// "hnn:N"            base F(x1, x2), x1^t = x2, H = F^(N)
/// "hnn-broken-phi:N" as above with x1^k -> x2^{2k}
/// "hnn-normal-x"     H = normal closure of x1 (fails the hypothesis)
LemmaInstance lemma_instance(std::string const& id);

// --- identities under g^h = h^-1 g h (or the flipped h g h^-1) -------------------

/// which = 1: x^a x against x^2 (a^{-x^2} a^x); which = 2: (x^a x)^k against
/// the product of the k conjugates times x^{2k}. a = x1, x = x2.
std::pair<Word, Word> identity_sides(int which, std::size_t k, bool flipped);

// --- witness elements ---------------------------------------------------------

/// F = <x1, x2> and x = x3; P_0 H = F * <x>.
AmalgamatedProduct<Word> witness_product();
/// which = 1: (x^a x)^k, which = 2: (x x^a x)^k.
Word witness_element(Word const& a, int which, std::size_t k);
/// Membership in (F^(level))^<x>, decided by triviality in (F/F^(level)) * <x>.
bool in_witness_kernel(AmalgamatedProduct<Word> const& p, Word const& w, std::size_t level);

// --- replayable chains ----------------------------------------------------------

template <class E>
std::optional<FilteredGroup<E>> base_chain(std::string const& id);

template <>
inline std::optional<FilteredGroup<Word>> base_chain<Word>(std::string const& id) {
  auto const colon = id.find(':');
  if (colon == std::string::npos) {
    return std::nullopt;
  }
  auto const kind = id.substr(0, colon);
  auto const rank = parse_number<std::uint32_t>(std::string_view(id).substr(colon + 1), "rank");
  if (kind == "derived") {
    return derived_filtration(rank);
  }
  if (kind == "broken") {
    return broken_chain_filtration(rank);
  }
  return std::nullopt;
}

template <>
inline std::optional<FilteredGroup<Permutation>> base_chain<Permutation>(std::string const& id) {
  if (id == "s3chain") {
    return s3_chain();
  }
  return std::nullopt;
}

/// Resolves nested "shift:k:<id>" / "pad:k:<id>" descriptors.
template <class E>
std::optional<FilteredGroup<E>> resolve_chain(std::string const& id) {
  for (std::string const prefix : {"shift:", "pad:"}) {
    if (id.rfind(prefix, 0) != 0) {
      continue;
    }
    auto const rest = id.substr(prefix.size());
    auto const colon = rest.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("malformed chain id '" + id + "'");
    }
    auto const k = parse_number<std::size_t>(std::string_view(rest).substr(0, colon), "shift");
    auto inner = resolve_chain<E>(rest.substr(colon + 1));
    if (!inner) {
      return std::nullopt;
    }
    return prefix == std::string("shift:") ? chain_shift(*inner, k) : chain_pad(*inner, k);
  }
  return base_chain<E>(id);
}

}  // namespace ggt::detail
