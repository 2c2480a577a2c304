#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ggt/filtration.hpp"
#include "ggt/group.hpp"
#include "ggt/permutation.hpp"
#include "ggt/word.hpp"

namespace ggt {

enum class Factor : std::uint8_t { first = 0, second = 1, amalgam = 2 };

template <class E>
struct Syllable {
  Factor factor;
  E element;

  friend bool operator==(Syllable const&, Syllable const&) = default;
};

class SyllableNotInFactor : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// B_1 *_A B_2 over plug-in factor oracles. For each factor i:
/// `embed[i]` is the injection psi_i of the amalgam, `preimage[i]` decides
/// membership in psi_i(A) and returns the preimage, and `coset_rep[i]` is a
/// transversal of the right cosets psi_i(A) g that sends psi_i(A) itself to
/// the identity.
template <class E>
struct AmalgamatedProduct {
  std::array<GroupOracle<E>, 2> factors;
  GroupOracle<E> amalgam;
  std::array<std::function<E(E const&)>, 2> embed;
  std::array<std::function<std::optional<E>(E const&)>, 2> preimage;
  std::array<std::function<E(E const&)>, 2> coset_rep;
  /// Optional factor membership; syllables failing it are rejected.
  std::array<std::function<bool(E const&)>, 2> contains;
  bool is_free = false;
  std::string description;
};

/// prefix * r_1 * ... * r_k with r_j non-identity coset representatives from
/// strictly alternating factors.
template <class E>
struct AmalgamWord {
  E prefix;
  std::vector<Syllable<E>> syllables;

  friend bool operator==(AmalgamWord const&, AmalgamWord const&) = default;
};

inline std::size_t factor_index(Factor f) { return static_cast<std::size_t>(f); }

template <class E>
AmalgamWord<E> amalgam_normal_form(AmalgamatedProduct<E> const& p,
                                   std::vector<Syllable<E>> const& w) {
  E a = p.amalgam.identity;
  std::deque<Syllable<E>> reps;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->factor == Factor::amalgam) {
      a = p.amalgam.multiply(it->element, a);
      continue;
    }
    std::size_t const i = factor_index(it->factor);
    auto const& f = p.factors[i];
    if (p.contains[i] && !p.contains[i](it->element)) {
      throw SyllableNotInFactor(f.format(it->element) + " is not an element of factor " +
                                std::to_string(i + 1));
    }
    E g = f.multiply(it->element, p.embed[i](a));
    if (!reps.empty() && reps.front().factor == it->factor) {
      g = f.multiply(g, reps.front().element);
      reps.pop_front();
    }
    E r = p.coset_rep[i](g);
    auto pre = p.preimage[i](f.multiply(g, f.invert(r)));
    if (!pre) {
      throw ConfigurationError("coset representative selector of factor " + std::to_string(i + 1) +
                               " is not a transversal");
    }
    a = std::move(*pre);
    if (!f.is_identity(r)) {
      reps.push_front(Syllable<E>{it->factor, std::move(r)});
    }
  }
  return AmalgamWord<E>{std::move(a), {reps.begin(), reps.end()}};
}

template <class E>
std::vector<Syllable<E>> to_syllables(AmalgamatedProduct<E> const& p, AmalgamWord<E> const& w) {
  std::vector<Syllable<E>> out;
  if (!p.amalgam.is_identity(w.prefix)) {
    out.push_back({Factor::amalgam, w.prefix});
  }
  out.insert(out.end(), w.syllables.begin(), w.syllables.end());
  return out;
}

template <class E>
bool is_identity(AmalgamatedProduct<E> const& p, AmalgamWord<E> const& w) {
  return w.syllables.empty() && p.amalgam.is_identity(w.prefix);
}

template <class E>
std::vector<Syllable<E>> invert_syllables(AmalgamatedProduct<E> const& p,
                                          std::vector<Syllable<E>> const& w) {
  std::vector<Syllable<E>> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto const& g = it->factor == Factor::amalgam ? p.amalgam : p.factors[factor_index(it->factor)];
    out.push_back({it->factor, g.invert(it->element)});
  }
  return out;
}

template <class E>
std::vector<Syllable<E>> concat(std::vector<Syllable<E>> a, std::vector<Syllable<E>> const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

template <class E>
AmalgamWord<E> amalgam_multiply(AmalgamatedProduct<E> const& p, AmalgamWord<E> const& u,
                                AmalgamWord<E> const& v) {
  return amalgam_normal_form(p, concat(to_syllables(p, u), to_syllables(p, v)));
}

template <class E>
std::string format_syllables(AmalgamatedProduct<E> const& p, std::vector<Syllable<E>> const& w) {
  std::string out;
  for (auto const& s : w) {
    if (!out.empty()) {
      out += ' ';
    }
    switch (s.factor) {
      case Factor::first:
        out += "1:" + p.factors[0].format(s.element);
        break;
      case Factor::second:
        out += "2:" + p.factors[1].format(s.element);
        break;
      case Factor::amalgam:
        out += "A:" + p.amalgam.format(s.element);
        break;
    }
  }
  return out.empty() ? "A:" + p.amalgam.format(p.amalgam.identity) : out;
}

template <class E>
std::string to_string(AmalgamatedProduct<E> const& p, AmalgamWord<E> const& w) {
  return format_syllables(p, to_syllables(p, w));
}

/// Splits `1:<element> 2:<element> A:<element>` into tagged syllables.
template <class E>
std::vector<Syllable<E>> parse_syllables(std::string_view text,
                                         std::function<E(Factor, std::string_view)> const& parse) {
  std::vector<Syllable<E>> out;
  std::vector<std::pair<std::size_t, Factor>> tags;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    bool const at_token_start = i == 0 || text[i - 1] == ' ' || text[i - 1] == '\t';
    if (!at_token_start || text[i + 1] != ':') {
      continue;
    }
    if (text[i] == '1') {
      tags.emplace_back(i, Factor::first);
    } else if (text[i] == '2') {
      tags.emplace_back(i, Factor::second);
    } else if (text[i] == 'A') {
      tags.emplace_back(i, Factor::amalgam);
    }
  }
  std::size_t lead = 0;
  while (lead < text.size() && (text[lead] == ' ' || text[lead] == '\t')) {
    ++lead;
  }
  if (lead < text.size() && (tags.empty() || tags.front().first != lead)) {
    throw ParseError(std::string(text), "syllables must start with 1:, 2: or A:");
  }
  for (std::size_t t = 0; t < tags.size(); ++t) {
    std::size_t const begin = tags[t].first + 2;
    std::size_t const end = t + 1 < tags.size() ? tags[t + 1].first : text.size();
    std::string_view body = text.substr(begin, end - begin);
    while (!body.empty() && (body.back() == ' ' || body.back() == '\t')) {
      body.remove_suffix(1);
    }
    out.push_back({tags[t].second, parse(tags[t].second, body)});
  }
  return out;
}

/// Amalgam of finite enumerable factors; transversals pick the earliest
/// element of each coset in enumeration order. Requires E to be ordered.
template <class E>
AmalgamatedProduct<E> make_finite_amalgam(GroupOracle<E> b1, GroupOracle<E> b2, GroupOracle<E> a,
                                          std::function<E(E const&)> psi1,
                                          std::function<E(E const&)> psi2) {
  auto amalgam_elems = a.elements();
  if (!amalgam_elems) {
    throw ConfigurationError("amalgam " + a.name + " is not enumerable");
  }
  AmalgamatedProduct<E> p;
  p.factors = {b1, b2};
  p.amalgam = a;
  p.embed = {psi1, psi2};
  p.description = b1.name + " *_" + a.name + " " + b2.name;
  for (std::size_t i = 0; i < 2; ++i) {
    auto const& f = p.factors[i];
    auto const& psi = p.embed[i];
    auto elems = f.elements();
    if (!elems) {
      throw ConfigurationError("factor " + f.name + " is not enumerable");
    }
    auto pre = std::make_shared<std::map<E, E>>();
    for (auto const& x : *amalgam_elems) {
      for (auto const& y : *amalgam_elems) {
        if (!(psi(a.multiply(x, y)) == f.multiply(psi(x), psi(y)))) {
          throw ConfigurationError("embedding into " + f.name + " is not a homomorphism at (" +
                                   a.format(x) + ", " + a.format(y) + ")");
        }
      }
      if (!pre->emplace(psi(x), x).second) {
        throw ConfigurationError("embedding into " + f.name + " is not injective");
      }
    }
    auto reps = std::make_shared<std::map<E, E>>();
    std::vector<E> order{f.identity};
    order.insert(order.end(), elems->begin(), elems->end());
    for (auto const& r : order) {
      if (reps->count(r) != 0) {
        continue;
      }
      for (auto const& [image, x] : *pre) {
        reps->emplace(f.multiply(image, r), r);
      }
    }
    p.preimage[i] = [pre](E const& g) -> std::optional<E> {
      auto it = pre->find(g);
      if (it == pre->end()) {
        return std::nullopt;
      }
      return it->second;
    };
    p.coset_rep[i] = [reps, name = f.name](E const& g) {
      auto it = reps->find(g);
      if (it == reps->end()) {
        throw SyllableNotInFactor("element is not in factor " + name);
      }
      return it->second;
    };
    p.contains[i] = [reps](E const& g) { return reps->count(g) != 0; };
  }
  return p;
}

/// Free product: amalgamation over the trivial group.
template <class E>
AmalgamatedProduct<E> free_product(GroupOracle<E> g1, GroupOracle<E> g2) {
  AmalgamatedProduct<E> p;
  GroupOracle<E> trivial;
  trivial.name = "1";
  trivial.identity = g1.identity;
  trivial.multiply = [id = g1.identity](E const&, E const&) { return id; };
  trivial.invert = [id = g1.identity](E const&) { return id; };
  trivial.random = [id = g1.identity](SplitMix64&) { return id; };
  trivial.format = g1.format;
  trivial.enumerate = [id = g1.identity](std::size_t) -> std::optional<std::vector<E>> {
    return std::vector<E>{id};
  };
  p.description = g1.name + " * " + g2.name;
  p.factors = {g1, g2};
  p.amalgam = trivial;
  for (std::size_t i = 0; i < 2; ++i) {
    auto const id = p.factors[i].identity;
    auto const amalgam_id = g1.identity;
    p.embed[i] = [id](E const&) { return id; };
    p.preimage[i] = [id, amalgam_id](E const& g) -> std::optional<E> {
      if (g == id) {
        return amalgam_id;
      }
      return std::nullopt;
    };
    p.coset_rep[i] = [](E const& g) { return g; };
  }
  p.is_free = true;
  return p;
}

struct OrderVerdict {
  enum class Kind { infinite, finite, unknown };
  Kind kind = Kind::unknown;
  std::uint64_t order = 0;  // meaningful for finite

  friend bool operator==(OrderVerdict const&, OrderVerdict const&) = default;
};

std::string to_string(OrderVerdict const& v);

/// Order evidence in a free product: cyclically reduced syllable length
/// >= 2 means infinite order; otherwise the element is conjugate into a
/// factor and that factor's order oracle decides.
template <class E>
OrderVerdict infinite_order_evidence(AmalgamatedProduct<E> const& p,
                                     std::vector<Syllable<E>> const& w) {
  if (!p.is_free) {
    throw std::invalid_argument("infinite_order_evidence needs a free product");
  }
  auto nf = amalgam_normal_form(p, w);
  std::deque<Syllable<E>> s(nf.syllables.begin(), nf.syllables.end());
  while (s.size() >= 2 && s.front().factor == s.back().factor) {
    auto const& f = p.factors[factor_index(s.front().factor)];
    Syllable<E> merged{s.back().factor, f.multiply(s.back().element, s.front().element)};
    s.pop_front();
    s.pop_back();
    if (!f.is_identity(merged.element)) {
      s.push_back(std::move(merged));
    }
  }
  if (s.empty()) {
    return {OrderVerdict::Kind::finite, 1};
  }
  if (s.size() >= 2) {
    return {OrderVerdict::Kind::infinite, 0};
  }
  auto const& f = p.factors[factor_index(s.front().factor)];
  auto order = f.element_order(s.front().element);
  if (!order) {
    return {OrderVerdict::Kind::unknown, 0};
  }
  if (*order == 0) {
    return {OrderVerdict::Kind::infinite, 0};
  }
  return {OrderVerdict::Kind::finite, *order};
}

/// Triviality in (B_1/N_1) * (B_2/N_2) where `trivial[i]` decides membership
/// in N_i: merge neighbours from the same factor, drop syllables that die in
/// their quotient factor, and report whether everything cancels.
template <class E>
bool quotient_triviality_in_free_product(AmalgamatedProduct<E> const& p,
                                         std::array<std::function<bool(E const&)>, 2> const& trivial,
                                         std::vector<Syllable<E>> const& w) {
  std::vector<Syllable<E>> stack;
  for (auto const& s : w) {
    if (s.factor == Factor::amalgam) {
      if (!p.amalgam.is_identity(s.element)) {
        throw std::invalid_argument("amalgam syllable in a free product must be trivial");
      }
      continue;
    }
    auto const& f = p.factors[factor_index(s.factor)];
    if (!stack.empty() && stack.back().factor == s.factor) {
      stack.back().element = f.multiply(stack.back().element, s.element);
    } else {
      stack.push_back(s);
    }
    if (trivial[factor_index(stack.back().factor)](stack.back().element)) {
      stack.pop_back();
    }
  }
  return stack.empty();
}

/// Splits a free-group word into maximal runs of letters from one factor,
/// where `second_factor` says which generators belong to the second.
std::vector<Syllable<Word>> split_free_factors(Word const& w,
                                               std::function<bool(Generator)> const& second_factor);

/// A free group whose generators are split between two free factors.
AmalgamatedProduct<Word> free_product_of_free_groups(std::uint32_t rank,
                                                     std::function<bool(Generator)> second_factor);

// --- filtered amalgams and the projection pi ---------------------------------

/// B_1 *_A B_2 of finite permutation groups, each carrying a chain.
struct FilteredAmalgam {
  PermutationGroup b1;
  PermutationGroup b2;
  PermutationGroup a;
  std::function<Permutation(Permutation const&)> psi1;
  std::function<Permutation(Permutation const&)> psi2;
  FilteredGroup<Permutation> chain1;
  FilteredGroup<Permutation> chain2;
  FilteredGroup<Permutation> chain_a;

  AmalgamatedProduct<Permutation> product() const;
};

/// S3 *_{C3} S3 with chains S3 > A3 > 1 on both factors and C3 = C3 > 1 on
/// the amalgam; both embeddings are inclusions.
FilteredAmalgam s3_amalgam_over_c3();

/// pi : B_1 *_A B_2 -> G_n* = B_1/P_nB_1 *_{A/P_nA} B_2/P_nB_2, built from the
/// canonical epimorphisms of the factors.
class PiProjection {
 public:
  PiProjection(FilteredAmalgam const& c, std::size_t n);

  AmalgamWord<Permutation> operator()(std::vector<Syllable<Permutation>> const& w) const;
  AmalgamatedProduct<Permutation> const& target() const noexcept { return target_; }
  std::size_t level() const noexcept { return level_; }

 private:
  std::size_t level_;
  std::optional<FiniteQuotient> q1_;
  std::optional<FiniteQuotient> q2_;
  std::optional<FiniteQuotient> qa_;
  AmalgamatedProduct<Permutation> target_;
};

/// w in P_nC = ker(pi).
bool pnC_member(PiProjection const& pi, std::vector<Syllable<Permutation>> const& w);

std::vector<Syllable<Permutation>> parse_permutation_syllables(std::string_view text,
                                                               std::size_t degree);

}  // namespace ggt
