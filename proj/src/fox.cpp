#include "ggt/fox.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace ggt {

GroupRingElement GroupRingElement::term(Integer coefficient, Word support) {
  GroupRingElement e;
  e.add(support, coefficient);
  return e;
}

void GroupRingElement::add(Word const& support, Integer const& coefficient) {
  if (coefficient == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(support, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

GroupRingElement& GroupRingElement::operator+=(GroupRingElement const& other) {
  for (auto const& [w, c] : other.terms_) {
    add(w, c);
  }
  return *this;
}

Integer GroupRingElement::augmentation() const {
  Integer s = 0;
  for (auto const& [w, c] : terms_) {
    s += c;
  }
  return s;
}

GroupRingElement operator+(GroupRingElement a, GroupRingElement const& b) {
  a += b;
  return a;
}

GroupRingElement operator*(Word const& u, GroupRingElement const& e) {
  GroupRingElement out;
  for (auto const& [w, c] : e.terms()) {
    out.add(multiply(u, w), c);
  }
  return out;
}

GroupRingElement operator-(GroupRingElement const& e) {
  GroupRingElement out;
  for (auto const& [w, c] : e.terms()) {
    out.add(w, -c);
  }
  return out;
}

std::string to_string(GroupRingElement const& e) {
  if (e.is_zero()) {
    return "0";
  }
  std::string out;
  for (auto const& [w, c] : e.terms()) {
    if (!out.empty()) {
      out += " + ";
    }
    out += c.str();
    out += '*';
    out += to_string(w);
  }
  return out;
}

GroupRingElement fox_derivative(Word const& w, Generator g) {
  GroupRingElement out;
  std::vector<Letter> prefix;
  prefix.reserve(w.length());
  for (Letter l : w.letters()) {
    if (l.generator() == g && l.sign() > 0) {
      out.add(Word(prefix), 1);
    }
    prefix.push_back(l);
    if (l.generator() == g && l.sign() < 0) {
      // d(g^-1)/dg = -g^-1, so the support includes the letter itself.
      out.add(Word(prefix), -1);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Magnus canonicalizer

MagnusCanonicalizer::MagnusCanonicalizer(std::size_t max_level) : tables_(max_level + 1) {}

MagnusCanonicalizer::Label MagnusCanonicalizer::intern(std::size_t level, std::string key) {
  if (level >= tables_.size()) {
    tables_.resize(level + 1);
  }
  auto& table = tables_[level];
  auto [it, inserted] = table.try_emplace(std::move(key), static_cast<Label>(table.size()));
  return it->second;
}

MagnusCanonicalizer::Label MagnusCanonicalizer::label(Word const& w, std::size_t level) {
  return prefix_labels(w, level).back();
}

std::vector<MagnusCanonicalizer::Label> MagnusCanonicalizer::prefix_labels(Word const& w,
                                                                           std::size_t level) {
  std::size_t const len = w.length();
  std::vector<Label> out(len + 1, 0);
  if (level == 0) {
    return out;
  }
  if (level == 1) {
    // Abelianization: the running exponent vector.
    std::map<std::uint32_t, std::int64_t> exps;
    auto key = [&] {
      std::string k;
      for (auto const& [g, e] : exps) {
        k += std::to_string(g);
        k += ':';
        k += std::to_string(e);
        k += ';';
      }
      return k;
    };
    out[0] = intern(1, key());
    for (std::size_t j = 0; j < len; ++j) {
      auto g = w[j].generator().index;
      if ((exps[g] += w[j].sign()) == 0) {
        exps.erase(g);
      }
      out[j + 1] = intern(1, key());
    }
    return out;
  }

  // Level n >= 2: a prefix p is determined modulo F^(n) by its class modulo
  // F^(n-1) together with its Fox derivatives in Z[F/F^(n-1)]. The supports
  // of those derivatives are themselves prefixes of w, so they are labelled
  // by the level n-1 prefix labels. Coefficients are bounded by |w|, so
  // 64-bit accumulation is exact here.
  std::vector<Label> const lower = prefix_labels(w, level - 1);
  std::map<std::pair<std::uint32_t, Label>, std::int64_t> fox;
  auto key = [&](std::size_t j) {
    std::string k = std::to_string(lower[j]);
    k += '|';
    for (auto const& [gl, c] : fox) {
      k += std::to_string(gl.first);
      k += ',';
      k += std::to_string(gl.second);
      k += ',';
      k += std::to_string(c);
      k += ';';
    }
    return k;
  };
  auto bump = [&](std::uint32_t g, Label support, std::int64_t delta) {
    auto const key_pair = std::make_pair(g, support);
    if ((fox[key_pair] += delta) == 0) {
      fox.erase(key_pair);
    }
  };
  out[0] = intern(level, key(0));
  for (std::size_t j = 0; j < len; ++j) {
    auto const g = w[j].generator().index;
    if (w[j].sign() > 0) {
      bump(g, lower[j], 1);
    } else {
      bump(g, lower[j + 1], -1);
    }
    out[j + 1] = intern(level, key(j + 1));
  }
  return out;
}

bool ring_is_zero_mod(GroupRingElement const& e, DerivedLevel level) {
  if (level.n == 0) {
    return e.augmentation() == 0;
  }
  MagnusCanonicalizer canon(level.n);
  std::map<MagnusCanonicalizer::Label, Integer> merged;
  for (auto const& [w, c] : e.terms()) {
    merged[canon.label(w, level.n)] += c;
  }
  for (auto const& [label, c] : merged) {
    if (c != 0) {
      return false;
    }
  }
  return true;
}

namespace {

struct MemoKey {
  Word word;
  std::size_t level;
  friend bool operator==(MemoKey const&, MemoKey const&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(MemoKey const& k) const noexcept {
    return std::hash<Word>{}(k.word) ^ (k.level * 0x9E3779B97F4A7C15ULL);
  }
};

constexpr std::size_t kMemoCapacity = 1 << 16;

struct Memo {
  std::shared_mutex mutex;
  std::unordered_map<MemoKey, bool, MemoKeyHash> table;
};

Memo& memo() {
  static Memo m;
  return m;
}

bool derived_member_uncached(Word const& w, std::size_t level) {
  if (level == 0 || w.empty()) {
    return true;
  }
  MagnusCanonicalizer canon(level);
  return canon.label(w, level) == canon.label(Word{}, level);
}

}  // namespace

bool derived_member(Word const& w, DerivedLevel level) {
  if (level.n == 0 || w.empty()) {
    return true;
  }
  auto& m = memo();
  MemoKey key{w, level.n};
  {
    std::shared_lock lock(m.mutex);
    if (auto it = m.table.find(key); it != m.table.end()) {
      return it->second;
    }
  }
  bool const result = derived_member_uncached(w, level.n);
  std::unique_lock lock(m.mutex);
  if (m.table.size() >= kMemoCapacity) {
    m.table.clear();
  }
  m.table.emplace(std::move(key), result);
  return result;
}

std::size_t derived_member_cache_size() {
  auto& m = memo();
  std::shared_lock lock(m.mutex);
  return m.table.size();
}

void clear_derived_member_cache() {
  auto& m = memo();
  std::unique_lock lock(m.mutex);
  m.table.clear();
}

DerivedDepth derived_depth(Word const& w, std::size_t max) {
  for (std::size_t n = 1; n <= max; ++n) {
    if (!derived_member(w, DerivedLevel{n})) {
      return {n - 1, false};
    }
  }
  return {max, true};
}

std::string to_string(DerivedDepth const& d) {
  return d.at_least ? ">=" + std::to_string(d.depth) : std::to_string(d.depth);
}

namespace {

constexpr int kDerivedRetryBudget = 256;

Word nested_commutator(std::size_t level, std::size_t size, std::uint32_t rank,
                       SplitMix64& rng) {
  if (level == 0) {
    for (int attempt = 0; attempt < kDerivedRetryBudget; ++attempt) {
      auto const len = static_cast<std::size_t>(rng.range(1, static_cast<std::int64_t>(size)));
      Word w = random_reduced_word(rng, rank, len);
      if (!w.empty()) {
        return w;
      }
    }
  } else {
    for (int attempt = 0; attempt < kDerivedRetryBudget; ++attempt) {
      Word u = nested_commutator(level - 1, size, rank, rng);
      Word v = nested_commutator(level - 1, size, rank, rng);
      Word c = commutator(u, v);
      if (!c.empty()) {
        return c;
      }
    }
  }
  throw DerivedElementError("random_derived_element: every candidate at level " +
                            std::to_string(level) + " reduced to the identity");
}

}  // namespace

Word random_derived_element(DerivedLevel level, std::size_t size, std::uint64_t seed,
                            std::uint32_t rank) {
  if (rank < 2 && level.n > 0) {
    throw std::invalid_argument("random_derived_element needs ambient rank >= 2");
  }
  if (rank == 0 || size == 0) {
    throw std::invalid_argument("random_derived_element needs rank >= 1 and size >= 1");
  }
  SplitMix64 rng(seed);
  return nested_commutator(level.n, size, rank, rng);
}

}  // namespace ggt
