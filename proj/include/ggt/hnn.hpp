#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ggt/group.hpp"
#include "ggt/report.hpp"
#include "ggt/rng.hpp"
#include "ggt/word.hpp"

namespace ggt {

/// HNN extension <G, t | t^-1 a t = phi(a), a in A> with a single stable
/// letter. `phi` answers membership in A together with the image, and
/// `phi_inverse` the same for B.
template <class E>
struct HnnExtension {
  GroupOracle<E> base;
  std::function<std::optional<E>(E const&)> phi;
  std::function<std::optional<E>(E const&)> phi_inverse;
  /// Generators (x, y) with x^t = y when A and B are cyclic.
  std::optional<std::pair<E, E>> cyclic_generators;
  std::string description;
};

/// g_0 t^{e_1} g_1 ... t^{e_k} g_k with e_i = +-1.
template <class E>
struct HnnWord {
  std::vector<E> bases;   // k + 1 entries
  std::vector<int> signs;  // k entries

  std::size_t t_count() const noexcept { return signs.size(); }

  friend bool operator==(HnnWord const&, HnnWord const&) = default;
};

template <class E>
HnnWord<E> hnn_from_base(E g) {
  return HnnWord<E>{{std::move(g)}, {}};
}

template <class E>
HnnWord<E> hnn_multiply(HnnExtension<E> const& ext, HnnWord<E> const& u, HnnWord<E> const& v) {
  HnnWord<E> out = u;
  out.bases.back() = ext.base.multiply(out.bases.back(), v.bases.front());
  out.bases.insert(out.bases.end(), v.bases.begin() + 1, v.bases.end());
  out.signs.insert(out.signs.end(), v.signs.begin(), v.signs.end());
  return out;
}

template <class E>
HnnWord<E> hnn_invert(HnnExtension<E> const& ext, HnnWord<E> const& w) {
  HnnWord<E> out;
  for (auto it = w.bases.rbegin(); it != w.bases.rend(); ++it) {
    out.bases.push_back(ext.base.invert(*it));
  }
  for (auto it = w.signs.rbegin(); it != w.signs.rend(); ++it) {
    out.signs.push_back(-*it);
  }
  return out;
}

/// t^n (n may be negative).
template <class E>
HnnWord<E> hnn_t_power(HnnExtension<E> const& ext, std::int64_t n) {
  HnnWord<E> out{{ext.base.identity}, {}};
  for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) {
    out.signs.push_back(n < 0 ? -1 : 1);
    out.bases.push_back(ext.base.identity);
  }
  return out;
}

/// h^{t^n} = t^-n h t^n.
template <class E>
HnnWord<E> hnn_conjugate_by_t(HnnExtension<E> const& ext, E const& h, std::int64_t n) {
  return hnn_multiply(ext, hnn_multiply(ext, hnn_t_power(ext, -n), hnn_from_base(h)),
                      hnn_t_power(ext, n));
}

/// One rewrite t^-1 g t -> phi(g) (kind A) or t g t^-1 -> phi^-1(g) (kind B)
/// at t-letter position `position`.
template <class E>
struct BrittonStep {
  std::size_t position;
  char kind;  // 'A' or 'B'
  E before;
  E after;
};

template <class E>
std::optional<E> pinch_image(HnnExtension<E> const& ext, int left, E const& g, int right) {
  if (left == -1 && right == 1) {
    return ext.phi(g);
  }
  if (left == 1 && right == -1) {
    return ext.phi_inverse(g);
  }
  return std::nullopt;
}

/// Leftmost pinch first, rescanning from just before each rewrite, until no
/// pinch remains.
template <class E>
HnnWord<E> britton_reduce(HnnExtension<E> const& ext, HnnWord<E> w,
                          std::vector<BrittonStep<E>>* trace = nullptr) {
  std::size_t j = 0;
  while (w.signs.size() >= 2 && j + 1 < w.signs.size()) {
    auto image = pinch_image(ext, w.signs[j], w.bases[j + 1], w.signs[j + 1]);
    if (!image) {
      ++j;
      continue;
    }
    if (trace) {
      trace->push_back({j, w.signs[j] == -1 ? 'A' : 'B', w.bases[j + 1], *image});
    }
    E merged = ext.base.multiply(ext.base.multiply(w.bases[j], *image), w.bases[j + 2]);
    w.bases[j] = std::move(merged);
    w.bases.erase(w.bases.begin() + static_cast<std::ptrdiff_t>(j) + 1,
                  w.bases.begin() + static_cast<std::ptrdiff_t>(j) + 3);
    w.signs.erase(w.signs.begin() + static_cast<std::ptrdiff_t>(j),
                  w.signs.begin() + static_cast<std::ptrdiff_t>(j) + 2);
    j = j == 0 ? 0 : j - 1;
  }
  return w;
}

template <class E>
bool is_britton_reduced(HnnExtension<E> const& ext, HnnWord<E> const& w) {
  for (std::size_t j = 0; j + 1 < w.signs.size(); ++j) {
    if (pinch_image(ext, w.signs[j], w.bases[j + 1], w.signs[j + 1])) {
      return false;
    }
  }
  return true;
}

/// Every recorded step must be an instance of a defining relation.
template <class E>
bool audit_trace(HnnExtension<E> const& ext, std::vector<BrittonStep<E>> const& trace) {
  for (auto const& s : trace) {
    auto image = s.kind == 'A' ? ext.phi(s.before) : ext.phi_inverse(s.before);
    if (!image || !(*image == s.after)) {
      return false;
    }
  }
  return true;
}

class NotReduced : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class E>
std::size_t t_length(HnnExtension<E> const& ext, HnnWord<E> const& w) {
  if (!is_britton_reduced(ext, w)) {
    throw NotReduced("t_length needs a Britton-reduced word");
  }
  return w.t_count();
}

template <class E>
bool hnn_is_trivial(HnnExtension<E> const& ext, HnnWord<E> const& w) {
  auto r = britton_reduce(ext, w);
  return r.signs.empty() && ext.base.is_identity(r.bases.front());
}

struct ClosureSample {
  std::vector<std::int64_t> t_exponents;
};

/// h_1^{t^{n_1}} ... h_k^{t^{n_k}} with h_i drawn from `h_sampler` and
/// |n_i| <= max_shift.
template <class E>
HnnWord<E> sample_closure_element(HnnExtension<E> const& ext,
                                  std::function<E(SplitMix64&)> const& h_sampler, std::size_t k,
                                  std::int64_t max_shift, std::uint64_t seed,
                                  ClosureSample* info = nullptr) {
  SplitMix64 rng(seed);
  HnnWord<E> out = hnn_from_base(ext.base.identity);
  for (std::size_t i = 0; i < k; ++i) {
    E h = h_sampler(rng);
    std::int64_t const n = rng.range(-max_shift, max_shift);
    if (info) {
      info->t_exponents.push_back(n);
    }
    out = hnn_multiply(ext, out, hnn_conjugate_by_t(ext, h, n));
  }
  return out;
}

class HypothesisFailure : public std::runtime_error {
 public:
  HypothesisFailure(std::int64_t k, std::string const& what)
      : std::runtime_error(what), k_(k) {}
  std::int64_t k() const noexcept { return k_; }

 private:
  std::int64_t k_;
};

template <class E>
std::string to_string(HnnExtension<E> const& ext, HnnWord<E> const& w) {
  std::string out;
  auto append = [&](std::string const& s) {
    if (s.empty()) {
      return;
    }
    if (!out.empty()) {
      out += ' ';
    }
    out += s;
  };
  for (std::size_t i = 0; i < w.bases.size(); ++i) {
    append(ext.base.format(w.bases[i]));
    if (i < w.signs.size()) {
      append(w.signs[i] > 0 ? "t" : "T");
    }
  }
  return out;
}

struct LemmaCheckOptions {
  std::size_t trials = 1000;
  std::size_t k_max = 4;
  std::int64_t max_shift = 3;
  std::int64_t hypothesis_bound = 6;
  bool skip_hypothesis = false;
  std::uint64_t seed = 0;
  /// Forwarded into replay records, e.g. "hnn:1" for the flagship instance.
  std::string replay_id;
};

/// Samples elements of the normal closure H^<t> and checks that every one
/// whose Britton reduction has t-length 0 lies in H.
template <class E>
Report check_lemma_intersection(HnnExtension<E> const& ext,
                                std::function<bool(E const&)> const& h_member,
                                std::function<E(SplitMix64&)> const& h_sampler,
                                LemmaCheckOptions const& opt) {
  Report r;
  r.scenario = "check_lemma_intersection";
  r.parameters["extension"] = ext.description;
  r.parameters["trials"] = std::to_string(opt.trials);
  r.parameters["k_max"] = std::to_string(opt.k_max);
  r.parameters["max_shift"] = std::to_string(opt.max_shift);
  r.seed = opt.seed;
  if (!opt.skip_hypothesis && ext.cyclic_generators) {
    auto const& [x, y] = *ext.cyclic_generators;
    for (std::int64_t k = -opt.hypothesis_bound; k <= opt.hypothesis_bound; ++k) {
      if (h_member(ext.base.power(x, k)) != h_member(ext.base.power(y, k))) {
        throw HypothesisFailure(k, "x^k in H and y^k in H disagree at k = " + std::to_string(k));
      }
    }
    r.notes.push_back("hypothesis x^k in H <=> y^k in H holds for |k| <= " +
                      std::to_string(opt.hypothesis_bound));
  }
  SplitMix64 rng(opt.seed);
  std::size_t landed = 0;
  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    std::size_t const k = 1 + rng.below(opt.k_max);
    auto const w = sample_closure_element(ext, h_sampler, k, opt.max_shift, rng.next());
    std::vector<BrittonStep<E>> trace;
    auto const reduced = britton_reduce(ext, w, &trace);
    if (!audit_trace(ext, trace)) {
      r.check(false, [&] {
        return Violation{"trace_audit", std::nullopt, {to_string(ext, w)}, {}};
      });
    }
    if (!reduced.signs.empty()) {
      continue;
    }
    ++landed;
    r.check(h_member(reduced.bases.front()), [&] {
      std::vector<std::string> replay;
      if (!opt.replay_id.empty()) {
        replay = {"lemma", opt.replay_id, to_string(ext, w)};
      }
      return Violation{"intersection", std::nullopt,
                       {to_string(ext, w), ext.base.format(reduced.bases.front())}, replay};
    });
  }
  r.notes.push_back(std::to_string(landed) + " of " + std::to_string(opt.trials) +
                    " sampled closure elements reduced into the base");
  return r;
}

// --- free-group base instance ----------------------------------------------

/// HNN extension of the free group of `rank` with x^t = y for cyclic
/// A = <x>, B = <y>, phi(x^k) = y^k.
HnnExtension<Word> make_cyclic_hnn(Word x, Word y, std::uint32_t rank);

/// Word grammar plus stable-letter tokens `t`, `T`, `t^<int>`.
HnnWord<Word> parse_hnn_word(std::string_view text);

}  // namespace ggt
