#include "ggt/amalgam.hpp"

namespace ggt {

std::string to_string(OrderVerdict const& v) {
  switch (v.kind) {
    case OrderVerdict::Kind::infinite:
      return "infinite";
    case OrderVerdict::Kind::finite:
      return "finite(" + std::to_string(v.order) + ")";
    case OrderVerdict::Kind::unknown:
      break;
  }
  return "unknown";
}

std::vector<Syllable<Word>> split_free_factors(Word const& w,
                                               std::function<bool(Generator)> const& second_factor) {
  std::vector<Syllable<Word>> out;
  std::vector<std::int32_t> run;
  Factor current = Factor::first;
  auto flush = [&] {
    if (!run.empty()) {
      Word piece;
      for (auto code : run) {
        piece = multiply(piece, Word{code});
      }
      out.push_back({current, std::move(piece)});
      run.clear();
    }
  };
  for (auto const& l : w.letters()) {
    Factor const f = second_factor(l.generator()) ? Factor::second : Factor::first;
    if (f != current) {
      flush();
      current = f;
    }
    run.push_back(l.code());
  }
  flush();
  return out;
}

AmalgamatedProduct<Word> free_product_of_free_groups(std::uint32_t rank,
                                                     std::function<bool(Generator)> second_factor) {
  auto f = free_group_oracle(rank);
  auto p = free_product(f, f);
  p.factors[0].name = "F_first";
  p.factors[1].name = "F_second";
  p.description = "free factors of F" + std::to_string(rank);
  for (std::size_t i = 0; i < 2; ++i) {
    bool const want_second = i == 1;
    p.contains[i] = [second_factor, want_second](Word const& w) {
      for (auto const& l : w.letters()) {
        if (second_factor(l.generator()) != want_second) {
          return false;
        }
      }
      return true;
    };
  }
  return p;
}

AmalgamatedProduct<Permutation> FilteredAmalgam::product() const {
  return make_finite_amalgam(b1.oracle("B1"), b2.oracle("B2"), a.oracle("A"), psi1, psi2);
}

FilteredAmalgam s3_amalgam_over_c3() {
  auto s3 = perm_group(std::vector<std::string>{"(1 2)", "(1 2 3)"}, 3);
  auto c3 = perm_group(std::vector<std::string>{"(1 2 3)"}, 3);
  auto const& c3_elems = c3.elements();
  PermutationSet c3_all(c3_elems.begin(), c3_elems.end());
  auto inclusion = [](Permutation const& p) { return p; };
  auto chain_a = finite_chain_filtration(c3, {c3_all, c3_all, {c3.identity()}}, "C3 = C3 > 1");
  return FilteredAmalgam{s3, s3, c3, inclusion, inclusion, s3_chain(), s3_chain(), chain_a};
}

namespace {

PermutationSet level_subgroup(PermutationGroup const& g, FilteredGroup<Permutation> const& chain,
                              std::size_t n) {
  PermutationSet out;
  for (auto const& p : g.elements()) {
    if (chain.member(n, p)) {
      out.insert(p);
    }
  }
  return out;
}

FiniteQuotient checked_quotient(PermutationGroup const& g, PermutationSet kernel,
                                std::string const& what) {
  if (!is_normal_subgroup(g, kernel)) {
    throw ConfigurationError(what + " is not a normal subgroup");
  }
  return FiniteQuotient(g, std::move(kernel));
}

}  // namespace

PiProjection::PiProjection(FilteredAmalgam const& c, std::size_t n) : level_(n) {
  std::string const lvl = "level " + std::to_string(n);
  q1_.emplace(checked_quotient(c.b1, level_subgroup(c.b1, c.chain1, n), "P_n B1 at " + lvl));
  q2_.emplace(checked_quotient(c.b2, level_subgroup(c.b2, c.chain2, n), "P_n B2 at " + lvl));
  qa_.emplace(checked_quotient(c.a, level_subgroup(c.a, c.chain_a, n), "P_n A at " + lvl));
  for (auto const& x : c.a.elements()) {
    bool const in_a = c.chain_a.member(n, x);
    if (in_a != c.chain1.member(n, c.psi1(x)) || in_a != c.chain2.member(n, c.psi2(x))) {
      throw ConfigurationError("chains are not compatible with the embeddings at " + lvl + " (" +
                               to_string(x) + ")");
    }
  }
  auto q1 = *q1_;
  auto q2 = *q2_;
  auto psi1 = c.psi1;
  auto psi2 = c.psi2;
  target_ = make_finite_amalgam<Permutation>(
      q1.oracle("B1/P" + std::to_string(n)), q2.oracle("B2/P" + std::to_string(n)),
      qa_->oracle("A/P" + std::to_string(n)),
      [q1, psi1](Permutation const& a) { return q1.project(psi1(a)); },
      [q2, psi2](Permutation const& a) { return q2.project(psi2(a)); });
}

AmalgamWord<Permutation> PiProjection::operator()(
    std::vector<Syllable<Permutation>> const& w) const {
  std::vector<Syllable<Permutation>> image;
  image.reserve(w.size());
  for (auto const& s : w) {
    switch (s.factor) {
      case Factor::first:
        image.push_back({s.factor, q1_->project(s.element)});
        break;
      case Factor::second:
        image.push_back({s.factor, q2_->project(s.element)});
        break;
      case Factor::amalgam:
        image.push_back({s.factor, qa_->project(s.element)});
        break;
    }
  }
  return amalgam_normal_form(target_, image);
}

bool pnC_member(PiProjection const& pi, std::vector<Syllable<Permutation>> const& w) {
  return is_identity(pi.target(), pi(w));
}

std::vector<Syllable<Permutation>> parse_permutation_syllables(std::string_view text,
                                                               std::size_t degree) {
  return parse_syllables<Permutation>(
      text, [degree](Factor, std::string_view body) { return parse_permutation(body, degree); });
}

}  // namespace ggt
