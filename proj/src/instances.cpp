#include "instances.hpp"

namespace ggt::detail {

namespace {

Word x1() { return Word::generator(1); }
Word x2() { return Word::generator(2); }

std::function<Word(SplitMix64&)> derived_sampler(std::size_t n) {
  return [n](SplitMix64& rng) {
    Word h = random_derived_element(DerivedLevel{n}, n >= 2 ? 2 : 3, rng.next(), 2);
    if (rng.coin()) {
      h = conjugate(h, random_reduced_word(rng, 2, rng.below(4)));
    }
    return h;
  };
}

}  // namespace

LemmaInstance lemma_instance(std::string const& id) {
  LemmaInstance inst;
  if (id == "hnn-normal-x") {
    inst.ext = make_cyclic_hnn(x1(), x2(), 2);
    inst.h_member = [](Word const& w) { return exponent_sum(w, Generator{2}) == 0; };
    inst.h_sampler = [](SplitMix64& rng) {
      Word h = conjugate(power(x1(), rng.range(-3, 3)), random_reduced_word(rng, 2, rng.below(4)));
      if (rng.coin()) {
        h = multiply(h, commutator(random_reduced_word(rng, 2, 1 + rng.below(3)),
                                   random_reduced_word(rng, 2, 1 + rng.below(3))));
      }
      return h;
    };
    inst.check_hypothesis = false;
    return inst;
  }
  auto const colon = id.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("unknown lemma instance '" + id + "'");
  }
  auto const kind = id.substr(0, colon);
  auto const n = parse_number<std::size_t>(std::string_view(id).substr(colon + 1), "level");
  if (n < 1 || n > 3) {
    throw std::invalid_argument("lemma instance level must be 1..3");
  }
  if (kind == "hnn") {
    inst.ext = make_cyclic_hnn(x1(), x2(), 2);
  } else if (kind == "hnn-broken-phi") {
    inst.ext = make_cyclic_hnn(x1(), power(x2(), 2), 2);
    // The hypothesis is stated for y = x2, not for the image of x.
    inst.ext.cyclic_generators = std::make_pair(x1(), x2());
  } else {
    throw std::invalid_argument("unknown lemma instance '" + id + "'");
  }
  inst.h_member = [n](Word const& w) { return derived_member(w, DerivedLevel{n}); };
  inst.h_sampler = derived_sampler(n);
  return inst;
}

std::pair<Word, Word> identity_sides(int which, std::size_t k, bool flipped) {
  auto conj = [flipped](Word const& g, Word const& h) {
    return flipped ? conjugate(g, invert(h)) : conjugate(g, h);
  };
  Word const a = x1();
  Word const x = x2();
  Word const x_sq = power(x, 2);
  Word const c = multiply(conj(invert(a), x_sq), conj(a, x));
  Word const xa_x = multiply(conj(x, a), x);
  if (which == 1) {
    return {xa_x, multiply(x_sq, c)};
  }
  Word rhs;
  for (std::size_t i = 1; i <= k; ++i) {
    rhs = multiply(rhs, conj(c, power(x, -2 * static_cast<std::int64_t>(i))));
  }
  rhs = multiply(rhs, power(x, 2 * static_cast<std::int64_t>(k)));
  return {power(xa_x, static_cast<std::int64_t>(k)), rhs};
}

AmalgamatedProduct<Word> witness_product() {
  return free_product_of_free_groups(3, [](Generator g) { return g.index == 3; });
}

Word witness_element(Word const& a, int which, std::size_t k) {
  Word const x = Word::generator(3);
  Word base = multiply(conjugate(x, a), x);
  if (which == 2) {
    base = multiply(x, base);
  }
  return power(base, static_cast<std::int64_t>(k));
}

bool in_witness_kernel(AmalgamatedProduct<Word> const& p, Word const& w, std::size_t level) {
  std::array<std::function<bool(Word const&)>, 2> trivial{
      [level](Word const& f) { return derived_member(f, DerivedLevel{level}); },
      [](Word const& g) { return g.empty(); }};
  return quotient_triviality_in_free_product(
      p, trivial, split_free_factors(w, [](Generator g) { return g.index == 3; }));
}

}  // namespace ggt::detail
