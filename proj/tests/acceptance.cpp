// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "ggt/amalgam.hpp"
#include "ggt/filtration.hpp"
#include "ggt/fox.hpp"
#include "ggt/scenarios.hpp"
#include "ggt/stallings.hpp"
#include "ggt/wreath.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace ggt;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, std::string const& title, double limit_secs,
               std::function<Outcome()> const& body) {
  auto const start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (std::exception const& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  double const secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs >= limit_secs) {
    out = {false, out.detail + "; over the " + std::to_string(limit_secs) + "s budget"};
  }
  if (!out.ok) {
    ++failures;
  }
  std::printf("%s C%d %s (%.2fs) %s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              out.detail.c_str());
  std::fflush(stdout);
}

std::string str(std::uint64_t v) { return std::to_string(v); }

Outcome c1_identities() {
  auto const start = std::chrono::steady_clock::now();
  std::size_t held = 0;
  auto const [l1, r1] = detail::identity_sides(1, 1, false);
  held += l1 == r1 ? 1 : 0;
  for (std::size_t k = 1; k <= 6; ++k) {
    auto const [lhs, rhs] = detail::identity_sides(2, k, false);
    held += lhs == rhs ? 1 : 0;
  }
  // "k=1" reads X1 x2 x1 x2 in this alphabet.
  bool const shape = to_string(l1) == "X1 x2 x1 x2";
  double const secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {held == 7 && shape && secs < 1.0,
          str(held) + "/7 identities hold, k=1 form " + (shape ? "ok" : "wrong")};
}

Outcome c2_fox() {
  SplitMix64 rng(42);
  std::size_t bad = 0;
  for (int i = 0; i < 1000; ++i) {
    std::uint32_t const rank = 1 + static_cast<std::uint32_t>(rng.below(3));
    Word const u = random_reduced_word(rng, rank, rng.below(13));
    Word const v = random_reduced_word(rng, rank, rng.below(13));
    for (std::uint32_t g = 1; g <= rank; ++g) {
      Generator const gen{g};
      if (!(fox_derivative(multiply(u, v), gen) ==
            fox_derivative(u, gen) + u * fox_derivative(v, gen))) {
        ++bad;
      }
      if (fox_derivative(u, gen).augmentation() != exponent_sum(u, gen)) {
        ++bad;
      }
    }
  }
  auto const words = all_words_up_to(2, 8);
  std::size_t disagree = 0;
  for (auto const& x : words) {
    for (std::size_t n = 1; n <= 2; ++n) {
      if (derived_member(x, DerivedLevel{n}) != wreath_oracle_member(x, n)) {
        ++disagree;
      }
    }
  }
  return {bad == 0 && disagree == 0 && words.size() == 13121,
          "1000 pairs, " + str(bad) + " identity failures; " + str(words.size()) +
              " words, " + str(disagree) + " oracle disagreements"};
}

Outcome c3_axioms() {
  auto const good = check_class_axioms(derived_filtration(2), 3, 500, 42);
  auto const broken = check_class_axioms(broken_chain_filtration(2), 3, 500, 42);
  return {good.violation_count() == 0 && broken.violation_count() >= 1,
          "derived: " + str(good.checks_run) + " checks, " + str(good.violation_count()) +
              " violations; broken control: " + str(broken.violation_count()) + " violations"};
}

Outcome c4_lemma() {
  auto const inst = detail::lemma_instance("hnn:1");
  LemmaCheckOptions opt;
  opt.trials = 10000;
  opt.seed = 42;
  opt.replay_id = "hnn:1";
  auto const r = check_lemma_intersection(inst.ext, inst.h_member, inst.h_sampler, opt);
  return {r.violation_count() == 0 && r.checks_run > 0,
          "10000 trials, " + str(r.checks_run) + " landed in the base, " +
              str(r.violation_count()) + " violations"};
}

Outcome c5_amalgam() {
  auto const c = s3_amalgam_over_c3();
  // Compatibility of the chains with both embeddings, level by level.
  bool compatible = true;
  for (std::size_t n = 0; n <= 2; ++n) {
    for (auto const& a : c.a.elements()) {
      bool const in_a = c.chain_a.member(n, a);
      compatible = compatible && in_a == c.chain1.member(n, c.psi1(a)) &&
                   in_a == c.chain2.member(n, c.psi2(a));
    }
  }
  // ker(pi_1) meets each factor in exactly A3: 6 + 6 element checks.
  PiProjection const pi1(c, 1);
  std::size_t factor_ok = 0;
  for (auto f : {Factor::first, Factor::second}) {
    auto const& b = f == Factor::first ? c.b1 : c.b2;
    for (auto const& g : b.elements()) {
      // In S3 the elements with g^3 = 1 are exactly A3.
      bool const in_a3 = g * g * g == b.identity();
      factor_ok += pnC_member(pi1, {{f, g}}) == in_a3 ? 1 : 0;
    }
  }
  // Two-syllable words b1 b2 at every level against a hand-derived answer:
  // level 0 kills everything, level 1 maps onto C2 * C2, level 2 is faithful.
  std::size_t agree = 0;
  std::size_t total = 0;
  auto const t = parse_permutation("(1 2)", 3);
  auto const r = parse_permutation("(1 2 3)", 3);
  std::vector<std::vector<Syllable<Permutation>>> words;
  for (auto const& b : {t, r, t * r}) {
    for (auto const& d : {t, r, r * t, c.b2.identity()}) {
      words.push_back({{Factor::first, b}, {Factor::second, d}});
    }
  }
  for (std::size_t n = 0; n <= 2; ++n) {
    PiProjection const pi(c, n);
    for (auto const& w : words) {
      bool const even1 = c.chain1.member(1, w[0].element);
      bool const even2 = c.chain2.member(1, w[1].element);
      bool expected = n == 0 || (n == 1 && even1 && even2);
      if (n == 2) {
        expected = w[0].element * w[1].element == c.b1.identity() &&
                   c.a.contains(w[0].element);
      }
      ++total;
      agree += pnC_member(pi, w) == expected ? 1 : 0;
    }
  }
  auto const rep = scenario_amalgam(500, 42);
  return {compatible && factor_ok == 12 && agree == total && rep.passed(),
          std::string("compatibility ") + (compatible ? "ok" : "broken") + ", factor kernel " +
              str(factor_ok) + "/12, two-syllable kernel " +
              str(agree) + "/" + str(total) + ", scenario " + str(rep.checks_run) + " checks, " +
              str(rep.violation_count()) + " violations"};
}

Outcome c6_stallings() {
  SplitMix64 rng(42);
  std::size_t bad = 0;
  std::size_t checked = 0;
  for (int instance = 0; instance < 200; ++instance) {
    std::uint32_t const rank = 1 + static_cast<std::uint32_t>(rng.below(3));
    std::vector<Word> gens;
    std::size_t const count = 1 + rng.below(3);
    while (gens.size() < count) {
      Word g = random_reduced_word(rng, rank, 1 + rng.below(4));
      if (!g.empty()) {
        gens.push_back(std::move(g));
      }
    }
    auto const h = fold(gens);
    auto const products = oracle::products_up_to(gens, 4);
    for (auto const& p : products) {
      ++checked;
      bad += contains(h, p) ? 0 : 1;
    }
    std::vector<Word> const members(products.begin(), products.end());
    for (int t = 0; t < 10; ++t) {
      Word const x = random_reduced_word(rng, rank, rng.below(7));
      Word const rep = coset_rep(h, x);
      bool const ok = contains(h, multiply(rep, invert(x))) && coset_rep(h, rep) == rep &&
                      coset_rep(h, multiply(members[rng.below(members.size())], x)) == rep &&
                      rep.length() <= x.length();
      ++checked;
      bad += ok ? 0 : 1;
    }
  }
  return {bad == 0, "200 subgroups, " + str(checked) + " checks, " + str(bad) + " failures"};
}

Outcome c7_witness() {
  auto const r = scenario_witness(2, 4, 42);
  return {r.passed() && r.checks_run > 0,
          "n<=2, K=4: " + str(r.checks_run) + " checks, " + str(r.violation_count()) +
              " violations"};
}

json strip_timing(json j) {
  for (auto& r : j.at("reports")) {
    r.erase("wall_time");
  }
  return j;
}

Outcome c8_cli() {
  std::string const cli = GGT_CLI_PATH;
  json runs[2];
  for (int i = 0; i < 2; ++i) {
    std::string const path = "acceptance_report_" + std::to_string(i) + ".json";
    std::string const cmd = cli + " verify all --seed 42 --report " + path + " > /dev/null";
    int const status = std::system(cmd.c_str());
    if (status != 0) {
      return {false, "run " + std::to_string(i) + " exited with status " + std::to_string(status)};
    }
    std::ifstream in(path);
    runs[i] = json::parse(in);
    auto const problems = validate_report_json(runs[i]);
    if (!problems.empty()) {
      return {false, "schema: " + problems.front()};
    }
  }
  bool const same = strip_timing(runs[0]) == strip_timing(runs[1]);
  return {same && runs[0].at("passed") == true,
          str(runs[0].at("reports").size()) + " scenarios, exit 0, reports " +
              (same ? "identical" : "differ") + " modulo wall_time"};
}

}  // namespace

int main() {
  criterion(1, "conjugation identities", 1, c1_identities);
  criterion(2, "Fox calculus and derived membership", 120, c2_fox);
  criterion(3, "chain axioms", 600, c3_axioms);
  criterion(4, "HNN intersection", 180, c4_lemma);
  criterion(5, "amalgam projection", 10, c5_amalgam);
  criterion(6, "subgroup membership", 600, c6_stallings);
  criterion(7, "witness construction", 120, c7_witness);
  criterion(8, "deterministic CLI reports", 600, c8_cli);
  return failures == 0 ? 0 : 1;
}
