#include <sstream>

#include "ggt/scenarios.hpp"
#include "instances.hpp"

namespace ggt {

namespace {

using detail::parse_number;

void need(std::vector<std::string> const& args, std::size_t n) {
  if (args.size() < n) {
    throw std::invalid_argument("replay '" + args[0] + "' needs at least " + std::to_string(n - 1) +
                                " arguments");
  }
}

template <class E>
ReplayOutcome replay_axiom(FilteredGroup<E> const& f, int axiom, std::size_t n,
                           std::vector<E> const& w) {
  auto const& g = f.ambient;
  auto fmt = [&](E const& e) { return g.format(e); };
  auto arity = [&](std::size_t k) {
    if (w.size() != k) {
      throw std::invalid_argument("axiom " + std::to_string(axiom) + " takes " +
                                  std::to_string(k) + " witnesses");
    }
  };
  switch (axiom) {
    case 1:
      arity(1);
      return {!f.member(n, g.identity), "identity in P_" + std::to_string(n) + ": " +
                                            (f.member(n, g.identity) ? "yes" : "no")};
    case 2: {
      arity(2);
      auto const q = g.multiply(w[0], g.invert(w[1]));
      bool const bad = f.member(n, w[0]) && f.member(n, w[1]) && !f.member(n, q);
      return {bad, "x y^-1 = " + fmt(q) + (f.member(n, q) ? " is" : " is not") + " in P_" +
                       std::to_string(n)};
    }
    case 3: {
      arity(2);
      auto const q = g.conjugate(w[0], w[1]);
      bool const bad = f.member(n, w[0]) && !f.member(n, q);
      return {bad, "z^-1 x z = " + fmt(q) + (f.member(n, q) ? " is" : " is not") + " in P_" +
                       std::to_string(n)};
    }
    case 4: {
      arity(1);
      bool const bad = f.member(n + 1, w[0]) && !f.member(n, w[0]);
      return {bad, fmt(w[0]) + (bad ? " is in P_{n+1} but not in P_n" : " respects descent")};
    }
    default:
      throw std::invalid_argument("axiom number must be 1..4");
  }
}

ReplayOutcome replay_axiom_args(std::vector<std::string> const& args) {
  need(args, 5);
  auto const& id = args[1];
  int const axiom = parse_number<int>(args[2], "axiom");
  auto const n = parse_number<std::size_t>(args[3], "level");
  std::vector<std::string> const witnesses(args.begin() + 4, args.end());
  if (auto f = detail::resolve_chain<Word>(id)) {
    std::vector<Word> w;
    for (auto const& s : witnesses) {
      w.push_back(parse_word(s));
    }
    return replay_axiom(*f, axiom, n, w);
  }
  if (auto f = detail::resolve_chain<Permutation>(id)) {
    std::vector<Permutation> w;
    for (auto const& s : witnesses) {
      w.push_back(parse_permutation(s, f->ambient.identity.degree()));
    }
    return replay_axiom(*f, axiom, n, w);
  }
  throw std::invalid_argument("unknown chain id '" + id + "'");
}

ReplayOutcome replay_lemma(std::vector<std::string> const& args) {
  need(args, 3);
  auto const inst = detail::lemma_instance(args[1]);
  auto const w = parse_hnn_word(args[2]);
  std::vector<BrittonStep<Word>> trace;
  auto const r = britton_reduce(inst.ext, w, &trace);
  if (!audit_trace(inst.ext, trace)) {
    return {true, "reduction trace fails the audit"};
  }
  if (!r.signs.empty()) {
    return {false, "reduces to t-length " + std::to_string(r.signs.size())};
  }
  bool const in_h = inst.h_member(r.bases.front());
  return {!in_h, "lands in the base as " + to_string(r.bases.front()) + (in_h ? ", in H" : ", not in H")};
}

ReplayOutcome replay_lemma_sub(std::vector<std::string> const& args) {
  need(args, 4);
  auto const inst = detail::lemma_instance(args[1]);
  auto const g = parse_word(args[2]);
  auto const w = parse_hnn_word(args[3]);
  auto const rw = britton_reduce(inst.ext, w);
  auto const rgw = britton_reduce(inst.ext, hnn_multiply(inst.ext, hnn_from_base(g), w));
  if (rw.signs.size() != rgw.signs.size()) {
    return {true, "t-length changes from " + std::to_string(rw.signs.size()) + " to " +
                      std::to_string(rgw.signs.size())};
  }
  if (rw.signs.empty() && inst.h_member(rgw.bases.front()) != inst.h_member(g)) {
    return {true, "membership of g and of g w in H disagree"};
  }
  return {false, "consistent"};
}

ReplayOutcome replay_identity(std::vector<std::string> const& args) {
  need(args, 4);
  int const which = parse_number<int>(args[1], "identity");
  auto const k = parse_number<std::size_t>(args[2], "k");
  if (which != 1 && which != 2) {
    throw std::invalid_argument("identity must be 1 or 2");
  }
  if (args[3] != "standard" && args[3] != "flipped") {
    throw std::invalid_argument("convention must be standard or flipped");
  }
  auto const [lhs, rhs] = detail::identity_sides(which, k, args[3] == "flipped");
  return {!(lhs == rhs), to_string(lhs) + (lhs == rhs ? " == " : " != ") + to_string(rhs)};
}

ReplayOutcome replay_witness(std::vector<std::string> const& args) {
  need(args, 5);
  auto const& kind = args[1];
  auto const n = parse_number<std::size_t>(args[2], "level");
  auto const a = parse_word(args[3]);
  auto const k = parse_number<std::size_t>(args[4], "k");
  auto const p = detail::witness_product();
  if (kind == "depth") {
    bool const ok = derived_member(a, DerivedLevel{n}) && !derived_member(a, DerivedLevel{n + 1});
    return {!ok, "derived depth " + to_string(derived_depth(a, n + 1))};
  }
  if (kind == "power" || kind == "power2") {
    auto const w = detail::witness_element(a, kind == "power" ? 1 : 2, k);
    bool const inside = detail::in_witness_kernel(p, w, n + 1);
    return {inside, to_string(w) + (inside ? " lies" : " does not lie") + " in P_{n+1} H"};
  }
  if (kind == "abelian" || kind == "abelian2") {
    int const which = kind == "abelian" ? 1 : 2;
    auto const sum = exponent_sum(detail::witness_element(a, which, k), Generator{3});
    return {sum != static_cast<std::int64_t>((which + 1) * k),
            "exponent sum of x3 is " + std::to_string(sum)};
  }
  if (kind == "order") {
    auto const w = detail::witness_element(a, static_cast<int>(k), 1);
    auto const v =
        infinite_order_evidence(p, split_free_factors(w, [](Generator g) { return g.index == 3; }));
    return {v.kind != OrderVerdict::Kind::infinite, "verdict " + to_string(v)};
  }
  throw std::invalid_argument("unknown witness check '" + kind + "'");
}

ReplayOutcome replay_pnc(std::vector<std::string> const& args) {
  need(args, 4);
  auto const n = parse_number<std::size_t>(args[1], "level");
  auto const w = parse_permutation_syllables(args[2], 3);
  bool const expected = args[3] == "1";
  PiProjection const pi(s3_amalgam_over_c3(), n);
  bool const got = pnC_member(pi, w);
  return {got != expected, std::string("pi image ") + to_string(pi.target(), pi(w)) +
                               (got ? " (in kernel)" : " (not in kernel)")};
}

ReplayOutcome replay_padshift(std::vector<std::string> const& args) {
  need(args, 5);
  auto const rank = parse_number<std::uint32_t>(args[1], "rank");
  auto const k = parse_number<std::size_t>(args[2], "k");
  auto const n = parse_number<std::size_t>(args[3], "level");
  auto const g = parse_word(args[4]);
  auto const d = derived_filtration(rank);
  bool const got = chain_pad(chain_shift(d, k), k).member(n, g);
  bool const expected = d.member(std::max(n, k), g);
  return {got != expected, std::string("pad(shift) says ") + (got ? "member" : "not member")};
}

ReplayOutcome replay_depthshift(std::vector<std::string> const& args) {
  need(args, 4);
  auto const rank = parse_number<std::uint32_t>(args[1], "rank");
  auto const k = parse_number<std::size_t>(args[2], "k");
  auto const g = parse_word(args[3]);
  std::size_t const cap = 3;
  if (k > cap) {
    throw std::invalid_argument("shift must be at most 3");
  }
  auto const d = derived_filtration(rank);
  auto const shifted = chain_shift(d, k);
  if (!shifted.in_ambient(g)) {
    return {false, "not in the shifted ambient"};
  }
  auto const depth = derived_depth(g, cap);
  std::size_t m = 0;
  while (m < cap - k && shifted.member(m + 1, g)) {
    ++m;
  }
  bool const at_least = m == cap - k;
  return {m + k != depth.depth || at_least != depth.at_least,
          "depth " + to_string(depth) + ", shifted depth " + std::to_string(m)};
}

}  // namespace

ReplayOutcome replay(std::vector<std::string> const& args) {
  if (args.empty()) {
    throw std::invalid_argument("empty replay vector");
  }
  auto const& kind = args[0];
  if (kind == "axiom") {
    return replay_axiom_args(args);
  }
  if (kind == "lemma") {
    return replay_lemma(args);
  }
  if (kind == "lemma-sub") {
    return replay_lemma_sub(args);
  }
  if (kind == "identity") {
    return replay_identity(args);
  }
  if (kind == "witness") {
    return replay_witness(args);
  }
  if (kind == "pnc") {
    return replay_pnc(args);
  }
  if (kind == "padshift") {
    return replay_padshift(args);
  }
  if (kind == "depthshift") {
    return replay_depthshift(args);
  }
  throw std::invalid_argument("unknown replay kind '" + kind + "'");
}

}  // namespace ggt
