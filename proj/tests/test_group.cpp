#include <doctest.h>

#include "ggt/group.hpp"
#include "ggt/permutation.hpp"

using namespace ggt;

namespace {

Permutation p(char const* s, std::size_t degree = 0) { return parse_permutation(s, degree); }

PermutationGroup s3() { return perm_group(std::vector<std::string>{"(1 2)", "(1 2 3)"}, 3); }

}  // namespace

TEST_CASE("permutation syntax") {
  CHECK(to_string(p("(1 2 3)(4 5)")) == "(1 2 3)(4 5)");
  CHECK(to_string(p("()", 3)) == "()");
  CHECK(to_string(p("(3 1 2)")) == "(1 2 3)");
  CHECK(p("(1 2)", 4).degree() == 4);
  CHECK(p("(1 2 3)")(1) == 2);
  CHECK_THROWS(p("(1 1)"));
  CHECK_THROWS(p("(1 2"));
  CHECK_THROWS(p("(1 5)", 3));
}

TEST_CASE("composition is left to right") {
  auto const a = p("(1 2)", 3);
  auto const b = p("(2 3)", 3);
  // (a * b)(1) = b(a(1)) = b(2) = 3
  CHECK((a * b)(1) == 3);
  CHECK(a * b == p("(1 3 2)"));
  CHECK((a * a).is_identity());
  CHECK_THROWS_AS(a * p("(1 2)", 4), DegreeMismatch);
}

TEST_CASE("perm_group examples") {
  CHECK(s3().order() == 6);
  CHECK(perm_group(std::vector<Permutation>{}, 3).order() == 1);
  CHECK(perm_group(std::vector<std::string>{"(1 2 3)"}).order() == 3);
  CHECK(perm_group(std::vector<std::string>{"(1 2)", "(1 2 3 4)"}).order() == 24);
  CHECK_THROWS_AS(perm_group(std::vector<Permutation>{p("(1 2)", 2), p("(1 2 3)", 3)}),
                  DegreeMismatch);
  auto const g = s3();
  CHECK(g.elements().front().is_identity());
  for (std::size_t i = 0; i < g.order(); ++i) {
    CHECK(g.index_of(g.elements()[i]) == i);
  }
}

TEST_CASE("enumerate_elements bound") {
  CHECK(enumerate_elements(s3(), 10).size() == 6);
  auto const c3 = perm_group(std::vector<std::string>{"(1 2 3)"});
  CHECK_THROWS_AS(enumerate_elements(c3, 2), BoundExceeded);
  auto const trivial = perm_group(std::vector<Permutation>{}, 2);
  CHECK(enumerate_elements(trivial, 1).size() == 1);
}

TEST_CASE("normal closure and derived subgroup") {
  auto const g = s3();
  CHECK(normal_closure_finite(g, std::vector<Permutation>{p("(1 2 3)")}).size() == 3);
  CHECK(normal_closure_finite(g, std::vector<Permutation>{p("(1 2)", 3)}).size() == 6);
  CHECK(normal_closure_finite(g, std::vector<Permutation>{}).size() == 1);
  auto const a3 = derived_subgroup_finite(g);
  CHECK(a3.size() == 3);
  CHECK(is_normal_subgroup(g, a3));
  auto const c3 = perm_group(std::vector<std::string>{"(1 2 3)"});
  CHECK(derived_subgroup_finite(c3).size() == 1);
  auto const s4 = perm_group(std::vector<std::string>{"(1 2)", "(1 2 3 4)"});
  auto const a4 = derived_subgroup_finite(s4);
  CHECK(a4.size() == 12);
  auto const v4 = derived_subgroup_finite(PermutationGroup({a4.begin(), a4.end()}, 4));
  CHECK(v4.size() == 4);
  CHECK(is_normal_subgroup(s4, v4));
  CHECK_FALSE(is_normal_subgroup(g, {g.identity(), p("(1 2)", 3)}));
  for (auto const& z : g.elements()) {
    for (auto const& x : a3) {
      CHECK(a3.count(z.inverse() * x * z) == 1);
    }
  }
}

TEST_CASE("quotients") {
  auto const g = s3();
  auto const a3 = derived_subgroup_finite(g);
  auto const q = quotient(g, a3);
  CHECK(q.order() == 2);
  CHECK(q.order() * a3.size() == g.order());
  CHECK(quotient(g, {g.identity()}).order() == 6);
  auto const& els = g.elements();
  CHECK(quotient(g, PermutationSet(els.begin(), els.end())).order() == 1);
  CHECK_THROWS_AS(quotient(g, {g.identity(), p("(1 2)", 3)}), NotNormal);
  // Projection is a homomorphism and constant on cosets.
  for (auto const& x : els) {
    for (auto const& y : els) {
      CHECK(q.project(x * y) == q.project(q.project(x) * q.project(y)));
    }
    for (auto const& k : a3) {
      CHECK(q.project(k * x) == q.project(x));
    }
  }
  CHECK(check_group_laws(q.oracle(), 500, 1).violation_count() == 0);
}

TEST_CASE("oracles satisfy the group laws") {
  CHECK(check_group_laws(s3().oracle("S3"), 500, 1).violation_count() == 0);
  CHECK(check_group_laws(free_group_oracle(3), 500, 2).violation_count() == 0);
  CHECK(check_group_laws(cyclic_group_oracle(5), 500, 3).violation_count() == 0);
  CHECK(check_group_laws(cyclic_group_oracle(0), 500, 4).violation_count() == 0);
  auto const prod = direct_product(cyclic_group_oracle(2), cyclic_group_oracle(3));
  CHECK(prod.elements()->size() == 6);
  CHECK(check_group_laws(prod, 500, 5).violation_count() == 0);
  auto const ss = direct_product(s3().oracle(), s3().oracle());
  CHECK(ss.identity == std::pair{s3().identity(), s3().identity()});
  CHECK(ss.elements()->size() == 36);
}

TEST_CASE("element orders") {
  auto const c6 = cyclic_group_oracle(6);
  CHECK(c6.element_order(4) == 3);
  CHECK(c6.element_order(0) == 1);
  CHECK(cyclic_group_oracle(0).element_order(2) == 0);
  CHECK(s3().oracle().element_order(p("(1 2 3)")) == 3);
  CHECK(free_group_oracle(2).element_order(Word::generator(1)) == 0);
}
