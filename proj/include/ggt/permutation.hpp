#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ggt/group.hpp"

namespace ggt {

/// Permutation of {1..degree}, stored 0-based. Products compose left to
/// right: (a * b)(i) = b(a(i)), matching words acting on the right.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// images[i] is the image of i+1 (1-based values).
  static Permutation from_images(std::vector<std::uint32_t> const& images);

  std::size_t degree() const noexcept { return image_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return image_.at(point - 1) + 1; }
  bool is_identity() const noexcept;

  Permutation inverse() const;
  friend Permutation operator*(Permutation const& a, Permutation const& b);

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

 private:
  std::vector<std::uint32_t> image_;
};

class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cycle notation `(1 2 3)(4 5)`, identity `()`. degree 0 means the largest
/// point mentioned.
Permutation parse_permutation(std::string_view text, std::size_t degree = 0);
std::string to_string(Permutation const& p);

using PermutationSet = std::set<Permutation>;

/// Finite group generated by permutations of one degree. The element list
/// is computed on first use (breadth-first from the identity, generators in
/// order, so each element appears after all shortlex-smaller ones) and then
/// shared by all copies.
class PermutationGroup {
 public:
  PermutationGroup(std::vector<Permutation> generators, std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  std::vector<Permutation> const& generators() const noexcept { return generators_; }
  Permutation identity() const { return Permutation(degree_); }

  /// Elements in breadth-first order; throws BoundExceeded if the group has
  /// more than `bound` elements.
  std::vector<Permutation> const& elements(std::size_t bound = kDefaultEnumerationBound) const;
  std::size_t order() const { return elements().size(); }
  bool contains(Permutation const& p) const;
  /// Position in the breadth-first enumeration.
  std::size_t index_of(Permutation const& p) const;

  GroupOracle<Permutation> oracle(std::string name = "G") const;

 private:
  struct Closure {
    std::mutex mutex;
    bool complete = false;
    std::vector<Permutation> elements;
    std::map<Permutation, std::size_t> index;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Closure> closure_;
};

PermutationGroup perm_group(std::vector<Permutation> generators, std::size_t degree = 0);
/// Parses each generator in cycle notation; the degree is the largest point
/// mentioned anywhere unless given.
PermutationGroup perm_group(std::vector<std::string> const& generators, std::size_t degree = 0);

std::vector<Permutation> enumerate_elements(PermutationGroup const& g, std::size_t bound);

/// Subgroup generated by `gens` inside the symmetric group of `degree`.
PermutationSet subgroup_closure(std::span<Permutation const> gens, std::size_t degree);

PermutationSet normal_closure_finite(PermutationGroup const& g, std::span<Permutation const> s);
inline PermutationSet normal_closure_finite(PermutationGroup const& g,
                                            std::vector<Permutation> const& s) {
  return normal_closure_finite(g, std::span<Permutation const>(s));
}

PermutationSet derived_subgroup_finite(PermutationGroup const& g);

/// True iff n is a subgroup of g closed under conjugation by g's generators.
bool is_normal_subgroup(PermutationGroup const& g, PermutationSet const& n);

class NotNormal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// G/N with canonical coset representatives: the earliest element of each
/// coset in G's breadth-first enumeration.
class FiniteQuotient {
 public:
  FiniteQuotient(PermutationGroup parent, PermutationSet kernel);

  PermutationGroup const& parent() const noexcept { return parent_; }
  PermutationSet const& kernel() const noexcept { return kernel_; }
  std::size_t order() const noexcept { return representatives_.size(); }
  std::vector<Permutation> const& representatives() const noexcept { return representatives_; }

  /// Canonical epimorphism G -> G/N.
  Permutation project(Permutation const& g) const;

  GroupOracle<Permutation> oracle(std::string name = "G/N") const;

 private:
  PermutationGroup parent_;
  PermutationSet kernel_;
  std::vector<Permutation> representatives_;
  std::shared_ptr<std::map<Permutation, Permutation>> rep_of_;
};

FiniteQuotient quotient(PermutationGroup const& g, PermutationSet const& n);

}  // namespace ggt
