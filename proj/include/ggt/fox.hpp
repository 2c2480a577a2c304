#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ggt/word.hpp"

namespace ggt {

using Integer = boost::multiprecision::cpp_int;

/// Element of the integral group ring Z[F]: a finite formal sum of words.
/// Terms are kept in shortlex support order and zero coefficients are
/// dropped, so structural equality is ring equality.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  static GroupRingElement term(Integer coefficient, Word support);

  void add(Word const& support, Integer const& coefficient);
  GroupRingElement& operator+=(GroupRingElement const& other);

  std::map<Word, Integer> const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Sum of coefficients (the augmentation map).
  Integer augmentation() const;

  friend bool operator==(GroupRingElement const&, GroupRingElement const&) = default;

 private:
  std::map<Word, Integer> terms_;
};

GroupRingElement operator+(GroupRingElement a, GroupRingElement const& b);
/// Left multiplication by a group element.
GroupRingElement operator*(Word const& u, GroupRingElement const& e);
GroupRingElement operator-(GroupRingElement const& e);

/// `c1*<word> + c2*<word> + ...`, `0` for the empty sum.
std::string to_string(GroupRingElement const& e);

struct DerivedLevel {
  std::size_t n = 0;
};

GroupRingElement fox_derivative(Word const& w, Generator g);

/// Zero test in Z[F/F^(n)].
bool ring_is_zero_mod(GroupRingElement const& e, DerivedLevel level);

/// Membership in the n-th derived subgroup F^(n).
bool derived_member(Word const& w, DerivedLevel level);

struct DerivedDepth {
  std::size_t depth = 0;
  bool at_least = false;  // true: membership holds at the cap itself

  friend bool operator==(DerivedDepth const&, DerivedDepth const&) = default;
};
DerivedDepth derived_depth(Word const& w, std::size_t max);
std::string to_string(DerivedDepth const& d);

/// Depth-`level` nested commutator of pseudo-random words of length <= size
/// over generators 1..rank. Always in F^(level), not necessarily outside
/// F^(level+1).
Word random_derived_element(DerivedLevel level, std::size_t size, std::uint64_t seed,
                            std::uint32_t rank = 2);

class DerivedElementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical labels for cosets of F^(n), computed through the recursive
/// Magnus embedding: two words get the same level-n label iff they agree
/// modulo F^(n). Labels are only comparable within one canonicalizer.
class MagnusCanonicalizer {
 public:
  using Label = std::uint32_t;

  explicit MagnusCanonicalizer(std::size_t max_level);

  Label label(Word const& w, std::size_t level);
  /// Labels of all prefixes w[0..j), j = 0..|w|.
  std::vector<Label> prefix_labels(Word const& w, std::size_t level);

 private:
  Label intern(std::size_t level, std::string key);
  std::vector<std::map<std::string, Label>> tables_;
};

/// Transparent memo for derived_member; exposed for tests and diagnostics.
std::size_t derived_member_cache_size();
void clear_derived_member_cache();

}  // namespace ggt
