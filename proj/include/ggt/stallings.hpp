#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ggt/word.hpp"

namespace ggt {

/// Folded core graph of a finitely generated subgroup of a free group.
///
/// Vertex 0 is the base vertex. Each vertex keeps its outgoing edges keyed
/// by signed letter code, and every edge is stored in both directions
/// (u -x-> v and v -X-> u), so determinism in both directions is the
/// statement that each map has at most one entry per code.
class SubgroupAutomaton {
 public:
  using Vertex = std::uint32_t;
  static constexpr Vertex kBase = 0;

  SubgroupAutomaton() : adjacency_(1) {}

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  /// Number of undirected edges.
  std::size_t edge_count() const noexcept;
  std::size_t rank() const noexcept { return edge_count() + 1 - vertex_count(); }

  std::optional<Vertex> step(Vertex v, Letter l) const;
  std::map<std::int32_t, Vertex> const& edges_from(Vertex v) const {
    return adjacency_.at(v);
  }

  /// Reads w from the base as far as edges allow. Returns the vertex reached
  /// and the number of letters consumed.
  std::pair<Vertex, std::size_t> read(Word const& w) const;

  bool is_folded() const;
  bool is_core() const;

 private:
  friend SubgroupAutomaton fold(std::span<Word const> generators);
  std::vector<std::map<std::int32_t, Vertex>> adjacency_;
};

SubgroupAutomaton fold(std::span<Word const> generators);
inline SubgroupAutomaton fold(std::vector<Word> const& generators) {
  return fold(std::span<Word const>(generators));
}

bool contains(SubgroupAutomaton const& h, Word const& w);

/// Shortlex-least r with r * w^-1 in H, i.e. the canonical representative of
/// the right coset Hw.
Word coset_rep(SubgroupAutomaton const& h, Word const& w);

bool is_free_basis(std::span<Word const> words);
inline bool is_free_basis(std::vector<Word> const& words) {
  return is_free_basis(std::span<Word const>(words));
}

/// If w lies in <x> for x != 1, the exponent k with w == x^k.
std::optional<std::int64_t> cyclic_exponent(Word const& x, Word const& w);

}  // namespace ggt
