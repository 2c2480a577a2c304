#include "ggt/stallings.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>
#include <utility>

namespace ggt {

namespace {

// Union-find folding. Adjacency entries may point at non-root vertices;
// every read goes through find().
class Folder {
 public:
  Folder() { new_vertex(); }

  std::uint32_t new_vertex() {
    parent_.push_back(static_cast<std::uint32_t>(parent_.size()));
    adj_.emplace_back();
    return parent_.back();
  }

  std::uint32_t find(std::uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void add_edge(std::uint32_t u, std::int32_t code, std::uint32_t v) {
    attach(u, code, v);
    attach(v, -code, u);
    drain();
  }

  void add_petal(Word const& w) {
    if (w.empty()) {
      return;
    }
    std::uint32_t cur = 0;
    for (std::size_t i = 0; i + 1 < w.length(); ++i) {
      std::uint32_t next = new_vertex();
      add_edge(cur, w[i].code(), next);
      cur = next;
    }
    add_edge(cur, w[w.length() - 1].code(), 0);
  }

  /// Compacted, pruned adjacency with the base at index 0.
  std::vector<std::map<std::int32_t, std::uint32_t>> finish() {
    std::uint32_t const base = find(0);
    std::vector<std::map<std::int32_t, std::uint32_t>> live(adj_.size());
    std::vector<bool> is_root(adj_.size(), false);
    for (std::uint32_t v = 0; v < adj_.size(); ++v) {
      if (find(v) != v) {
        continue;
      }
      is_root[v] = true;
      for (auto const& [code, w] : adj_[v]) {
        live[v][code] = find(w);
      }
    }

    // Prune hanging trees down to the core.
    std::vector<bool> removed(adj_.size(), false);
    std::deque<std::uint32_t> leaves;
    for (std::uint32_t v = 0; v < live.size(); ++v) {
      if (is_root[v] && v != base && live[v].size() <= 1) {
        leaves.push_back(v);
      }
    }
    while (!leaves.empty()) {
      std::uint32_t v = leaves.front();
      leaves.pop_front();
      if (removed[v]) {
        continue;
      }
      removed[v] = true;
      for (auto const& [code, w] : live[v]) {
        live[w].erase(-code);
        if (w != base && !removed[w] && live[w].size() <= 1) {
          leaves.push_back(w);
        }
      }
      live[v].clear();
    }

    // BFS renumbering from the base, in letter order, for a deterministic
    // vertex numbering.
    std::vector<std::uint32_t> index(adj_.size(), std::numeric_limits<std::uint32_t>::max());
    std::vector<std::uint32_t> order{base};
    index[base] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> next;
      for (auto const& [code, w] : live[order[i]]) {
        next.emplace_back(Letter::from_code(code).rank(), w);
      }
      std::sort(next.begin(), next.end());
      for (auto [rank, w] : next) {
        if (index[w] == std::numeric_limits<std::uint32_t>::max()) {
          index[w] = static_cast<std::uint32_t>(order.size());
          order.push_back(w);
        }
      }
    }
    std::vector<std::map<std::int32_t, std::uint32_t>> out(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (auto const& [code, w] : live[order[i]]) {
        out[i][code] = index[w];
      }
    }
    return out;
  }

 private:
  void attach(std::uint32_t u, std::int32_t code, std::uint32_t v) {
    u = find(u);
    auto it = adj_[u].find(code);
    if (it == adj_[u].end()) {
      adj_[u][code] = v;
    } else if (find(it->second) != find(v)) {
      pending_.emplace(it->second, v);
    }
  }

  void drain() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.front();
      pending_.pop();
      a = find(a);
      b = find(b);
      if (a == b) {
        continue;
      }
      // The lower index survives, so the base (0) is always its own root.
      if (b < a) {
        std::swap(a, b);
      }
      parent_[b] = a;
      auto moved = std::move(adj_[b]);
      adj_[b].clear();
      for (auto const& [code, w] : moved) {
        attach(a, code, w);
      }
    }
  }

  std::vector<std::uint32_t> parent_;
  std::vector<std::map<std::int32_t, std::uint32_t>> adj_;
  std::queue<std::pair<std::uint32_t, std::uint32_t>> pending_;
};

}  // namespace

std::size_t SubgroupAutomaton::edge_count() const noexcept {
  std::size_t half_edges = 0;
  for (auto const& m : adjacency_) {
    half_edges += m.size();
  }
  return half_edges / 2;
}

std::optional<SubgroupAutomaton::Vertex> SubgroupAutomaton::step(Vertex v, Letter l) const {
  auto const& m = adjacency_.at(v);
  auto it = m.find(l.code());
  if (it == m.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::pair<SubgroupAutomaton::Vertex, std::size_t> SubgroupAutomaton::read(Word const& w) const {
  Vertex v = kBase;
  std::size_t i = 0;
  for (; i < w.length(); ++i) {
    auto next = step(v, w[i]);
    if (!next) {
      break;
    }
    v = *next;
  }
  return {v, i};
}

bool SubgroupAutomaton::is_folded() const {
  for (Vertex v = 0; v < adjacency_.size(); ++v) {
    for (auto const& [code, w] : adjacency_[v]) {
      if (w >= adjacency_.size()) {
        return false;
      }
      auto const& back = adjacency_[w];
      auto it = back.find(-code);
      if (it == back.end() || it->second != v) {
        return false;
      }
    }
  }
  return true;
}

bool SubgroupAutomaton::is_core() const {
  if (adjacency_.size() == 1) {
    return true;
  }
  std::vector<bool> seen(adjacency_.size(), false);
  std::vector<Vertex> stack{kBase};
  seen[kBase] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (auto const& [code, w] : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (Vertex v = 0; v < adjacency_.size(); ++v) {
    if (!seen[v]) {
      return false;
    }
    // A non-base vertex of degree one would be a dead end.
    if (v != kBase && adjacency_[v].size() < 2) {
      return false;
    }
  }
  return true;
}

SubgroupAutomaton fold(std::span<Word const> generators) {
  Folder f;
  for (Word const& g : generators) {
    f.add_petal(g);
  }
  SubgroupAutomaton out;
  out.adjacency_ = f.finish();
  return out;
}

bool contains(SubgroupAutomaton const& h, Word const& w) {
  auto [v, consumed] = h.read(w);
  return consumed == w.length() && v == SubgroupAutomaton::kBase;
}

Word coset_rep(SubgroupAutomaton const& h, Word const& w) {
  // The coset Hw is the vertex reached by w in the Schreier graph: the core
  // plus trees hanging off it. Reading stops at the core vertex v where w
  // enters a tree; every word reaching Hw is a core path to v followed by
  // the unread suffix, so the shortlex-least one uses the shortlex-least
  // shortest core path.
  auto [target, consumed] = h.read(w);
  std::size_t const n = h.vertex_count();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n, kInf);
  std::queue<SubgroupAutomaton::Vertex> q;
  dist[target] = 0;
  q.push(target);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto const& [code, u] : h.edges_from(v)) {
      if (dist[u] == kInf) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    }
  }
  std::vector<Letter> out;
  SubgroupAutomaton::Vertex v = SubgroupAutomaton::kBase;
  while (v != target) {
    std::optional<std::pair<Letter, SubgroupAutomaton::Vertex>> best;
    for (auto const& [code, u] : h.edges_from(v)) {
      if (dist[u] + 1 != dist[v]) {
        continue;
      }
      Letter l = Letter::from_code(code);
      if (!best || l.rank() < best->first.rank()) {
        best = {l, u};
      }
    }
    out.push_back(best->first);
    v = best->second;
  }
  for (std::size_t i = consumed; i < w.length(); ++i) {
    out.push_back(w[i]);
  }
  return Word(std::move(out));
}

bool is_free_basis(std::span<Word const> words) {
  for (Word const& w : words) {
    if (w.empty()) {
      return false;
    }
  }
  return fold(words).rank() == words.size();
}

std::optional<std::int64_t> cyclic_exponent(Word const& x, Word const& w) {
  if (w.empty()) {
    return 0;
  }
  if (x.empty()) {
    return std::nullopt;
  }
  auto [core, conj] = cyclically_reduce(x);
  std::size_t const frame = 2 * conj.length();
  if (w.length() <= frame || (w.length() - frame) % core.length() != 0) {
    return std::nullopt;
  }
  auto const k = static_cast<std::int64_t>((w.length() - frame) / core.length());
  if (power(x, k) == w) {
    return k;
  }
  if (power(x, -k) == w) {
    return -k;
  }
  return std::nullopt;
}

}  // namespace ggt
