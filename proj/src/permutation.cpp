#include "ggt/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <utility>

namespace ggt {

Permutation::Permutation(std::size_t degree) : image_(degree) {
  for (std::size_t i = 0; i < degree; ++i) {
    image_[i] = static_cast<std::uint32_t>(i);
  }
}

Permutation Permutation::from_images(std::vector<std::uint32_t> const& images) {
  Permutation p(images.size());
  std::vector<bool> hit(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] < 1 || images[i] > images.size() || hit[images[i] - 1]) {
      throw std::invalid_argument("image list is not a permutation");
    }
    hit[images[i] - 1] = true;
    p.image_[i] = images[i] - 1;
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    p.image_[image_[i]] = static_cast<std::uint32_t>(i);
  }
  return p;
}

Permutation operator*(Permutation const& a, Permutation const& b) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatch("cannot multiply permutations of degree " + std::to_string(a.degree()) +
                         " and " + std::to_string(b.degree()));
  }
  Permutation p(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) {
    p.image_[i] = b.image_[a.image_[i]];
  }
  return p;
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  std::uint32_t max_point = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw ParseError(std::string(text), "expected '(' at offset " + std::to_string(i));
    }
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) {
        throw ParseError(std::string(text), "unterminated cycle");
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::uint32_t point = 0;
      auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), point);
      if (ec != std::errc{} || point == 0) {
        throw ParseError(std::string(text), "expected a positive point at offset " + std::to_string(i));
      }
      i = static_cast<std::size_t>(p - text.data());
      if (std::find(cycle.begin(), cycle.end(), point) != cycle.end()) {
        throw ParseError(std::string(text), "point " + std::to_string(point) + " repeated in a cycle");
      }
      cycle.push_back(point);
      max_point = std::max(max_point, point);
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }
  if (degree == 0) {
    degree = std::max<std::size_t>(max_point, 1);
  } else if (max_point > degree) {
    throw DegreeMismatch("point " + std::to_string(max_point) + " exceeds degree " +
                         std::to_string(degree));
  }
  // Cycles compose left to right, like the product they denote.
  Permutation out(degree);
  for (auto const& c : cycles) {
    std::vector<std::uint32_t> images(degree);
    for (std::size_t k = 0; k < degree; ++k) {
      images[k] = static_cast<std::uint32_t>(k + 1);
    }
    for (std::size_t k = 0; k < c.size(); ++k) {
      images[c[k] - 1] = c[(k + 1) % c.size()];
    }
    out = out * Permutation::from_images(images);
  }
  return out;
}

std::string to_string(Permutation const& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::uint32_t start = 1; start <= p.degree(); ++start) {
    if (seen[start - 1] || p(start) == start) {
      continue;
    }
    out += '(';
    std::uint32_t x = start;
    bool first = true;
    do {
      if (!first) {
        out += ' ';
      }
      first = false;
      out += std::to_string(x);
      seen[x - 1] = true;
      x = p(x);
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------------------

PermutationGroup::PermutationGroup(std::vector<Permutation> generators, std::size_t degree)
    : degree_(degree), generators_(std::move(generators)), closure_(std::make_shared<Closure>()) {
  for (auto const& g : generators_) {
    if (g.degree() != degree_) {
      throw DegreeMismatch("generator " + to_string(g) + " has degree " +
                           std::to_string(g.degree()) + ", expected " + std::to_string(degree_));
    }
  }
}

std::vector<Permutation> const& PermutationGroup::elements(std::size_t bound) const {
  std::lock_guard lock(closure_->mutex);
  if (!closure_->complete) {
    std::vector<Permutation> elems{identity()};
    std::map<Permutation, std::size_t> index{{elems[0], 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto const& g : generators_) {
        Permutation next = elems[i] * g;
        if (index.emplace(next, elems.size()).second) {
          elems.push_back(std::move(next));
          if (elems.size() > bound) {
            throw BoundExceeded(bound);
          }
        }
      }
    }
    closure_->elements = std::move(elems);
    closure_->index = std::move(index);
    closure_->complete = true;
  }
  if (closure_->elements.size() > bound) {
    throw BoundExceeded(bound);
  }
  return closure_->elements;
}

bool PermutationGroup::contains(Permutation const& p) const {
  if (p.degree() != degree_) {
    return false;
  }
  elements();
  return closure_->index.count(p) != 0;
}

std::size_t PermutationGroup::index_of(Permutation const& p) const {
  elements();
  auto it = closure_->index.find(p);
  if (it == closure_->index.end()) {
    throw std::invalid_argument(to_string(p) + " is not an element of the group");
  }
  return it->second;
}

GroupOracle<Permutation> PermutationGroup::oracle(std::string name) const {
  GroupOracle<Permutation> o;
  o.name = std::move(name);
  o.identity = identity();
  o.multiply = [](Permutation const& a, Permutation const& b) { return a * b; };
  o.invert = [](Permutation const& a) { return a.inverse(); };
  PermutationGroup self = *this;
  o.random = [self](SplitMix64& rng) {
    auto const& els = self.elements();
    return els[rng.below(els.size())];
  };
  o.format = [](Permutation const& p) { return to_string(p); };
  o.enumerate = [self](std::size_t bound) -> std::optional<std::vector<Permutation>> {
    return self.elements(bound);
  };
  o.order = [](Permutation const& p) -> std::optional<std::uint64_t> {
    Permutation acc = p;
    std::uint64_t k = 1;
    while (!acc.is_identity()) {
      acc = acc * p;
      ++k;
    }
    return k;
  };
  return o;
}

PermutationGroup perm_group(std::vector<Permutation> generators, std::size_t degree) {
  if (degree == 0) {
    degree = generators.empty() ? 1 : generators.front().degree();
  }
  return PermutationGroup(std::move(generators), degree);
}

PermutationGroup perm_group(std::vector<std::string> const& generators, std::size_t degree) {
  if (degree == 0) {
    for (auto const& g : generators) {
      degree = std::max(degree, parse_permutation(g).degree());
    }
    degree = std::max<std::size_t>(degree, 1);
  }
  std::vector<Permutation> perms;
  for (auto const& g : generators) {
    perms.push_back(parse_permutation(g, degree));
  }
  return PermutationGroup(std::move(perms), degree);
}

std::vector<Permutation> enumerate_elements(PermutationGroup const& g, std::size_t bound) {
  return g.elements(bound);
}

PermutationSet subgroup_closure(std::span<Permutation const> gens, std::size_t degree) {
  Permutation id(degree);
  PermutationSet out{id};
  std::deque<Permutation> frontier{id};
  while (!frontier.empty()) {
    Permutation x = std::move(frontier.front());
    frontier.pop_front();
    for (auto const& g : gens) {
      Permutation y = x * g;
      if (out.insert(y).second) {
        frontier.push_back(std::move(y));
      }
    }
  }
  return out;
}

PermutationSet normal_closure_finite(PermutationGroup const& g, std::span<Permutation const> s) {
  std::vector<Permutation> gens;
  PermutationSet closure{g.identity()};
  auto adjoin = [&](Permutation const& p) {
    if (closure.count(p) == 0) {
      gens.push_back(p);
      closure = subgroup_closure(gens, g.degree());
    }
  };
  for (auto const& p : s) {
    if (!g.contains(p)) {
      throw std::invalid_argument(to_string(p) + " is not an element of the group");
    }
    adjoin(p);
  }
  // Normal iff the generators' conjugates by G's generators stay inside.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (auto const& z : g.generators()) {
      adjoin(z.inverse() * gens[i] * z);
    }
  }
  return closure;
}

PermutationSet derived_subgroup_finite(PermutationGroup const& g) {
  std::vector<Permutation> commutators;
  auto const& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      commutators.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
    }
  }
  return normal_closure_finite(g, commutators);
}

bool is_normal_subgroup(PermutationGroup const& g, PermutationSet const& n) {
  if (n.count(g.identity()) == 0) {
    return false;
  }
  for (auto const& a : n) {
    if (!g.contains(a)) {
      return false;
    }
    for (auto const& b : n) {
      if (n.count(a * b.inverse()) == 0) {
        return false;
      }
    }
    for (auto const& z : g.generators()) {
      if (n.count(z.inverse() * a * z) == 0) {
        return false;
      }
    }
  }
  return true;
}

FiniteQuotient::FiniteQuotient(PermutationGroup parent, PermutationSet kernel)
    : parent_(std::move(parent)),
      kernel_(std::move(kernel)),
      rep_of_(std::make_shared<std::map<Permutation, Permutation>>()) {
  if (!is_normal_subgroup(parent_, kernel_)) {
    throw NotNormal("kernel is not a normal subgroup of the parent group");
  }
  for (auto const& g : parent_.elements()) {
    if (rep_of_->count(g) != 0) {
      continue;
    }
    representatives_.push_back(g);
    for (auto const& k : kernel_) {
      rep_of_->emplace(g * k, g);
    }
  }
}

Permutation FiniteQuotient::project(Permutation const& g) const {
  auto it = rep_of_->find(g);
  if (it == rep_of_->end()) {
    throw std::invalid_argument(to_string(g) + " is not an element of the parent group");
  }
  return it->second;
}

GroupOracle<Permutation> FiniteQuotient::oracle(std::string name) const {
  GroupOracle<Permutation> o;
  o.name = std::move(name);
  FiniteQuotient self = *this;
  o.identity = project(parent_.identity());
  o.multiply = [self](Permutation const& a, Permutation const& b) { return self.project(a * b); };
  o.invert = [self](Permutation const& a) { return self.project(a.inverse()); };
  o.random = [self](SplitMix64& rng) {
    return self.representatives_[rng.below(self.representatives_.size())];
  };
  o.format = [](Permutation const& p) { return to_string(p); };
  o.enumerate = [self](std::size_t bound) -> std::optional<std::vector<Permutation>> {
    if (self.representatives_.size() > bound) {
      throw BoundExceeded(bound);
    }
    return self.representatives_;
  };
  return o;
}

FiniteQuotient quotient(PermutationGroup const& g, PermutationSet const& n) {
  return FiniteQuotient(g, n);
}

}  // namespace ggt
