#include "ggt/wreath.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ggt {

namespace {

using Lattice = std::vector<long>;  // point of Z^rank

// (a, f) with a in Z^rank and f : Z^rank x {generators} -> Z finitely
// supported. x_i acts as (e_i, delta_{(0, i)}) and
// (a, f)(b, g) = (a + b, f + a.g), where a.g shifts the support by a.
struct WreathElement {
  Lattice position;
  std::map<std::pair<Lattice, std::size_t>, long> coefficients;

  void bump(std::size_t generator, long delta) {
    auto key = std::make_pair(position, generator);
    if ((coefficients[key] += delta) == 0) {
      coefficients.erase(key);
    }
  }

  bool at_origin() const {
    for (long c : position) {
      if (c != 0) {
        return false;
      }
    }
    return true;
  }
};

}  // namespace

bool wreath_oracle_member(Word const& w, std::size_t level) {
  if (level != 1 && level != 2) {
    throw std::invalid_argument("wreath oracle supports levels 1 and 2 only");
  }
  std::size_t const rank = w.max_generator();
  WreathElement state{Lattice(rank, 0), {}};
  for (std::size_t i = 0; i < w.length(); ++i) {
    std::size_t const g = w[i].generator().index - 1;
    if (w[i].sign() > 0) {
      state.bump(g, 1);
      state.position[g] += 1;
    } else {
      // (a, f)(-e_i, -(-e_i).delta_i) = (a - e_i, f - delta_{(a - e_i, i)})
      state.position[g] -= 1;
      state.bump(g, -1);
    }
  }
  if (!state.at_origin()) {
    return false;
  }
  return level == 1 || state.coefficients.empty();
}

}  // namespace ggt
