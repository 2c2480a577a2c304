#pragma once

#include <cstddef>

#include "ggt/word.hpp"

namespace ggt {

/// Independent oracle for membership in F^(1) and F^(2).
///
/// Level 1 compares exponent sums. Level 2 simulates the image of w in the
/// wreath product (free abelian coefficients) wr (free abelian group) with
/// explicit finitely supported functions, and reports whether that image is
/// trivial. Shares no code with the Fox-derivative route.
bool wreath_oracle_member(Word const& w, std::size_t level);

}  // namespace ggt
