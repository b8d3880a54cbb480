#pragma once
// Exact dense linear solve over the rationals.  Rows are scaled to integers
// and eliminated fraction-free (Bareiss), which keeps entry growth bounded
// by minor sizes instead of compounding gcd-free rational arithmetic.

#include <vector>

#include "sscert/rational.hpp"

namespace sscert {

// Solves A x = b given the augmented matrix [A | b] (n rows, n+1 columns).
// Deterministic first-nonzero pivoting; aborts if A is singular.
std::vector<Rat> solve_exact(std::vector<std::vector<Rat>> aug);

}  // namespace sscert
