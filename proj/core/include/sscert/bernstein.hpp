#pragma once
// Conversion between the monomial basis and the unscaled Bernstein-type
// basis  x^n (1-x)^{N-n},  n = 0..N  (no binomial normalization).  A degree-N
// list with every entry positive certifies strict positivity of the sum on
// (0, 1), with the endpoint values read off from the first and last entries.

#include <cstddef>
#include <vector>

#include "sscert/poly.hpp"
#include "sscert/rational.hpp"

namespace sscert {

// C(n, k) as an exact integer.
Int binomial(unsigned long n, unsigned long k);

// Coefficients a_0..a_N with p(x) = sum_n a_n x^n (1-x)^{N-n}.
// Uses x^j = sum_n C(N-j, n-j) x^n (1-x)^{N-n}; aborts if deg p > N.
std::vector<Rat> scaled_bernstein_from_poly(const Poly& p, std::size_t N);

// Evaluate sum_n a_n x^n (1-x)^{N-n} directly (round-trip checks).
Rat scaled_bernstein_eval(const std::vector<Rat>& a, const Rat& x);

// Expand the basis form back to a monomial-basis polynomial.
Poly poly_from_scaled_bernstein(const std::vector<Rat>& a);

}  // namespace sscert
