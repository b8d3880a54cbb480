#pragma once
// Chebyshev machinery: T_k as exact polynomials, the halved odd-index family
// written in the squared variable, Clenshaw evaluation, and the coupled
// value/derivative/second-derivative recurrences used to assemble exact
// collocation rows.

#include <cstddef>
#include <vector>

#include "sscert/poly.hpp"
#include "sscert/rational.hpp"

namespace sscert {

// T_0 .. T_kmax as polynomials in x.
std::vector<Poly> cheb_T_upto(std::size_t kmax);

// Odd-index family in the squared variable: T_{2n+1}(x) = x * p_n(x^2).
// Returns p_0 .. p_nmax as polynomials in u = x^2
// (p_0 = 1, p_1 = 4u - 3, p_{n+1} = (4u - 2) p_n - p_{n-1}).
std::vector<Poly> cheb_odd_u_upto(std::size_t nmax);

// Clenshaw evaluation of sum_k coeffs[k] T_k(x).
Rat cheb_clenshaw(const std::vector<Rat>& coeffs, const Rat& x);

// Values T_k(x), T_k'(x), T_k''(x) for k = 0..kmax by simultaneous
// recurrence; exact in the rationals.
struct ChebTDD {
  std::vector<Rat> T, D, DD;
};
ChebTDD cheb_tdd(std::size_t kmax, const Rat& x);

}  // namespace sscert
