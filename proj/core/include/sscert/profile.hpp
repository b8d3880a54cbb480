#pragma once
// The blow-up profile ansatz and its weighted residual.  The profile is
// f(y) = 2 arctan(g(y)) with g(y) = y G(t)/sqrt(2+y^2), t = y^2/(2+y^2),
// where G is half the seeded odd-Chebyshev sum evaluated in the squared
// variable.  All trigonometry is eliminated algebraically, the single
// surviving radical is carried in a quadratic tower and must cancel against
// the weight before anything is handed to the bounder.

#include <vector>

#include "sscert/factored.hpp"
#include "sscert/poly.hpp"

namespace sscert {

struct ProfileCore {
  Poly ghalf_u;  // G in the squared Chebyshev variable, degree 14
  Rat far_field;  // G(1): arctan argument of the profile's limit value

  // Potential slot -16 g^2 / (y^2 (1+g^2)^2) as a rational function of
  // s = y^2; regular and negative on [0, infinity), value -8 G(0)^2 at 0.
  FactoredRatFn v_s;

  // Weighted residual (radical already cancelled) as one reduced fraction
  // in the compact chart t = s/(2+s).
  FactoredRatFn resid_t;

  // Rational part of the sine-factor bound: the full expression is this
  // divided by sqrt(2), in the t chart.
  FactoredRatFn sinfac_t;

  // Weight-ratio factor (8/9)/(2-t) in the t chart.
  FactoredRatFn weight_t;
};

ProfileCore build_profile(const std::vector<Rat>& f0);

// Weighted residual for an arbitrary ansatz numerator G (used with the
// degree-0 toy ansatz as a cross-implementation oracle).
FactoredRatFn weighted_residual_t(const Poly& ghalf_u);

}  // namespace sscert
