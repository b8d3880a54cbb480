#pragma once
// Outer-range comparison expressions for the growing branch, all in the
// compact chart t = s/(2+s) (t = 9/11 is the matching radius y = 3).  The
// natural weights reduce to radicals of t there:
//   1/p1 = sqrt(2t),   1/p3 = (1-t)^{3/2},   y = sqrt(s) = sqrt(2t/(1-t)),
// so every expression is an exp/sqrt tree over exact rational functions.

#include "sscert/expr.hpp"
#include "sscert/fundamental.hpp"

namespace sscert {

struct OuterComparison {
  FactoredRatFn m_t, dm_t;  // growing branch M and DM in the t chart
  ExprPtr weighted_slope_t; // e^{s/4} DM / (1-t)^{3/2}          (p3 w0~')
  ExprPtr weighted_amp_t;   // e^{s/4} M / sqrt(1-t)             (p1 w0~)
  ExprPtr env_val_t;        // (w0~ + (3/100)/p1)/3 at the matching radius
  ExprPtr env_slope_t;      // (w0~' + (3/100)/p3)/3 - (w0~ - (3/100)/p1)/9
  ExprPtr pos_low_t;        // e^{s/4} M - (3/100) sqrt(1-t)
  ExprPtr neg_high_t;       // e^{s/4} DM + (3/100)(1-t)^{3/2}
};

OuterComparison build_outer(const FundamentalSystem& fs);

}  // namespace sscert
