#pragma once
// Green's-kernel bookkeeping for the linearized problem: the exp-stripped
// Wronskian of the two approximate branches, the weighted kernel factors
// produced when the variation-of-parameters kernel is measured in the
// natural weights, the branch-to-exact amplitude/slope ratio bounds, and
// the positivity pre-certificates their denominators rely on.
//
// Chart conventions:
//   y-chart: the radial variable itself, used on [0, 3];
//   u-chart: u = 1/y for the far range, used on [0, 1/3];
//   t-chart: t = s/(2+s) with s = y^2, compactifying [0, infinity);
//   z-chart / zA-chart: the Chebyshev variables of the two branches.
// Every expression stored here is already regular at the chart origin
// (regularize_at_zero applied where the raw assembly has a removable 0/0).

#include "sscert/dawson.hpp"
#include "sscert/factored.hpp"
#include "sscert/fundamental.hpp"
#include "sscert/profile.hpp"

namespace sscert {

struct GreensKernel {
  // Building blocks, y-chart.
  FactoredRatFn g0_y;    // y^2 * (bounded branch)
  FactoredRatFn g1_y;    // y^3 * (bounded branch)'
  FactoredRatFn l13_y;   // y^3 * operator applied to the bounded branch
  FactoredRatFn row_y;   // (1/y) * exp-stripped operator on the growing branch
  FactoredRatFn w2bar_y; // y^2 * exp-stripped Wronskian of the two branches

  // Weighted kernel factors (must be uniformly small): y- and u-charts.
  FactoredRatFn chi_p_y, chi_q_y;
  FactoredRatFn chi_p_u, chi_q_u;
  FactoredRatFn w2bar_u;
  FactoredRatFn wron_amp_y, wron_amp_u;  // 6 / w2bar, the kernel-size factor

  // Amplitude/slope ratio bounds of approximate over exact branches.
  Poly amp_grow_z;            // growing amplitude: corrector A in its own chart
  FactoredRatFn slope_grow_t; // growing slope ratio numerator over kappa, t-chart
  Poly amp_bnd_z;             // bounded amplitude: B in its own chart
  FactoredRatFn slope_bnd_y, slope_bnd_u;  // bounded slope ratio

  // Positivity pre-certificates (denominator sign conditions), t-chart.
  FactoredRatFn slow_core_t;  // (Ntil/s) * (2+s)^2: decay-compensated core
  FactoredRatFn dhat_s_t;     // (2+s) * dhat/s: bounded away from 0 on [0,1]
  FactoredRatFn kappa_t;      // one-sided correction factor, regularized
};

GreensKernel build_greens(const DawsonCore& dc, const ProfileCore& pc,
                          const FundamentalSystem& fs);

}  // namespace sscert
