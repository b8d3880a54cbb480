#pragma once
// Gauge-mode positivity data.  The quadratic-form inequality reduces, after
// substituting the even profile core PG(u) (u = x^2), to positivity on [0,1]
// of an exact polynomial fraction
//     [4000 (PG + 2u PG') - rho2 (1 + u PG^2)] / [2000 (1 + u PG^2)],
// with rho2 a rational upper square root of 2.  Both numerator and
// denominator are certified positive by exhibiting all-positive coefficients
// in the unscaled Bernstein basis of degree 59.

#include <vector>

#include "sscert/profile.hpp"
#include "sscert/rational.hpp"

namespace sscert {

struct GaugeForm {
  Rat rho2;                   // 70711/50000, with rho2^2 >= 2 exactly
  Poly num_u, den_u;          // the two polynomials in u
  std::vector<Rat> num_bern;  // degree-59 Bernstein-type coefficients
  std::vector<Rat> den_bern;
  bool all_positive = false;  // both lists strictly positive
};

GaugeForm build_gauge(const ProfileCore& pc);

}  // namespace sscert
