#pragma once
// Validated enclosures of the transcendental functions the certificates
// need: exp, sqrt, atan, pi, sin, cos, and a Taylor-series Dawson-integral
// oracle.  Every function returns an interval with exact rational endpoints
// that provably contains the true value.  Series arguments are first rounded
// outward to dyadic form so endpoint sizes stay bounded regardless of the
// input's denominator.

#include "sscert/interval.hpp"

namespace sscert {

struct EncPrec {
  int exp_terms = 24;       // Taylor terms after halving the argument to <= 1/2
  unsigned sqrt_bits = 96;  // integer-sqrt scaling bits
  int series_terms = 40;    // atan / sin / cos series length
  unsigned arg_bits = 160;  // dyadic pre-rounding of series arguments
  unsigned out_bits = 192;  // outward rounding of results
};

// e^x for a point and for an interval (monotone lift).
Interval iv_exp_point(const Rat& x, const EncPrec& prec = {});
Interval iv_exp(const Interval& x, const EncPrec& prec = {});

// sqrt(x); nullopt when the interval reaches below zero.
Interval iv_sqrt_point(const Rat& x, const EncPrec& prec = {});
std::optional<Interval> iv_sqrt(const Interval& x, const EncPrec& prec = {});

// arctan for any rational (reciprocal reduction for |x| > 1), monotone lift.
Interval iv_atan_point(const Rat& x, const EncPrec& prec = {});
Interval iv_atan(const Interval& x, const EncPrec& prec = {});

Interval iv_pi(const EncPrec& prec = {});

// sin/cos on |x| <= 8 (alternating Taylor with certified tail).
Interval iv_sin_point(const Rat& x, const EncPrec& prec = {});
Interval iv_cos_point(const Rat& x, const EncPrec& prec = {});

// Dawson integral D+(z) = e^{-z^2} int_0^z e^{t^2} dt via its Taylor series
// with a certified geometric tail bound; oracle-grade for z in [0, 4].
Interval iv_dawson_point(const Rat& z, int terms = 200);

}  // namespace sscert
