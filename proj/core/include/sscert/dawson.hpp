#pragma once
// Continued-fraction approximant of the Dawson integral and the slow
// fundamental-solution core built from it.  Everything downstream of the
// approximant is an exact rational function of s = y^2; the true Dawson
// integral itself appears only in oracle enclosures for property tests.

#include "sscert/enclosures.hpp"
#include "sscert/factored.hpp"

namespace sscert {

// G_L with F_L(z) = z * G_L(z^2): the continued-fraction approximant of the
// Dawson integral as a rational function of w = z^2, built by the backward
// recurrence whose deepest term is 4(L-1) z^2.
FactoredRatFn dawson_cf_w(int levels);

struct DawsonCore {
  int levels;

  // Ntil(s) with N(y) = -y + (2+y^2) F_L(y/2) = y * Ntil(y^2); the numerator
  // carries an exact factor of s (N ~ y^3/3 at the origin).
  FactoredRatFn ntil;
  FactoredRatFn ntil_s;   // Ntil / s, regular and positive at s = 0
  FactoredRatFn ntil_d;   // d/ds Ntil
  FactoredRatFn ntil_dd;  // d^2/ds^2 Ntil

  // dhat := (s-2) Ntil + 4 s Ntil' ; the slow solution's derivative numerator
  // (vt0'(y) = 3 e^{s/4} y dhat / (2 y^3) up to the exact prefactor).
  FactoredRatFn dhat;
  FactoredRatFn dhat_s;  // dhat / s, regular and positive at s = 0

  // rho_hat := 2 Ntil / dhat ; vt0/vt0' = y * rho_hat(s).
  FactoredRatFn rho_hat;

  // kappa(s) = 1 - (8/499) Ntil / ((2+s) dhat): the one-sided correction
  // factor for the derivative-ratio bracket; kappa(0) = 497/499.
  FactoredRatFn kappa;

  // eps(s) = 1 - [(s/2)(s+2) Ntil + (s+2)(Ntil + 2 s Ntil') - 2 s Ntil]/(2s):
  // the defect of the approximant against the exact slow equation;
  // eps(0) = 0 with high-order vanishing.
  FactoredRatFn eps;
};

DawsonCore build_dawson(int levels = 13);

// Enclosure of F_L(z) at a rational point (for the alternation test).
Interval dawson_cf_eval(int levels, const Rat& z);

// vt0(y) = 3 e^{y^2/4} N(y) / y^2 via the approximant (enclosure via exp).
Interval vtil0_enclosure(const DawsonCore& dc, const Rat& y,
                         const EncPrec& prec = {});
// True v0 and v0' via the Taylor Dawson oracle:
//   v0  = 3 e^{y^2/4} (-y + (2+y^2) D(y/2)) / y^2
//   v0' = 12 e^{y^2/4} (y/2 - D(y/2)) / y^3
Interval v0_true_enclosure(const Rat& y, int taylor_terms = 200,
                           const EncPrec& prec = {});
Interval v0p_true_enclosure(const Rat& y, int taylor_terms = 200,
                            const EncPrec& prec = {});

}  // namespace sscert
