#include "sscert/dawson.hpp"

#include <cstdlib>

namespace sscert {

FactoredRatFn dawson_cf_w(int levels) {
  if (levels < 2) std::abort();
  const FactoredRatFn w = FactoredRatFn::var();
  // Backward recurrence: the deepest tail is 4(L-1)w / ((2L-1) + 2w), then
  //   f_k = 4(k-1)w / ((2k-1) + 2w - f_{k+1})   for k = L-1 .. 2,
  // and finally G = 1 / (1 + 2w - f_2), so that F(z) = z G(z^2).
  FactoredRatFn f =
      (Rat(4 * (levels - 1)) * w) /
      (FactoredRatFn::constant(Rat(2 * levels - 1)) + Rat(2) * w);
  for (int k = levels - 1; k >= 2; --k) {
    f = (Rat(4 * (k - 1)) * w) /
        (FactoredRatFn::constant(Rat(2 * k - 1)) + Rat(2) * w - f);
  }
  FactoredRatFn g =
      FactoredRatFn::constant(Rat(1)) /
      (FactoredRatFn::constant(Rat(1)) + Rat(2) * w - f);
  return canonical_fraction(g);
}

DawsonCore build_dawson(int levels) {
  DawsonCore dc;
  dc.levels = levels;
  const FactoredRatFn g = dawson_cf_w(levels);

  // Ntil(s) = -1 + ((2+s)/2) G(s/4):  N(y) = y Ntil(y^2).
  const Poly s = Poly::x();
  FactoredRatFn g_s4 = g.substitute_poly(s * Rat(1, 4));
  FactoredRatFn half_2ps(Poly(Rat(1)) + s * Rat(1, 2));
  FactoredRatFn ntil = half_2ps * g_s4 - FactoredRatFn::constant(Rat(1));
  dc.ntil = canonical_fraction(ntil);
  if (dc.ntil.num().order_at_zero() < 1) std::abort();
  dc.ntil_s = dc.ntil.divexact_num(Poly::x());
  dc.ntil_d = canonical_fraction(dc.ntil.derivative());
  dc.ntil_dd = canonical_fraction(dc.ntil_d.derivative());

  // dhat = (s-2) Ntil + 4 s Ntil'.
  FactoredRatFn sm2(s - Poly(Rat(2)));
  FactoredRatFn s4(s * Rat(4));
  dc.dhat = canonical_fraction(sm2 * dc.ntil + s4 * dc.ntil_d);
  if (dc.dhat.num().order_at_zero() < 1) std::abort();
  dc.dhat_s = dc.dhat.divexact_num(Poly::x());

  dc.rho_hat = canonical_fraction((Rat(2) * dc.ntil) / dc.dhat);

  // kappa = 1 - (8/499) Ntil / ((2+s) dhat).
  FactoredRatFn twops(Poly(Rat(2)) + s);
  dc.kappa = canonical_fraction(
      FactoredRatFn::constant(Rat(1)) -
      (Rat(8, 499) * dc.ntil) / (twops * dc.dhat));

  // eps = 1 - [ (s/2)(s+2) Ntil + (s+2)(Ntil + 2 s Ntil') - 2 s Ntil ]/(2 s).
  FactoredRatFn acc = FactoredRatFn(s * Rat(1, 2)) * twops * dc.ntil;
  acc = acc + twops * (dc.ntil + FactoredRatFn(s * Rat(2)) * dc.ntil_d);
  acc = acc - FactoredRatFn(s * Rat(2)) * dc.ntil;
  acc.push_den_factor(s * Rat(2), 1);
  dc.eps = canonical_fraction(FactoredRatFn::constant(Rat(1)) - acc);
  return dc;
}

Interval dawson_cf_eval(int levels, const Rat& z) {
  const FactoredRatFn g = dawson_cf_w(levels);
  auto v = g.eval(z * z);
  if (!v) std::abort();
  return Interval(z * *v);
}

Interval vtil0_enclosure(const DawsonCore& dc, const Rat& y,
                         const EncPrec& prec) {
  auto n = dc.ntil.eval(y * y);
  if (!n) std::abort();
  // vt0 = 3 e^{y^2/4} Ntil(y^2) / y.
  return iv_round_out(iv_exp_point(y * y / 4, prec) * Interval(Rat(3) * *n / y),
                      prec.out_bits);
}

Interval v0_true_enclosure(const Rat& y, int taylor_terms,
                           const EncPrec& prec) {
  Interval d = iv_dawson_point(y / 2, taylor_terms);
  Interval inner = Interval(-y) + Interval(Rat(2) + y * y) * d;
  return iv_round_out(
      iv_exp_point(y * y / 4, prec) * inner * Interval(Rat(3) / (y * y)),
      prec.out_bits);
}

Interval v0p_true_enclosure(const Rat& y, int taylor_terms,
                            const EncPrec& prec) {
  Interval d = iv_dawson_point(y / 2, taylor_terms);
  Interval inner = Interval(y / 2) - d;
  return iv_round_out(
      iv_exp_point(y * y / 4, prec) * inner * Interval(Rat(12) / (y * y * y)),
      prec.out_bits);
}

}  // namespace sscert
