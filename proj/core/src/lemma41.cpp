#include "sscert/lemma41.hpp"

namespace sscert {

namespace {

Poly pv(std::vector<Rat> c) { return Poly(std::move(c)); }

}  // namespace

OuterComparison build_outer(const FundamentalSystem& fs) {
  OuterComparison O;

  const Poly two_t = pv({Rat(0), Rat(2)});
  const Poly one_minus_t = pv({Rat(1), Rat(-1)});
  O.m_t = fs.m_s.substitute_fraction(two_t, one_minus_t);
  O.dm_t = fs.dm_s.substitute_fraction(two_t, one_minus_t);

  // s/4 = t/(2(1-t)) and the radical weights in t.
  FactoredRatFn s_quarter(pv({Rat(0), Rat(1, 2)}), one_minus_t);
  FactoredRatFn s_t(two_t, one_minus_t);
  ExprPtr egrow = e_exp(e_ratf(s_quarter));
  ExprPtr y_t = e_sqrt(e_ratf(s_t));
  ExprPtr inv_p1 = e_sqrt(e_ratf(FactoredRatFn(two_t)));  // sqrt(2t)
  ExprPtr inv_p3 = e_sqrt(e_ratf(FactoredRatFn(
      one_minus_t * one_minus_t * one_minus_t)));  // (1-t)^{3/2}
  ExprPtr sqrt_1mt = e_sqrt(e_ratf(FactoredRatFn(one_minus_t)));

  ExprPtr M = e_ratf(O.m_t);
  ExprPtr DM = e_ratf(O.dm_t);
  ExprPtr w0 = e_mul(egrow, e_mul(y_t, M));    // w0~ = e^{s/4} y M
  ExprPtr dw0 = e_mul(egrow, DM);              // w0~' = e^{s/4} DM
  ExprPtr c003 = e_const(Rat(3, 100));

  O.weighted_slope_t = e_div(dw0, inv_p3);
  O.weighted_amp_t = e_div(e_mul(egrow, M), sqrt_1mt);

  O.env_val_t =
      e_div(e_add(w0, e_mul(c003, inv_p1)), e_const(Rat(3)));
  O.env_slope_t =
      e_sub(e_div(e_add(dw0, e_mul(c003, inv_p3)), e_const(Rat(3))),
            e_div(e_sub(w0, e_mul(c003, inv_p1)), e_const(Rat(9))));

  O.pos_low_t = e_sub(e_mul(egrow, M), e_mul(c003, sqrt_1mt));
  O.neg_high_t = e_add(dw0, e_mul(c003, inv_p3));

  return O;
}

}  // namespace sscert
