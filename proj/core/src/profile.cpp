#include "sscert/profile.hpp"

#include <cstdlib>

#include "sscert/chebyshev.hpp"
#include "sscert/tower.hpp"

namespace sscert {

namespace {

// G evaluated at t = s/(2+s), as a fraction in s: G_t(s) with denominator
// (s+2)^deg(G).
FactoredRatFn ansatz_in_s(const Poly& g) {
  long n = g.degree();
  if (n < 0) std::abort();
  Poly s = Poly::x();
  Poly sp2 = s + Poly(Rat(2));
  Poly num = poly_compose_fraction(g, s, sp2, static_cast<std::size_t>(n));
  FactoredRatFn out(num);
  if (n > 0) out.push_den_factor(sp2, static_cast<int>(n));
  return out;
}

}  // namespace

FactoredRatFn weighted_residual_t(const Poly& ghalf_u) {
  // Work over Q(y) adjoined with r = 1/sqrt(2+y^2) (r^2 = 1/(2+y^2)).
  const Poly y = Poly::x();
  const Poly y2p2 = y * y + Poly(Rat(2));
  QuadTower tw(FactoredRatFn(Poly::one(), y2p2));

  // g = y G(t) r with t = y^2/(2+y^2).
  long n = ghalf_u.degree();
  if (n < 0) std::abort();
  Poly gnum = poly_compose_fraction(ghalf_u, y * y, y2p2,
                                    static_cast<std::size_t>(n));
  FactoredRatFn gt(Poly::x() * gnum);
  if (n > 0) gt.push_den_factor(y2p2, static_cast<int>(n));
  QuadTower::Elem g{{}, gt};

  QuadTower::Elem gp = tw.derivative(g);
  QuadTower::Elem gpp = tw.derivative(gp);

  // Purely rational combinations of the odd object g.
  FactoredRatFn g2 = tw.extract_rational(tw.mul(g, g));
  FactoredRatFn one_plus = FactoredRatFn::constant(Rat(1)) + g2;
  FactoredRatFn ggp = tw.extract_rational(tw.mul(g, gp));

  // Radial residual of 2 arctan(g):
  //   (2/(1+g^2)) [ g'' + (2/y - y/2 - 2 g g'/(1+g^2)) g'
  //                 - 2 g (1-g^2) / (y^2 (1+g^2)) ].
  FactoredRatFn coeff2(Poly(Rat(4)) - y * y, y * Rat(2));
  coeff2 = coeff2 - (Rat(2) * ggp) / one_plus;
  FactoredRatFn coeff3 =
      (Rat(2) * (FactoredRatFn::constant(Rat(1)) - g2)) / one_plus;
  coeff3.push_den_factor(y * y, 1);

  QuadTower::Elem bracket = tw.add(gpp, tw.mul(tw.from_ratfn(coeff2), gp));
  bracket = tw.sub(bracket, tw.mul(tw.from_ratfn(coeff3), g));
  QuadTower::Elem resid =
      tw.mul(tw.from_ratfn(FactoredRatFn(Poly(Rat(2))) / one_plus), bracket);

  // Weight sqrt(2) p2 = (2+y^2)^3 r / (3 y (4+y^2)); the product with the
  // purely-radical residual is purely rational.
  FactoredRatFn wcoef(y2p2 * y2p2 * y2p2,
                      y * Rat(3) * (y * y + Poly(Rat(4))));
  QuadTower::Elem weighted = tw.mul(QuadTower::Elem{{}, wcoef}, resid);
  FactoredRatFn even_y = tw.extract_rational(weighted);

  // Even in y; move to s = y^2 and then to t = s/(2+s) via s = 2t/(1-t).
  FactoredRatFn in_s = to_even_chart(even_y);
  Poly t = Poly::x();
  FactoredRatFn in_t =
      in_s.substitute_fraction(t * Rat(2), Poly(Rat(1)) - t);
  return canonical_fraction(in_t);
}

ProfileCore build_profile(const std::vector<Rat>& f0) {
  ProfileCore pc;
  std::vector<Poly> odd = cheb_odd_u_upto(f0.size() - 1);
  pc.ghalf_u = Poly::zero();
  for (std::size_t i = 0; i < f0.size(); ++i)
    pc.ghalf_u = pc.ghalf_u + odd[i] * (f0[i] / 2);
  pc.far_field = pc.ghalf_u.eval(Rat(1));

  // Potential: -16 g^2 / (s (1+g^2)^2) with g^2 = t G(t)^2, t = s/(2+s).
  Poly s = Poly::x();
  Poly sp2 = s + Poly(Rat(2));
  FactoredRatFn gs = ansatz_in_s(pc.ghalf_u);
  FactoredRatFn g2 = FactoredRatFn(s, sp2) * gs * gs;
  FactoredRatFn one_plus = FactoredRatFn::constant(Rat(1)) + g2;
  FactoredRatFn v = (Rat(-16) * g2) / (one_plus * one_plus);
  v.push_den_factor(s, 1);
  v.simplify();
  pc.v_s = v;

  pc.resid_t = weighted_residual_t(pc.ghalf_u);

  // Sine factor in t: 16 G (1 - t G^2) / (3 (2-t) (1+t G^2)^2), to be
  // divided by sqrt(2) at claim level.
  Poly t = Poly::x();
  Poly gt = pc.ghalf_u;  // chart t: G(t) is polynomial in t
  FactoredRatFn tg2(t * (gt * gt));
  FactoredRatFn one_p = FactoredRatFn::constant(Rat(1)) + tg2;
  FactoredRatFn numr = Rat(16) * FactoredRatFn(gt) *
                       (FactoredRatFn::constant(Rat(1)) - tg2);
  FactoredRatFn den = Rat(3) * FactoredRatFn(Poly(Rat(2)) - t) * one_p *
                      one_p;
  pc.sinfac_t = numr / den;
  pc.sinfac_t.simplify();

  pc.weight_t = FactoredRatFn(Poly(Rat(8, 9)), Poly(Rat(2)) - t);
  return pc;
}

}  // namespace sscert
