#include "sscert/greens.hpp"

namespace sscert {

namespace {

Poly pv(std::vector<Rat> c) { return Poly(std::move(c)); }

FactoredRatFn to_t_chart(const FactoredRatFn& f_s) {
  // s = 2t/(1-t) maps t in [0,1] onto s in [0, infinity].
  return f_s.substitute_fraction(pv({Rat(0), Rat(2)}), pv({Rat(1), Rat(-1)}));
}

FactoredRatFn to_u_chart(const FactoredRatFn& f_y) {
  // y = 1/u maps u in (0, 1/3] onto y in [3, infinity).
  return f_y.substitute_fraction(Poly::one(), Poly::x());
}

}  // namespace

GreensKernel build_greens(const DawsonCore& dc, const ProfileCore& pc,
                          const FundamentalSystem& fs) {
  GreensKernel G;

  const Poly s2 = pv({Rat(0), Rat(0), Rat(1)});  // y^2
  const FactoredRatFn y_f = FactoredRatFn::var();

  // ---- bounded branch in the y-chart through z = (y-2)/(y+2) ----
  const Poly zden = pv({Rat(2), Rat(1)});   // y + 2
  const Poly znum = pv({Rat(-2), Rat(1)});  // y - 2
  auto compose_z = [&](const Poly& p, std::size_t N) {
    FactoredRatFn f(poly_compose_fraction(p, znum, zden, N));
    f.push_den_factor(zden, static_cast<int>(N));
    f.simplify();
    return f;
  };
  const FactoredRatFn B0 = compose_z(fs.b_z, 37);
  const FactoredRatFn Bz = compose_z(fs.b_z_d, 36);
  const FactoredRatFn Bzz = compose_z(fs.b_z_dd, 35);
  FactoredRatFn zp(Poly(Rat(4)));   // dz/dy = 4/(y+2)^2
  zp.push_den_factor(zden, 2);
  FactoredRatFn zpp(Poly(Rat(-8)));  // d2z/dy2 = -8/(y+2)^3
  zpp.push_den_factor(zden, 3);
  const FactoredRatFn B1 = Bz * zp;
  const FactoredRatFn B2 = Bzz * zp * zp + Bz * zpp;

  FactoredRatFn v1(pv({Rat(2), Rat(0), Rat(1)}));  // (y^2+2)/y^2
  v1.push_den_factor(Poly::x(), 2);
  FactoredRatFn v1p(Poly(Rat(-4)));  // -4/y^3
  v1p.push_den_factor(Poly::x(), 3);

  G.g0_y = FactoredRatFn(pv({Rat(2), Rat(0), Rat(1)})) * B0;
  G.g1_y = Rat(-4) * B0 + FactoredRatFn(pv({Rat(0), Rat(2), Rat(0), Rat(1)})) *
                              Bz * zp;

  const FactoredRatFn V_y = pc.v_s.substitute_poly(s2);
  // (2/y - y/2) = (2 - s/2)/y
  FactoredRatFn half_shift(pv({Rat(2), Rat(0), Rat(-1, 2)}));
  half_shift.push_den_factor(Poly::x(), 1);
  FactoredRatFn Lw1 =
      -(v1 * B2) - half_shift * v1 * B1 - Rat(2) * (v1p * B1) + V_y * v1 * B0;
  FactoredRatFn l13 = FactoredRatFn(Poly::monomial(Rat(1), 3)) * Lw1;
  l13.simplify();
  G.l13_y = l13;

  // ---- growing branch operator row and Wronskian ----
  const FactoredRatFn svar = FactoredRatFn::var();
  FactoredRatFn row_s = Rat(-4) * (svar * fs.m_dd) -
                        FactoredRatFn(pv({Rat(10), Rat(1)})) * fs.m_d +
                        (pc.v_s - FactoredRatFn(Poly(Rat(2)))) * fs.m_s;
  G.row_y = row_s.substitute_poly(s2);

  const FactoredRatFn M_y = fs.m_s.substitute_poly(s2);
  const FactoredRatFn DM_y = fs.dm_s.substitute_poly(s2);
  G.w2bar_y = M_y * G.g1_y - DM_y * G.g0_y;

  // ---- weighted kernel factors ----
  // p2/p3 = 2(2+y^2)/(3y(4+y^2)),  p2/p1 = (2+y^2)^2/(3(4+y^2));
  // the extra 1/y of the second factor is carried by the y^3 clearing.
  FactoredRatFn pref_p(pv({Rat(-4, 3), Rat(0), Rat(-2, 3)}));
  pref_p.push_den_factor(Poly::x(), 1);
  pref_p.push_den_factor(pv({Rat(4), Rat(0), Rat(1)}), 1);
  FactoredRatFn pref_q(pv({Rat(4, 3), Rat(0), Rat(4, 3), Rat(0), Rat(1, 3)}));
  pref_q.push_den_factor(Poly::x(), 1);
  pref_q.push_den_factor(pv({Rat(4), Rat(0), Rat(1)}), 1);

  FactoredRatFn chi_p =
      pref_p * (G.l13_y * M_y - y_f * G.row_y * G.g0_y) / G.w2bar_y;
  FactoredRatFn chi_q =
      pref_q * (G.l13_y * DM_y - y_f * G.row_y * G.g1_y) / G.w2bar_y;
  G.chi_p_y = regularize_at_zero(chi_p);
  G.chi_q_y = regularize_at_zero(chi_q);
  G.w2bar_y = regularize_at_zero(G.w2bar_y);
  G.wron_amp_y = regularize_at_zero(FactoredRatFn(Poly(Rat(6))) / G.w2bar_y);

  G.chi_p_u = regularize_at_zero(to_u_chart(G.chi_p_y));
  G.chi_q_u = regularize_at_zero(to_u_chart(G.chi_q_y));
  G.w2bar_u = regularize_at_zero(to_u_chart(G.w2bar_y));
  G.wron_amp_u = regularize_at_zero(to_u_chart(G.wron_amp_y));

  // ---- amplitude / slope ratio bounds ----
  G.amp_grow_z = fs.a_z;
  G.amp_bnd_z = fs.b_z;

  // Growing slope ratio: (A dhat + 4 s Ntil A') / (dhat - (8/499) Ntil/(2+s));
  // the denominator is dhat * kappa written over the common factor.
  FactoredRatFn two_plus_s(pv({Rat(2), Rat(1)}));
  FactoredRatFn sg_num = fs.a_s * dc.dhat +
                         Rat(4) * (svar * dc.ntil * fs.a_s_d);
  FactoredRatFn sg_den =
      dc.dhat - Rat(8, 499) * (dc.ntil / two_plus_s);
  G.slope_grow_t = regularize_at_zero(to_t_chart(sg_num / sg_den));

  // Bounded slope ratio: B - y(y^2+2) B_z/(y+2)^2  (equals -(y^3 w1')/4).
  FactoredRatFn sb =
      B0 - FactoredRatFn(pv({Rat(0), Rat(2), Rat(0), Rat(1)})) * Bz *
               FactoredRatFn(Poly::one(), pv({Rat(4), Rat(4), Rat(1)}));
  G.slope_bnd_y = sb;
  G.slope_bnd_u = regularize_at_zero(to_u_chart(sb));

  // ---- positivity pre-certificates in the t-chart ----
  G.slow_core_t = regularize_at_zero(
      to_t_chart(dc.ntil_s * FactoredRatFn(pv({Rat(4), Rat(4), Rat(1)}))));
  // dhat/s alone decays like 1/s; the (2+s) factor restores a positive floor
  // across the whole compactified chart (4/3 at t = 0, ~4 at t = 1).
  G.dhat_s_t = regularize_at_zero(to_t_chart(dc.dhat_s * two_plus_s));
  G.kappa_t = regularize_at_zero(to_t_chart(dc.kappa));

  return G;
}

}  // namespace sscert
