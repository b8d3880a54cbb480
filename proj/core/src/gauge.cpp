#include "sscert/gauge.hpp"

#include <cstdlib>
#include <iostream>

#include "sscert/bernstein.hpp"

namespace sscert {

GaugeForm build_gauge(const ProfileCore& pc) {
  GaugeForm g;
  g.rho2 = Rat(70711, 50000);
  g.rho2.canonicalize();
  if (g.rho2 * g.rho2 < Rat(2)) {
    std::cerr << "gauge: rho2 is not an upper square root of 2\n";
    std::abort();
  }

  const Poly& PG = pc.ghalf_u;
  const Poly u = Poly::x();
  Poly one_plus = Poly::one() + u * (PG * PG);
  g.num_u = (PG + u * PG.derivative() * Rat(2)) * Rat(4000) - one_plus * g.rho2;
  g.den_u = one_plus * Rat(2000);

  g.num_bern = scaled_bernstein_from_poly(g.num_u, 59);
  g.den_bern = scaled_bernstein_from_poly(g.den_u, 59);
  g.all_positive = true;
  for (const Rat& a : g.num_bern)
    if (a <= Rat(0)) g.all_positive = false;
  for (const Rat& a : g.den_bern)
    if (a <= Rat(0)) g.all_positive = false;
  return g;
}

}  // namespace sscert
