#include "sscert/chebyshev.hpp"

namespace sscert {

std::vector<Poly> cheb_T_upto(std::size_t kmax) {
  std::vector<Poly> t;
  t.reserve(kmax + 1);
  t.push_back(Poly::one());
  if (kmax >= 1) t.push_back(Poly::x());
  Poly two_x = Poly::x() * Rat(2);
  for (std::size_t k = 2; k <= kmax; ++k)
    t.push_back(two_x * t[k - 1] - t[k - 2]);
  return t;
}

std::vector<Poly> cheb_odd_u_upto(std::size_t nmax) {
  std::vector<Poly> p;
  p.reserve(nmax + 1);
  p.push_back(Poly::one());
  if (nmax >= 1) p.push_back(Poly(std::vector<Rat>{Rat(-3), Rat(4)}));
  Poly step(std::vector<Rat>{Rat(-2), Rat(4)});  // 4u - 2
  for (std::size_t n = 2; n <= nmax; ++n)
    p.push_back(step * p[n - 1] - p[n - 2]);
  return p;
}

Rat cheb_clenshaw(const std::vector<Rat>& coeffs, const Rat& x) {
  Rat b1(0), b2(0);
  Rat two_x = 2 * x;
  for (std::size_t k = coeffs.size(); k-- > 1;) {
    Rat b0 = coeffs[k] + two_x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  Rat c0 = coeffs.empty() ? Rat(0) : coeffs[0];
  return c0 + x * b1 - b2;
}

ChebTDD cheb_tdd(std::size_t kmax, const Rat& x) {
  ChebTDD r;
  r.T.resize(kmax + 1);
  r.D.resize(kmax + 1);
  r.DD.resize(kmax + 1);
  r.T[0] = 1;
  r.D[0] = 0;
  r.DD[0] = 0;
  if (kmax >= 1) {
    r.T[1] = x;
    r.D[1] = 1;
    r.DD[1] = 0;
  }
  Rat two_x = 2 * x;
  for (std::size_t k = 2; k <= kmax; ++k) {
    r.T[k] = two_x * r.T[k - 1] - r.T[k - 2];
    r.D[k] = 2 * r.T[k - 1] + two_x * r.D[k - 1] - r.D[k - 2];
    r.DD[k] = 4 * r.D[k - 1] + two_x * r.DD[k - 1] - r.DD[k - 2];
  }
  return r;
}

}  // namespace sscert
