#include "sscert/bernstein.hpp"

#include <cstdlib>
#include <iostream>

namespace sscert {

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<Rat> scaled_bernstein_from_poly(const Poly& p, std::size_t N) {
  if (p.degree() > static_cast<long>(N)) {
    std::cerr << "sscert: basis conversion needs N >= deg p\n";
    std::abort();
  }
  std::vector<Rat> a(N + 1, Rat(0));
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    const Rat& pj = p.coeffs()[j];
    if (pj == 0) continue;
    for (std::size_t n = j; n <= N; ++n)
      a[n] += pj * Rat(binomial(static_cast<unsigned long>(N - j),
                                static_cast<unsigned long>(n - j)));
  }
  return a;
}

Rat scaled_bernstein_eval(const std::vector<Rat>& a, const Rat& x) {
  if (a.empty()) return Rat(0);
  std::size_t N = a.size() - 1;
  Rat one_minus = 1 - x;
  // powers built incrementally: x^n and (1-x)^{N-n}
  std::vector<Rat> xp(N + 1), qp(N + 1);
  xp[0] = 1;
  qp[0] = 1;
  for (std::size_t k = 1; k <= N; ++k) {
    xp[k] = xp[k - 1] * x;
    qp[k] = qp[k - 1] * one_minus;
  }
  Rat out(0);
  for (std::size_t n = 0; n <= N; ++n) out += a[n] * xp[n] * qp[N - n];
  return out;
}

Poly poly_from_scaled_bernstein(const std::vector<Rat>& a) {
  if (a.empty()) return Poly();
  std::size_t N = a.size() - 1;
  Poly x = Poly::x();
  Poly one_minus = Poly::one() - x;
  std::vector<Poly> xp(N + 1), qp(N + 1);
  xp[0] = Poly::one();
  qp[0] = Poly::one();
  for (std::size_t k = 1; k <= N; ++k) {
    xp[k] = xp[k - 1] * x;
    qp[k] = qp[k - 1] * one_minus;
  }
  Poly out;
  for (std::size_t n = 0; n <= N; ++n) {
    if (a[n] == 0) continue;
    out = out + xp[n] * qp[N - n] * a[n];
  }
  return out;
}

}  // namespace sscert
