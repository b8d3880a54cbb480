#include "sscert/linalg.hpp"

#include <cstdlib>

namespace sscert {

std::vector<Rat> solve_exact(std::vector<std::vector<Rat>> aug) {
  const std::size_t n = aug.size();
  if (n == 0) return {};
  for (const auto& row : aug)
    if (row.size() != n + 1) std::abort();

  // Scale each row to integers (solution is invariant under row scaling).
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    Int lcm(1);
    for (const auto& v : aug[i])
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    for (std::size_t j = 0; j <= n; ++j) {
      Rat scaled = aug[i][j] * Rat(lcm);
      scaled.canonicalize();
      if (scaled.get_den() != 1) std::abort();
      m[i][j] = scaled.get_num();
    }
  }

  // Fraction-free elimination: after step k, m[i][j] are k+1-minors and the
  // division by the previous pivot is exact.
  Int prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) std::abort();  // singular
    if (piv != k) std::swap(m[piv], m[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        Int t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        Int r;
        mpz_tdiv_qr(m[i][j].get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(),
                    prev.get_mpz_t());
        if (r != 0) std::abort();  // Bareiss divisibility must be exact
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }

  // Back substitution in rationals on the triangular integer system.
  std::vector<Rat> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rat acc(m[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rat(m[ii][j]) * x[j];
    x[ii] = acc / Rat(m[ii][ii]);
    x[ii].canonicalize();
  }
  return x;
}

}  // namespace sscert
