#include "sscert/enclosures.hpp"

#include <cassert>
#include <cstdlib>

namespace sscert {

namespace {

// Thin dyadic interval around a point; all series are evaluated in interval
// arithmetic over this, which is sound regardless of monotonicity.
Interval thin(const Rat& x, unsigned bits) {
  return Interval(rat_dyadic_floor(x, bits), rat_dyadic_ceil(x, bits));
}

Interval exp_on_thin(const Interval& x0, const EncPrec& prec) {
  // Halve the argument until |s| <= 1/2, Taylor with tail, then square back.
  int k = 0;
  Interval s = x0;
  while (s.max_abs() > Rat(1, 2)) {
    s = s * Interval(Rat(1, 2));
    ++k;
    if (k > 64) std::abort();  // |x| beyond any use in this project
  }
  const int K = prec.exp_terms;
  Interval sum(Rat(1));
  Interval term(Rat(1));
  for (int i = 1; i < K; ++i) {
    term = term * s * Interval(Rat(1, i));
    sum = sum + term;
  }
  // |tail| <= 2 |s|^K / K!  for |s| <= 1/2
  Rat sK = rat_pow(s.max_abs(), K);
  Int fact(1);
  for (int i = 2; i <= K; ++i) fact *= i;
  Rat tail = 2 * sK / Rat(fact);
  Interval enc(sum.lo - tail, sum.hi + tail);
  for (int i = 0; i < k; ++i) {
    enc = iv_pow(enc, 2);
    enc = iv_round_out(enc, prec.out_bits);
  }
  assert(enc.lo > 0);
  return enc;
}

}  // namespace

Interval iv_exp_point(const Rat& x, const EncPrec& prec) {
  return iv_round_out(exp_on_thin(thin(x, prec.arg_bits), prec), prec.out_bits);
}

Interval iv_exp(const Interval& x, const EncPrec& prec) {
  // exp is increasing
  Interval lo = iv_exp_point(x.lo, prec);
  Interval hi = iv_exp_point(x.hi, prec);
  return Interval(lo.lo, hi.hi);
}

namespace {

// floor and ceil enclosure of sqrt of a nonnegative dyadic r = n / 2^t
Interval sqrt_dyadic(const Rat& r, unsigned bits) {
  assert(r >= 0);
  if (r == 0) return Interval(Rat(0));
  // sqrt(n/d) = sqrt(n d)/d; scale by 4^bits for precision
  Int nd = r.get_num() * r.get_den();
  Int scaled;
  mpz_ui_pow_ui(scaled.get_mpz_t(), 2, 2 * bits);
  scaled *= nd;
  Int root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Int den2;
  mpz_ui_pow_ui(den2.get_mpz_t(), 2, bits);
  Rat denom = Rat(r.get_den()) * Rat(den2);
  Rat lo(root);
  lo /= denom;
  Rat hi(root + 1);
  hi /= denom;
  lo.canonicalize();
  hi.canonicalize();
  return Interval(lo, hi);
}

}  // namespace

Interval iv_sqrt_point(const Rat& x, const EncPrec& prec) {
  assert(x >= 0);
  Rat xl = rat_dyadic_floor(x, prec.arg_bits);
  Rat xh = rat_dyadic_ceil(x, prec.arg_bits);
  if (xl < 0) xl = 0;
  Interval a = sqrt_dyadic(xl, prec.sqrt_bits);
  Interval b = sqrt_dyadic(xh, prec.sqrt_bits);
  return Interval(a.lo, b.hi);  // sqrt increasing
}

std::optional<Interval> iv_sqrt(const Interval& x, const EncPrec& prec) {
  if (x.lo < 0) return std::nullopt;
  Interval lo = iv_sqrt_point(x.lo, prec);
  Interval hi = iv_sqrt_point(x.hi, prec);
  return Interval(lo.lo, hi.hi);
}

namespace {

// atan on a thin interval with |x| <= 1/2 by alternating Taylor series.
Interval atan_small(const Interval& x, const EncPrec& prec) {
  const int K = prec.series_terms;
  Interval x2 = iv_pow(x, 2);
  Interval sum = x;
  Interval powv = x;
  for (int i = 1; i < K; ++i) {
    powv = powv * x2;
    Interval term = powv * Interval(Rat(1, 2 * i + 1));
    sum = (i % 2 == 1) ? sum - term : sum + term;
    sum = iv_round_out(sum, prec.out_bits);
  }
  // |tail| <= |x|^{2K+1}/(2K+1) / (1 - x^2) ; |x| <= 1/2 so 1/(1-x^2) <= 4/3
  Rat tail = rat_pow(x.max_abs(), 2 * K + 1) * Rat(4, 3);
  return Interval(sum.lo - tail, sum.hi + tail);
}

Interval atan_on_thin(const Interval& x, const EncPrec& prec, int depth = 0) {
  if (x.max_abs() <= Rat(1, 2)) return atan_small(x, prec);
  if (depth > 40) std::abort();
  // atan(x) = 2 atan( x / (1 + sqrt(1+x^2)) )
  Interval one(Rat(1));
  auto root = iv_sqrt(one + iv_pow(x, 2), prec);
  assert(root.has_value());
  auto reduced = iv_div(x, one + *root);
  assert(reduced.has_value());
  Interval r = atan_on_thin(iv_round_out(*reduced, prec.out_bits), prec, depth + 1);
  return Interval(2 * r.lo, 2 * r.hi);
}

}  // namespace

Interval iv_atan_point(const Rat& x, const EncPrec& prec) {
  return iv_round_out(atan_on_thin(thin(x, prec.arg_bits), prec), prec.out_bits);
}

Interval iv_atan(const Interval& x, const EncPrec& prec) {
  // atan is increasing
  Interval lo = iv_atan_point(x.lo, prec);
  Interval hi = iv_atan_point(x.hi, prec);
  return Interval(lo.lo, hi.hi);
}

Interval iv_pi(const EncPrec& prec) {
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
  Interval a = iv_atan_point(Rat(1, 5), prec);
  Interval b = iv_atan_point(Rat(1, 239), prec);
  Interval r = Interval(Rat(16)) * a - Interval(Rat(4)) * b;
  return iv_round_out(r, prec.out_bits);
}

namespace {

// sin or cos on a thin interval, |x| <= 8, Taylor with a certified tail.
Interval sincos_on_thin(const Interval& x, bool want_sin, const EncPrec& prec) {
  assert(x.max_abs() <= Rat(8));
  const int K = prec.series_terms;  // number of series terms
  Interval x2 = iv_pow(x, 2);
  Interval term = want_sin ? x : Interval(Rat(1));
  Interval sum = term;
  // term_i has degree 2i+1 (sin) or 2i (cos)
  for (int i = 1; i < K; ++i) {
    long a = want_sin ? (2 * i) : (2 * i - 1);
    long b = want_sin ? (2 * i + 1) : (2 * i);
    term = term * x2 * Interval(Rat(1, a * b));
    sum = (i % 2 == 1) ? sum - term : sum + term;
    sum = iv_round_out(sum, prec.out_bits);
  }
  // next term magnitude bound, with geometric factor for the rest
  Rat m = x.max_abs();
  Rat next = rat_pow(m, want_sin ? (2 * K + 1) : (2 * K));
  Int fact(1);
  for (long i = 2; i <= (want_sin ? 2 * K + 1 : 2 * K); ++i) fact *= i;
  next /= Rat(fact);
  // ratio of consecutive terms <= 64/((2K)(2K+1)) < 1/2 for K >= 6
  Rat tail = 2 * next;
  return Interval(sum.lo - tail, sum.hi + tail);
}

}  // namespace

Interval iv_sin_point(const Rat& x, const EncPrec& prec) {
  return iv_round_out(sincos_on_thin(thin(x, prec.arg_bits), true, prec),
                      prec.out_bits);
}

Interval iv_cos_point(const Rat& x, const EncPrec& prec) {
  return iv_round_out(sincos_on_thin(thin(x, prec.arg_bits), false, prec),
                      prec.out_bits);
}

Interval iv_dawson_point(const Rat& z, int terms) {
  // D+(z) = sum_k (-2)^k z^{2k+1} / (1*3*5*...*(2k+1)), certified tail.
  EncPrec prec;
  Interval Z = thin(z, prec.arg_bits);
  Interval z2 = iv_pow(Z, 2);
  Interval term = Z;
  Interval sum = Z;
  for (int k = 1; k < terms; ++k) {
    term = term * z2 * Interval(Rat(-2, 2 * k + 1));
    sum = sum + term;
    sum = iv_round_out(sum, prec.out_bits);
    term = iv_round_out(term, prec.out_bits);
  }
  // tail ratio r = 2 z^2/(2K+3); require r < 1
  Rat m = Z.max_abs();
  Rat r = 2 * m * m / Rat(2 * terms + 1);
  if (r >= 1) std::abort();  // caller must raise `terms` for large z
  Rat tK = term.max_abs() * (2 * m * m / Rat(2 * terms + 1));
  Rat tail = tK / (Rat(1) - r);
  return Interval(sum.lo - tail, sum.hi + tail);
}

}  // namespace sscert
