#include "sscert/interval.hpp"

#include <cstdlib>

namespace sscert {

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo + b.lo, a.hi + b.hi);
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(a.lo - b.hi, a.hi - b.lo);
}

Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
  const Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo,
            p4 = a.hi * b.hi;
  return Interval(rat_min(rat_min(p1, p2), rat_min(p3, p4)),
                  rat_max(rat_max(p1, p2), rat_max(p3, p4)));
}

std::optional<Interval> iv_div(const Interval& a, const Interval& b) {
  if (b.contains_zero()) return std::nullopt;
  const Rat q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo,
            q4 = a.hi / b.hi;
  return Interval(rat_min(rat_min(q1, q2), rat_min(q3, q4)),
                  rat_max(rat_max(q1, q2), rat_max(q3, q4)));
}

Interval iv_hull(const Interval& a, const Interval& b) {
  return Interval(rat_min(a.lo, b.lo), rat_max(a.hi, b.hi));
}

std::optional<Interval> iv_intersect(const Interval& a, const Interval& b) {
  Rat lo = rat_max(a.lo, b.lo), hi = rat_min(a.hi, b.hi);
  if (lo > hi) return std::nullopt;
  return Interval(lo, hi);
}

Interval iv_pow(const Interval& a, long n) {
  if (n == 0) return Interval(Rat(1));
  if (n == 1) return a;
  if (n < 0) {
    // Negative powers must be written as explicit division so that the
    // zero-straddle case is reported as indeterminate, not silently widened.
    std::abort();
  }
  if (n % 2 == 0) {
    // even power: range is [min|x|^n, max|x|^n]
    Rat lo = rat_pow(a.min_abs(), n);
    Rat hi = rat_pow(a.max_abs(), n);
    return Interval(lo, hi);
  }
  return Interval(rat_pow(a.lo, n), rat_pow(a.hi, n));
}

Interval iv_round_out(const Interval& a, unsigned bits) {
  return Interval(rat_dyadic_floor(a.lo, bits), rat_dyadic_ceil(a.hi, bits));
}

std::string iv_str(const Interval& a) {
  return "[" + rat_str(a.lo) + ", " + rat_str(a.hi) + "]";
}

}  // namespace sscert
