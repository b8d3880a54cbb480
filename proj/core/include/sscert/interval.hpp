#pragma once
// Closed intervals with exact rational endpoints.  Arithmetic returns
// intervals that provably contain every pointwise result (inclusion
// property); division by an interval containing zero is reported as
// indeterminate via std::optional rather than widened to infinity.

#include <optional>
#include <string>

#include "sscert/rational.hpp"

namespace sscert {

struct Interval {
  Rat lo, hi;

  Interval() : lo(0), hi(0) {}
  Interval(Rat point) : lo(point), hi(point) {}
  Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}

  bool valid() const { return lo <= hi; }
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  // max |x| over the interval
  Rat max_abs() const { return rat_max(rat_abs(lo), rat_abs(hi)); }
  // min |x| over the interval (0 if it straddles zero)
  Rat min_abs() const {
    if (lo <= 0 && hi >= 0) return Rat(0);
    return rat_min(rat_abs(lo), rat_abs(hi));
  }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool inside(const Interval& outer) const {
    return outer.lo <= lo && hi <= outer.hi;
  }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
// nullopt iff 0 in b
std::optional<Interval> iv_div(const Interval& a, const Interval& b);

Interval iv_hull(const Interval& a, const Interval& b);
std::optional<Interval> iv_intersect(const Interval& a, const Interval& b);

// x^n with the even-power tightening (x^2 >= 0 even when x straddles 0).
Interval iv_pow(const Interval& a, long n);

// Smallest dyadic-endpoint interval (denominators 2^bits) containing a.
// Caps endpoint size after exact operations on large rationals.
Interval iv_round_out(const Interval& a, unsigned bits);

std::string iv_str(const Interval& a);

}  // namespace sscert
