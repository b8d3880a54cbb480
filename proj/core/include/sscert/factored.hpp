#pragma once
// Rational functions num / prod_i f_i^{e_i} with the denominator kept as a
// list of polynomial factors.  Keeping factors separate (instead of one
// expanded denominator) lets the derivative raise each exponent by one
// instead of squaring the denominator, which is what makes repeated
// differentiation of deep fractions tractable.  Interval evaluation reports
// indeterminate (nullopt) whenever a denominator factor straddles zero.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sscert/interval.hpp"
#include "sscert/poly.hpp"

namespace sscert {

class FactoredRatFn {
 public:
  FactoredRatFn() = default;
  explicit FactoredRatFn(Poly numerator) : num_(std::move(numerator)) {}
  // num / den with den as a single factor.
  FactoredRatFn(Poly numerator, Poly denominator);

  static FactoredRatFn constant(const Rat& c) {
    return FactoredRatFn(Poly(c));
  }
  static FactoredRatFn var() { return FactoredRatFn(Poly::x()); }

  const Poly& num() const { return num_; }
  const std::vector<std::pair<Poly, int>>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.empty(); }

  // Multiply in an extra denominator factor f^e (merging equal factors).
  void push_den_factor(Poly f, int e);

  FactoredRatFn operator+(const FactoredRatFn& o) const;
  FactoredRatFn operator-(const FactoredRatFn& o) const;
  FactoredRatFn operator-() const;
  FactoredRatFn operator*(const FactoredRatFn& o) const;
  FactoredRatFn operator*(const Rat& s) const;
  FactoredRatFn operator/(const FactoredRatFn& o) const;
  FactoredRatFn reciprocal() const;
  FactoredRatFn pow(unsigned k) const;
  FactoredRatFn derivative() const;

  // Divide the numerator exactly by f (aborts on nonzero remainder); used
  // when a removable zero has been established structurally.
  FactoredRatFn divexact_num(const Poly& f) const;

  // nullopt when the denominator vanishes at x / straddles zero on x.
  std::optional<Rat> eval(const Rat& x) const;
  std::optional<Interval> eval(const Interval& x) const;

  // Substitute x := inner(x) (polynomial chart change, e.g. s := y^2).
  FactoredRatFn substitute_poly(const Poly& inner) const;
  // Substitute x := a(x)/b(x) (e.g. the reciprocal chart or a Moebius map).
  FactoredRatFn substitute_fraction(const Poly& a, const Poly& b) const;

  // Cancel factors that divide the numerator, fold constant factors, drop
  // zero exponents.
  void simplify();

  Poly den_expanded() const;
  std::string str(const std::string& var = "x") const;
  std::uint64_t digest(std::uint64_t seed) const;

  // Net vanishing order at x = 0 (numerator order minus denominator order);
  // negative for a pole at the origin.  Aborts on the zero function.
  long order_at_zero() const;

 private:
  Poly num_;                               // zero polynomial => zero function
  std::vector<std::pair<Poly, int>> den_;  // factors, exponents >= 1
};

FactoredRatFn operator*(const Rat& s, const FactoredRatFn& f);

// For f with every polynomial (numerator and all factors) even up to a net
// monomial power: rewrite f(x) as g(x^2).  The net stripped monomial power
// must come out even; aborts otherwise.
FactoredRatFn to_even_chart(const FactoredRatFn& f);

// Divide out the exact net power of x at the origin, returning g with
// f(x) = x^m g(x) and g regular nonzero at 0.  m may be negative (pole).
struct StrippedAtZero {
  FactoredRatFn fn;
  long order = 0;
};
StrippedAtZero strip_order_at_zero(const FactoredRatFn& f);

// Flatten to a canonical two-polynomial fraction in lowest terms.
FactoredRatFn canonical_fraction(const FactoredRatFn& f);

// Rewrite f so that no denominator factor vanishes at the origin, without
// changing the function: strip the exact net power of x, abort if that power
// is negative (a genuine pole), and multiply it back into the numerator.
// Interval evaluation of the result stays determinate on boxes touching 0.
FactoredRatFn regularize_at_zero(const FactoredRatFn& f);

}  // namespace sscert
