#pragma once
// Dense univariate polynomials over the exact rationals: ring arithmetic,
// exact division (loud failure on nonzero remainder), gcd via primitive
// fraction-free remainder sequences, derivative, composition with affine
// maps, Horner evaluation over rationals and intervals, and the parity
// split/squeeze used for even functions of y treated as functions of y^2.

#include <optional>
#include <string>
#include <vector>

#include "sscert/interval.hpp"
#include "sscert/rational.hpp"

namespace sscert {

class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat constant) : c_{std::move(constant)} { trim(); }
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(Rat(1)); }
  static Poly x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }
  // c * x^k
  static Poly monomial(Rat c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial reported as -1
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly derivative() const;
  // this(a + b x)
  Poly compose_affine(const Rat& a, const Rat& b) const;
  // this(x) -> x^n * this(1/x) with n = max(degree, up_to); reversal for the
  // reciprocal-variable chart
  Poly reverse(std::size_t up_to) const;

  Rat eval(const Rat& x) const;
  Interval eval(const Interval& x) const;

  // Exact quotient; aborts with a message if the remainder is nonzero.
  Poly divexact(const Poly& divisor) const;
  // Quotient/remainder.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  // Largest k with x^k | this (degree of the root at 0); zero poly -> 0.
  std::size_t order_at_zero() const;
  // Exactly divide by x^k.
  Poly shift_down(std::size_t k) const;

  // Split an even-in-y polynomial (all odd coefficients zero) into a
  // polynomial in s = y^2.  Aborts if any odd coefficient is nonzero.
  Poly even_squeeze() const;
  // Inverse: p(s) -> p(y^2).
  Poly even_unsqueeze() const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;  // low -> high
};

Poly operator*(const Rat& s, const Poly& p);

// Numerator of p((a + b x)/(c + d x)) over the implied denominator
// (c + d x)^N; requires N >= deg p.  Used to re-express series in a
// Moebius-transformed chart variable as one polynomial fraction.
Poly mobius_numerator(const Poly& p, const Rat& a, const Rat& b, const Rat& c,
                      const Rat& d, std::size_t N);

// p(inner(x)) by Horner over the polynomial ring.
Poly poly_compose(const Poly& p, const Poly& inner);

// Numerator of p(a(x)/b(x)) over the implied denominator b^N; N >= deg p.
Poly poly_compose_fraction(const Poly& p, const Poly& a, const Poly& b,
                           std::size_t N);

// Content-normalized gcd (monic), via primitive pseudo-remainder sequence.
Poly poly_gcd(const Poly& a, const Poly& b);

// Cancel the common gcd of a fraction num/den; returns {num', den'} with
// den' lead coefficient positive.
std::pair<Poly, Poly> poly_cancel(const Poly& num, const Poly& den);

}  // namespace sscert
