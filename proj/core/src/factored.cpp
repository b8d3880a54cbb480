#include "sscert/factored.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>

namespace sscert {

FactoredRatFn::FactoredRatFn(Poly numerator, Poly denominator)
    : num_(std::move(numerator)) {
  if (denominator.is_zero()) {
    std::cerr << "sscert: rational function with zero denominator\n";
    std::abort();
  }
  push_den_factor(std::move(denominator), 1);
  simplify();
}

void FactoredRatFn::push_den_factor(Poly f, int e) {
  if (e == 0) return;
  if (e < 0) {
    std::cerr << "sscert: denominator factor with negative exponent\n";
    std::abort();
  }
  if (f.is_zero()) {
    std::cerr << "sscert: zero denominator factor\n";
    std::abort();
  }
  if (f.degree() == 0) {
    num_ = num_ * (Rat(1) / rat_pow(f.coeff(0), e));
    return;
  }
  if (f.lead() < 0) {
    f = -f;
    if (e % 2 == 1) num_ = -num_;
  }
  for (auto& [g, d] : den_) {
    if (g == f) {
      d += e;
      return;
    }
  }
  den_.emplace_back(std::move(f), e);
}

void FactoredRatFn::simplify() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& [f, e] : den_) {
    while (e > 0) {
      auto [q, r] = num_.divmod(f);
      if (!r.is_zero()) break;
      num_ = std::move(q);
      --e;
    }
  }
  den_.erase(std::remove_if(den_.begin(), den_.end(),
                            [](const auto& fe) { return fe.second == 0; }),
             den_.end());
}

FactoredRatFn FactoredRatFn::operator+(const FactoredRatFn& o) const {
  std::vector<std::pair<Poly, int>> merged = den_;
  for (const auto& [f, e] : o.den_) {
    bool found = false;
    for (auto& [g, d] : merged) {
      if (g == f) {
        d = std::max(d, e);
        found = true;
        break;
      }
    }
    if (!found) merged.emplace_back(f, e);
  }
  auto deficit_product = [&](const std::vector<std::pair<Poly, int>>& own) {
    Poly out = Poly::one();
    for (const auto& [f, e] : merged) {
      int have = 0;
      for (const auto& [g, d] : own) {
        if (g == f) {
          have = d;
          break;
        }
      }
      for (int k = have; k < e; ++k) out = out * f;
    }
    return out;
  };
  FactoredRatFn r;
  r.num_ = num_ * deficit_product(den_) + o.num_ * deficit_product(o.den_);
  r.den_ = std::move(merged);
  r.simplify();
  return r;
}

FactoredRatFn FactoredRatFn::operator-(const FactoredRatFn& o) const {
  return *this + (-o);
}

FactoredRatFn FactoredRatFn::operator-() const {
  FactoredRatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

FactoredRatFn FactoredRatFn::operator*(const FactoredRatFn& o) const {
  FactoredRatFn r;
  r.num_ = num_ * o.num_;
  r.den_ = den_;
  for (const auto& [f, e] : o.den_) r.push_den_factor(f, e);
  r.simplify();
  return r;
}

FactoredRatFn FactoredRatFn::operator*(const Rat& s) const {
  FactoredRatFn r = *this;
  r.num_ = r.num_ * s;
  if (s == 0) r.den_.clear();
  return r;
}

FactoredRatFn operator*(const Rat& s, const FactoredRatFn& f) { return f * s; }

FactoredRatFn FactoredRatFn::reciprocal() const {
  if (is_zero()) {
    std::cerr << "sscert: reciprocal of the zero function\n";
    std::abort();
  }
  FactoredRatFn r;
  r.num_ = den_expanded();
  r.push_den_factor(num_, 1);
  r.simplify();
  return r;
}

FactoredRatFn FactoredRatFn::operator/(const FactoredRatFn& o) const {
  return *this * o.reciprocal();
}

FactoredRatFn FactoredRatFn::pow(unsigned k) const {
  FactoredRatFn r = FactoredRatFn::constant(Rat(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

FactoredRatFn FactoredRatFn::derivative() const {
  Poly all = Poly::one();
  for (const auto& [f, e] : den_) all = all * f;
  Poly n = num_.derivative() * all;
  for (std::size_t i = 0; i < den_.size(); ++i) {
    Poly rest = Poly::one();
    for (std::size_t j = 0; j < den_.size(); ++j)
      if (j != i) rest = rest * den_[j].first;
    n = n - num_ * (den_[i].first.derivative() * Rat(den_[i].second)) * rest;
  }
  FactoredRatFn r;
  r.num_ = std::move(n);
  r.den_ = den_;
  for (auto& [f, e] : r.den_) ++e;
  r.simplify();
  return r;
}

FactoredRatFn FactoredRatFn::divexact_num(const Poly& f) const {
  FactoredRatFn r = *this;
  r.num_ = r.num_.divexact(f);
  return r;
}

std::optional<Rat> FactoredRatFn::eval(const Rat& x) const {
  Rat d(1);
  for (const auto& [f, e] : den_) {
    Rat v = f.eval(x);
    if (v == 0) return std::nullopt;
    d *= rat_pow(v, e);
  }
  return num_.eval(x) / d;
}

std::optional<Interval> FactoredRatFn::eval(const Interval& x) const {
  Interval n = num_.eval(x);
  if (den_.empty()) return n;
  Interval d(Rat(1));
  for (const auto& [f, e] : den_) d = d * iv_pow(f.eval(x), e);
  return iv_div(n, d);
}

FactoredRatFn FactoredRatFn::substitute_poly(const Poly& inner) const {
  FactoredRatFn r;
  r.num_ = poly_compose(num_, inner);
  for (const auto& [f, e] : den_)
    r.push_den_factor(poly_compose(f, inner), e);
  r.simplify();
  return r;
}

FactoredRatFn FactoredRatFn::substitute_fraction(const Poly& a,
                                                 const Poly& b) const {
  if (is_zero()) return FactoredRatFn();
  std::size_t dn = static_cast<std::size_t>(std::max<long>(num_.degree(), 0));
  FactoredRatFn r;
  r.num_ = poly_compose_fraction(num_, a, b, dn);
  long bpow = -static_cast<long>(dn);
  for (const auto& [f, e] : den_) {
    std::size_t df = static_cast<std::size_t>(std::max<long>(f.degree(), 0));
    r.push_den_factor(poly_compose_fraction(f, a, b, df), e);
    bpow += static_cast<long>(df) * e;
  }
  if (bpow >= 0) {
    for (long k = 0; k < bpow; ++k) r.num_ = r.num_ * b;
  } else {
    r.push_den_factor(b, static_cast<int>(-bpow));
  }
  r.simplify();
  return r;
}

Poly FactoredRatFn::den_expanded() const {
  Poly out = Poly::one();
  for (const auto& [f, e] : den_)
    for (int k = 0; k < e; ++k) out = out * f;
  return out;
}

std::string FactoredRatFn::str(const std::string& var) const {
  std::ostringstream out;
  out << "(" << num_.str(var) << ")";
  for (const auto& [f, e] : den_)
    out << " / (" << f.str(var) << ")^" << e;
  return out.str();
}

std::uint64_t FactoredRatFn::digest(std::uint64_t seed) const {
  seed = fnv1a(seed, "ratf");
  seed = fnv1a(seed, std::to_string(num_.coeffs().size()));
  for (const auto& c : num_.coeffs()) seed = rat_digest(seed, c);
  seed = fnv1a(seed, std::to_string(den_.size()));
  for (const auto& [f, e] : den_) {
    seed = fnv1a(seed, std::to_string(e));
    seed = fnv1a(seed, std::to_string(f.coeffs().size()));
    for (const auto& c : f.coeffs()) seed = rat_digest(seed, c);
  }
  return seed;
}

long FactoredRatFn::order_at_zero() const {
  if (num_.is_zero()) std::abort();
  long ord = static_cast<long>(num_.order_at_zero());
  for (const auto& [f, e] : den_)
    ord -= static_cast<long>(f.order_at_zero()) * e;
  return ord;
}

FactoredRatFn to_even_chart(const FactoredRatFn& f) {
  if (f.is_zero()) return f;
  // Strip the x-power from a polynomial and squeeze the even remainder.
  auto squeeze = [](const Poly& p, long& xpow) {
    xpow = p.order_at_zero();
    return p.shift_down(xpow).even_squeeze();
  };
  long net = 0;
  long k = 0;
  FactoredRatFn out(squeeze(f.num(), k));
  net += k;
  for (const auto& [fac, e] : f.den()) {
    out.push_den_factor(squeeze(fac, k), e);
    net -= k * e;
  }
  if (net % 2 != 0) std::abort();  // the function was not even
  long half = net / 2;
  if (half > 0)
    out = out * FactoredRatFn(Poly::monomial(Rat(1), half));
  else if (half < 0)
    out.push_den_factor(Poly::x(), static_cast<int>(-half));
  out.simplify();
  return out;
}

FactoredRatFn canonical_fraction(const FactoredRatFn& f) {
  if (f.is_zero()) return f;
  auto [n, d] = poly_cancel(f.num(), f.den_expanded());
  return FactoredRatFn(std::move(n), std::move(d));
}

StrippedAtZero strip_order_at_zero(const FactoredRatFn& f) {
  if (f.is_zero()) std::abort();
  StrippedAtZero out;
  long net = 0;
  long k = f.num().order_at_zero();
  out.fn = FactoredRatFn(f.num().shift_down(k));
  net += k;
  for (const auto& [fac, e] : f.den()) {
    long kf = fac.order_at_zero();
    out.fn.push_den_factor(fac.shift_down(kf), e);
    net -= kf * e;
  }
  out.order = net;
  out.fn.simplify();
  return out;
}

FactoredRatFn regularize_at_zero(const FactoredRatFn& f) {
  StrippedAtZero s = strip_order_at_zero(f);
  if (s.order < 0) {
    std::cerr << "regularize_at_zero: pole of order " << -s.order
              << " at the origin\n";
    std::abort();
  }
  if (s.order == 0) return s.fn;
  FactoredRatFn out(s.fn.num() *
                    Poly::monomial(Rat(1), static_cast<std::size_t>(s.order)));
  for (const auto& [fac, e] : s.fn.den()) out.push_den_factor(fac, e);
  return out;
}

}  // namespace sscert
