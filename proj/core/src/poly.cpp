#include "sscert/poly.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace sscert {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(Rat c, std::size_t k) {
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = std::move(c);
  return Poly(std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rat> v(c_);
  for (auto& x : v) x = -x;
  return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return Poly(std::move(v));
}

Poly Poly::operator*(const Rat& s) const {
  std::vector<Rat> v(c_);
  for (auto& x : v) x *= s;
  return Poly(std::move(v));
}

Poly operator*(const Rat& s, const Poly& p) { return p * s; }

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(i);
  return Poly(std::move(v));
}

Poly Poly::compose_affine(const Rat& a, const Rat& b) const {
  // Horner on (a + b x)
  Poly acc;
  Poly lin(std::vector<Rat>{a, b});
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * lin + Poly(c_[i]);
  }
  return acc;
}

Poly Poly::reverse(std::size_t up_to) const {
  std::size_t n = std::max<std::size_t>(up_to, c_.empty() ? 0 : c_.size() - 1);
  std::vector<Rat> v(n + 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[n - i] = c_[i];
  return Poly(std::move(v));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Interval Poly::eval(const Interval& x) const {
  Interval acc(Rat(0));
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = acc * x + Interval(c_[i]);
  return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) {
    std::cerr << "sscert: polynomial division by zero\n";
    std::abort();
  }
  Poly rem = *this;
  if (rem.degree() < divisor.degree()) return {Poly(), rem};
  std::vector<Rat> q(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1,
                     Rat(0));
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    long shift = rem.degree() - divisor.degree();
    Rat f = rem.lead() / divisor.lead();
    q[static_cast<std::size_t>(shift)] = f;
    rem = rem - divisor * Poly::monomial(f, static_cast<std::size_t>(shift));
  }
  return {Poly(std::move(q)), rem};
}

Poly Poly::divexact(const Poly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) {
    std::cerr << "sscert: divexact has nonzero remainder (deg "
              << r.degree() << ")\n";
    std::abort();
  }
  return q;
}

std::size_t Poly::order_at_zero() const {
  if (is_zero()) return 0;
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return k;
}

Poly Poly::shift_down(std::size_t k) const {
  if (is_zero()) return Poly();
  if (order_at_zero() < k) {
    std::cerr << "sscert: shift_down below a nonzero coefficient\n";
    std::abort();
  }
  return Poly(std::vector<Rat>(c_.begin() + static_cast<long>(k), c_.end()));
}

Poly Poly::even_squeeze() const {
  std::vector<Rat> v((c_.size() + 1) / 2, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i % 2 == 1) {
      if (c_[i] != 0) {
        std::cerr << "sscert: even_squeeze on a polynomial with odd part\n";
        std::abort();
      }
    } else {
      v[i / 2] = c_[i];
    }
  }
  return Poly(std::move(v));
}

Poly Poly::even_unsqueeze() const {
  std::vector<Rat> v(c_.size() == 0 ? 0 : 2 * c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[2 * i] = c_[i];
  return Poly(std::move(v));
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) out << " + ";
    out << rat_str(c_[i]);
    if (i >= 1) out << "*" << var;
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

Poly mobius_numerator(const Poly& p, const Rat& a, const Rat& b, const Rat& c,
                      const Rat& d, std::size_t N) {
  if (p.degree() > static_cast<long>(N)) {
    std::cerr << "sscert: mobius_numerator needs N >= deg p\n";
    std::abort();
  }
  Poly up(std::vector<Rat>{a, b});    // a + b x
  Poly down(std::vector<Rat>{c, d});  // c + d x
  // Horner in the fraction: accumulate acc = acc*up + p_i*down^(N-i) pattern
  // done directly with power tables for clarity.
  std::vector<Poly> up_pow(N + 1), down_pow(N + 1);
  up_pow[0] = Poly::one();
  down_pow[0] = Poly::one();
  for (std::size_t k = 1; k <= N; ++k) {
    up_pow[k] = up_pow[k - 1] * up;
    down_pow[k] = down_pow[k - 1] * down;
  }
  Poly out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] == 0) continue;
    out = out + up_pow[i] * down_pow[N - i] * p.coeffs()[i];
  }
  return out;
}

Poly poly_compose(const Poly& p, const Poly& inner) {
  Poly acc;
  for (std::size_t i = p.coeffs().size(); i-- > 0;)
    acc = acc * inner + Poly(p.coeffs()[i]);
  return acc;
}

Poly poly_compose_fraction(const Poly& p, const Poly& a, const Poly& b,
                           std::size_t N) {
  if (p.degree() > static_cast<long>(N)) {
    std::cerr << "sscert: poly_compose_fraction needs N >= deg p\n";
    std::abort();
  }
  std::vector<Poly> ap(N + 1), bp(N + 1);
  ap[0] = Poly::one();
  bp[0] = Poly::one();
  for (std::size_t k = 1; k <= N; ++k) {
    ap[k] = ap[k - 1] * a;
    bp[k] = bp[k - 1] * b;
  }
  Poly out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] == 0) continue;
    out = out + ap[i] * bp[N - i] * p.coeffs()[i];
  }
  return out;
}

namespace {

// integer content of a rational polynomial scaled to integer coefficients
Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Int den_lcm(1);
  for (const auto& c : p.coeffs()) {
    Int d = c.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  Int num_gcd(0);
  for (const auto& c : p.coeffs()) {
    Rat scaled = c * Rat(den_lcm);
    Int n = scaled.get_num();  // integer now
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (num_gcd == 0) num_gcd = 1;
  Rat scale = Rat(den_lcm) / Rat(num_gcd);
  Poly out = p * scale;
  if (out.lead() < 0) out = -out;
  return out;
}

}  // namespace

Poly poly_gcd(const Poly& a0, const Poly& b0) {
  Poly a = primitive_part(a0), b = primitive_part(b0);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    // pseudo-remainder, then primitive part to control growth
    Poly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      long shift = r.degree() - b.degree();
      Rat f = r.lead() / b.lead();
      r = r - b * Poly::monomial(f, static_cast<std::size_t>(shift));
    }
    a = b;
    b = primitive_part(r);
  }
  if (a.degree() == 0) return Poly::one();
  // normalize monic-free: primitive with positive lead
  return primitive_part(a);
}

std::pair<Poly, Poly> poly_cancel(const Poly& num, const Poly& den) {
  if (den.is_zero()) {
    std::cerr << "sscert: rational function with zero denominator\n";
    std::abort();
  }
  Poly g = poly_gcd(num, den);
  Poly n = num, d = den;
  if (g.degree() > 0) {
    n = num.divexact(g);
    d = den.divexact(g);
  }
  if (d.lead() < 0) {
    n = -n;
    d = -d;
  }
  return {n, d};
}

}  // namespace sscert
