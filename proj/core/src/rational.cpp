#include "sscert/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <sstream>

namespace sscert {

namespace {

// Parse a decimal literal like "-3.636e-4" exactly.
std::optional<Rat> parse_decimal(const std::string& s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool any = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!any) return std::nullopt;
  long expo = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      eneg = s[i] == '-';
      ++i;
    }
    if (i >= s.size()) return std::nullopt;
    long ev = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
      ev = ev * 10 + (s[i] - '0');
      if (ev > 1000000) return std::nullopt;
    }
    expo = eneg ? -ev : ev;
  }
  if (i != s.size()) return std::nullopt;
  Int mant(digits.empty() ? "0" : digits, 10);
  Rat value(mant);
  long net = expo - frac_digits;
  Int ten(10);
  Int scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(),
             static_cast<unsigned long>(net >= 0 ? net : -net));
  if (net >= 0)
    value *= Rat(scale);
  else
    value /= Rat(scale);
  if (neg) value = -value;
  value.canonicalize();
  return value;
}

}  // namespace

std::optional<Rat> rat_parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) return std::nullopt;
    auto check_int = [](const std::string& t) {
      std::size_t j = 0;
      if (t[j] == '+' || t[j] == '-') ++j;
      if (j >= t.size()) return false;
      for (; j < t.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(t[j]))) return false;
      return true;
    };
    if (!check_int(num) || !check_int(den)) return std::nullopt;
    Int n(num, 10), d(den, 10);
    if (d == 0) return std::nullopt;
    Rat r(n, d);
    r.canonicalize();
    return r;
  }
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos)
    return parse_decimal(s);
  std::size_t j = 0;
  if (s[j] == '+' || s[j] == '-') ++j;
  if (j >= s.size()) return std::nullopt;
  for (std::size_t k = j; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return std::nullopt;
  return Rat(Int(s, 10));
}

Rat rat(const std::string& text) {
  auto r = rat_parse(text);
  if (!r) {
    std::cerr << "sscert: bad rational literal: " << text << "\n";
    std::abort();
  }
  return *r;
}

std::string rat_str(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string rat_decimal(const Rat& x, int digits) {
  if (x == 0) return "0";
  mpf_class f(x, 64 + 4 * static_cast<unsigned>(digits));
  mp_exp_t e;
  std::string m = f.get_str(e, 10, static_cast<std::size_t>(digits));
  bool neg = !m.empty() && m[0] == '-';
  if (neg) m.erase(m.begin());
  while (m.size() > 1 && m.back() == '0') m.pop_back();
  std::ostringstream out;
  if (neg) out << '-';
  out << m[0];
  if (m.size() > 1) out << '.' << m.substr(1);
  if (e - 1 != 0) out << 'e' << (e - 1);
  return out.str();
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return Rat(1);
  Rat b = base;
  unsigned long n = static_cast<unsigned long>(exp >= 0 ? exp : -exp);
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), n);
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), n);
  out.canonicalize();
  if (exp < 0) {
    if (out == 0) {
      std::cerr << "sscert: 0^negative\n";
      std::abort();
    }
    out = Rat(1) / out;
  }
  return out;
}

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }
Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }

namespace {
Rat dyadic_dir(const Rat& x, unsigned bits, int dir) {
  // dir: -1 floor, 0 nearest, +1 ceil, at denominator 2^bits.
  Int two_b;
  mpz_ui_pow_ui(two_b.get_mpz_t(), 2, bits);
  Rat scaled = x * Rat(two_b);
  Int q;
  if (dir < 0) {
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  } else if (dir > 0) {
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  } else {
    // round half toward +inf: floor(x*2^b + 1/2)
    Rat shifted = scaled + Rat(1, 2);
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  }
  Rat out(q, two_b);
  out.canonicalize();
  return out;
}
}  // namespace

Rat rat_round_dyadic(const Rat& x, unsigned bits) { return dyadic_dir(x, bits, 0); }
Rat rat_dyadic_floor(const Rat& x, unsigned bits) { return dyadic_dir(x, bits, -1); }
Rat rat_dyadic_ceil(const Rat& x, unsigned bits) { return dyadic_dir(x, bits, 1); }

std::uint64_t fnv1a(std::uint64_t seed, const std::string& bytes) {
  std::uint64_t h = seed ? seed : 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t rat_digest(std::uint64_t seed, const Rat& x) {
  return fnv1a(seed, rat_str(x) + ";");
}

}  // namespace sscert
