#pragma once
// Exact rational scalars.  Thin helpers around GMP's mpq_class: parsing
// (fraction and decimal forms), canonical printing, integer powers, dyadic
// rounding, and a stable 64-bit digest used for reproducibility checks.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace sscert {

using Rat = mpq_class;
using Int = mpz_class;

// Parse "p/q", "p", "-p/q", or a decimal like "3.636e-4" / "-0.03" into an
// exact rational.  Returns nullopt on malformed input.
std::optional<Rat> rat_parse(const std::string& text);

// Parse or abort with a clear message; for compiled-in constants.
Rat rat(const std::string& text);

// Canonical form "p/q" (q > 0, gcd(p,q)=1) or "p" when q == 1.
std::string rat_str(const Rat& x);

// Decimal rendering for human-readable reports (round-to-nearest, `digits`
// significant digits).  Never used in any verdict computation.
std::string rat_decimal(const Rat& x, int digits = 12);

Rat rat_pow(const Rat& base, long exp);
Rat rat_abs(const Rat& x);
Rat rat_min(const Rat& a, const Rat& b);
Rat rat_max(const Rat& a, const Rat& b);

// Nearest rational with denominator 2^bits; |result - x| <= 2^-(bits+1).
Rat rat_round_dyadic(const Rat& x, unsigned bits);
// Dyadic bounds: round_down <= x <= round_up, denominators 2^bits.
Rat rat_dyadic_floor(const Rat& x, unsigned bits);
Rat rat_dyadic_ceil(const Rat& x, unsigned bits);

// FNV-1a over the canonical string form; digest building block.
std::uint64_t fnv1a(std::uint64_t seed, const std::string& bytes);
std::uint64_t rat_digest(std::uint64_t seed, const Rat& x);

}  // namespace sscert
