// Exact rationals, interval arithmetic, and the transcendental enclosures.
// Oracle digits were computed independently at 32 significant digits and are
// frozen here; every enclosure must be tight (width bounded) and must agree
// with its oracle to well beyond the oracle's own truncation error.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sscert/enclosures.hpp"
#include "sscert/interval.hpp"
#include "sscert/rational.hpp"

using namespace sscert;

namespace {

// |enclosure - oracle| small and enclosure width small.
void check_enclosure(const Interval& enc, const std::string& oracle_digits,
                     const char* tol = "1e-28") {
  Rat oracle = rat(oracle_digits);
  Rat t = rat(tol);
  CHECK(enc.valid());
  CHECK(enc.width() <= t);
  CHECK(rat_abs(enc.mid() - oracle) <= t);
}

}  // namespace

TEST_CASE("rational parsing round-trips") {
  CHECK(rat("3/4") == Rat(3, 4));
  CHECK(rat("-3/4") == Rat(-3, 4));
  CHECK(rat("12") == Rat(12));
  CHECK(rat("0.25") == Rat(1, 4));
  CHECK(rat("-0.03") == Rat(-3, 100));
  CHECK(rat("3.636e-4") == Rat(909, 2500000));
  CHECK(rat("1e3") == Rat(1000));
  CHECK(rat("2.5E-1") == Rat(1, 4));
  CHECK(rat_str(Rat(6, 8)) == "3/4");
  CHECK(rat_str(Rat(-5)) == "-5");
  CHECK_FALSE(rat_parse("").has_value());
  CHECK_FALSE(rat_parse("1/0").has_value());
  CHECK_FALSE(rat_parse("abc").has_value());
  CHECK_FALSE(rat_parse("1.2.3").has_value());
  CHECK_FALSE(rat_parse("1e").has_value());
}

TEST_CASE("rational helpers") {
  CHECK(rat_pow(Rat(2, 3), 3) == Rat(8, 27));
  CHECK(rat_pow(Rat(2, 3), 0) == Rat(1));
  CHECK(rat_pow(Rat(2, 3), -2) == Rat(9, 4));
  CHECK(rat_abs(Rat(-7, 2)) == Rat(7, 2));
  CHECK(rat_min(Rat(1, 3), Rat(1, 4)) == Rat(1, 4));
  CHECK(rat_max(Rat(1, 3), Rat(1, 4)) == Rat(1, 3));
}

TEST_CASE("dyadic rounding brackets the input") {
  Rat x(1, 3);
  for (unsigned bits : {4u, 16u, 64u}) {
    Rat lo = rat_dyadic_floor(x, bits);
    Rat hi = rat_dyadic_ceil(x, bits);
    CHECK(lo <= x);
    CHECK(x <= hi);
    CHECK(hi - lo <= Rat(Int(1), Int(1) << bits) * 2);
    Rat near = rat_round_dyadic(x, bits);
    CHECK(rat_abs(near - x) * (Rat(Int(1) << bits) * 2) <= 1);
  }
  // dyadic input is exactly representable
  CHECK(rat_dyadic_floor(Rat(3, 8), 8) == Rat(3, 8));
  CHECK(rat_dyadic_ceil(Rat(3, 8), 8) == Rat(3, 8));
}

TEST_CASE("interval addition covers mixed-sign operands") {
  Interval a(Rat(0), Rat(1)), b(Rat(-1), Rat(0));
  Interval s = a + b;
  CHECK(s.lo == Rat(-1));
  CHECK(s.hi == Rat(1));
}

TEST_CASE("interval multiplication cases") {
  Interval a(Rat(-2), Rat(3)), b(Rat(-5), Rat(7));
  Interval p = a * b;
  CHECK(p.lo == Rat(-15));  // 3 * -5
  CHECK(p.hi == Rat(21));   // 3 * 7
  Interval c(Rat(2), Rat(4)), d(Rat(-3), Rat(-1));
  Interval q = c * d;
  CHECK(q.lo == Rat(-12));
  CHECK(q.hi == Rat(-2));
}

TEST_CASE("interval division is indeterminate through zero") {
  Interval a(Rat(1), Rat(2));
  CHECK_FALSE(iv_div(a, Interval(Rat(-1), Rat(1))).has_value());
  CHECK_FALSE(iv_div(a, Interval(Rat(0), Rat(1))).has_value());
  auto q = iv_div(a, Interval(Rat(2), Rat(4)));
  REQUIRE(q.has_value());
  CHECK(q->lo == Rat(1, 4));
  CHECK(q->hi == Rat(1));
}

TEST_CASE("even powers tighten through zero") {
  Interval a(Rat(-2), Rat(3));
  Interval sq = iv_pow(a, 2);
  CHECK(sq.lo == Rat(0));
  CHECK(sq.hi == Rat(9));
  Interval cu = iv_pow(a, 3);
  CHECK(cu.lo == Rat(-8));
  CHECK(cu.hi == Rat(27));
  Interval b(Rat(-3), Rat(-2));
  Interval bsq = iv_pow(b, 2);
  CHECK(bsq.lo == Rat(4));
  CHECK(bsq.hi == Rat(9));
  CHECK(iv_pow(a, 0).lo == Rat(1));
  CHECK(iv_pow(a, 0).hi == Rat(1));
}

TEST_CASE("outward rounding contains and stays close") {
  Interval a(Rat(1, 3), Rat(2, 3));
  Interval r = iv_round_out(a, 32);
  CHECK(r.lo <= a.lo);
  CHECK(a.hi <= r.hi);
  CHECK(r.width() - a.width() <= Rat(Int(4), Int(1) << 32));
}

TEST_CASE("hull and intersection") {
  Interval a(Rat(0), Rat(1)), b(Rat(2), Rat(3));
  Interval h = iv_hull(a, b);
  CHECK(h.lo == Rat(0));
  CHECK(h.hi == Rat(3));
  CHECK_FALSE(iv_intersect(a, b).has_value());
  auto i = iv_intersect(Interval(Rat(0), Rat(2)), Interval(Rat(1), Rat(3)));
  REQUIRE(i.has_value());
  CHECK(i->lo == Rat(1));
  CHECK(i->hi == Rat(2));
}

TEST_CASE("exp enclosures match oracle digits") {
  check_enclosure(iv_exp_point(Rat(1)), "2.7182818284590452353602874713527");
  check_enclosure(iv_exp_point(Rat(9, 4)),
                  "9.4877358363585257205503690445117");
  check_enclosure(iv_exp_point(Rat(-1, 3)),
                  "0.71653131057378925042560409692538");
  // monotone lift over a wide interval
  Interval e = iv_exp(Interval(Rat(0), Rat(1)));
  CHECK(e.lo <= Rat(1));
  CHECK(e.hi >= rat("2.71828182845904523"));
  CHECK(e.hi <= rat("2.71828182845904524"));
}

TEST_CASE("sqrt enclosures match oracle digits") {
  check_enclosure(iv_sqrt_point(Rat(2)), "1.4142135623730950488016887242097");
  check_enclosure(iv_sqrt_point(Rat(3, 7)),
                  "0.65465367070797714379829245624686");
  CHECK(iv_sqrt_point(Rat(0)).lo == 0);
  CHECK_FALSE(iv_sqrt(Interval(Rat(-1), Rat(1))).has_value());
  auto s = iv_sqrt(Interval(Rat(0), Rat(4)));
  REQUIRE(s.has_value());
  CHECK(s->lo <= Rat(0));
  CHECK(s->hi >= Rat(2));
}

TEST_CASE("atan enclosures match oracle digits") {
  check_enclosure(iv_atan_point(Rat(1)),
                  "0.78539816339744830961566084581988");
  check_enclosure(iv_atan_point(Rat(1, 5)),
                  "0.19739555984988075837004976519479");
  check_enclosure(iv_atan_point(Rat(7, 3)),
                  "1.1659045405098131959192487626303");
  // odd symmetry
  Interval a = iv_atan_point(Rat(-7, 3));
  check_enclosure(Interval(-a.hi, -a.lo),
                  "1.1659045405098131959192487626303");
}

TEST_CASE("pi enclosure matches oracle digits") {
  check_enclosure(iv_pi(), "3.1415926535897932384626433832795");
}

TEST_CASE("sin and cos enclosures match oracle digits") {
  check_enclosure(iv_sin_point(Rat(1)), "0.8414709848078965066525023216303");
  check_enclosure(iv_cos_point(Rat(1)), "0.54030230586813971740093660744298");
  check_enclosure(iv_sin_point(Rat(-3, 2)),
                  "-0.99749498660405443094172337114149");
  check_enclosure(iv_cos_point(Rat(31, 4)),
                  "0.10379435721925297102769406771382");
}

TEST_CASE("Dawson-integral oracle matches frozen digits") {
  check_enclosure(iv_dawson_point(Rat(1, 2)),
                  "0.42443638350202229593404235248967", "1e-25");
  check_enclosure(iv_dawson_point(Rat(1)),
                  "0.53807950691276841913638742040756", "1e-25");
  check_enclosure(iv_dawson_point(Rat(2)),
                  "0.30134038892379196603466443928642", "1e-25");
  check_enclosure(iv_dawson_point(Rat(3)),
                  "0.17827103061055828734259949224051", "1e-25");
  check_enclosure(iv_dawson_point(Rat(7, 2)),
                  "0.14962159308075648475304177829868", "1e-25");
}

TEST_CASE("digest is order-sensitive and stable") {
  std::uint64_t s1 = rat_digest(rat_digest(fnv1a(0, "a"), Rat(1, 3)), Rat(2));
  std::uint64_t s2 = rat_digest(rat_digest(fnv1a(0, "a"), Rat(2)), Rat(1, 3));
  CHECK(s1 != s2);
  CHECK(s1 == rat_digest(rat_digest(fnv1a(0, "a"), Rat(1, 3)), Rat(2)));
}
