#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <random>

#include "doctest.h"
#include "sscert/enclosures.hpp"
#include "sscert/profile.hpp"
#include "sscert/tables.hpp"

using namespace sscert;

namespace {

const char* kDataDir = SSCERT_DATA_DIR;

Rat q(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

// sin over a short interval via the point enclosure plus |sin'| <= 1.
Interval sin_short(const Interval& x, const EncPrec& prec) {
  Interval at_mid = iv_sin_point(x.mid(), prec);
  Rat half = x.width() / 2;
  return Interval(at_mid.lo - half, at_mid.hi + half);
}

struct TempTable {
  std::string path;
  explicit TempTable(const std::string& body) {
    path = std::string("/tmp/sscert_table_") +
           std::to_string(std::rand()) + ".tab";
    std::ofstream out(path);
    out << body;
  }
  ~TempTable() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("seed tables load with pinned first entries") {
  SeedTables t = load_seed_tables(kDataDir);
  CHECK(t.f0.size() == 15);
  CHECK(t.w0.size() == 45);
  CHECK(t.w1.size() == 36);
  CHECK(t.f0[0] == q(268245, 72878));
  CHECK(t.w1[0] == q(4607589, 9727120));
  CHECK(t.digest != 0);
  SeedTables again = load_seed_tables(kDataDir);
  CHECK(t.digest == again.digest);
}

TEST_CASE("table loader rejects malformed input") {
  SUBCASE("malformed rational") {
    TempTable tt("# table: f0\n0 1/2\n1 not-a-number\n");
    CHECK_THROWS_WITH_AS(load_table_file(tt.path, "f0", 2),
                         doctest::Contains("malformed rational"),
                         std::runtime_error);
  }
  SUBCASE("wrong count") {
    std::string body = "# table: f0\n";
    for (int i = 0; i < 14; ++i)
      body += std::to_string(i) + " 1/3\n";
    TempTable tt(body);
    CHECK_THROWS_WITH_AS(load_table_file(tt.path, "f0", 15),
                         doctest::Contains("missing entry"),
                         std::runtime_error);
  }
  SUBCASE("duplicate index") {
    TempTable tt("# table: f0\n0 1/2\n0 1/3\n");
    CHECK_THROWS_WITH_AS(load_table_file(tt.path, "f0", 2),
                         doctest::Contains("duplicate index"),
                         std::runtime_error);
  }
  SUBCASE("header count mismatch") {
    TempTable tt("# table: f0\n# entries: 3\n0 1/2\n1 1/3\n");
    CHECK_THROWS_WITH_AS(load_table_file(tt.path, "f0", 2),
                         doctest::Contains("header declares"),
                         std::runtime_error);
  }
  SUBCASE("wrong table name") {
    TempTable tt("# table: w0\n0 1/2\n");
    CHECK_THROWS_WITH_AS(load_table_file(tt.path, "f0", 1),
                         doctest::Contains("table name"),
                         std::runtime_error);
  }
}

TEST_CASE("toy ansatz residual matches the symbolic oracle exactly") {
  // Independent computer-algebra evaluation of the weighted residual for
  // the degree-0 ansatz gives (-y^6-9y^4-22y^2-16)/(3y^6+18y^4+27y^2+12):
  // value -4/5 at y=1 (t=1/3), -52/81 at y^2=2 (t=1/2), -1/3 at infinity.
  FactoredRatFn r = weighted_residual_t(Poly::one());
  CHECK(*r.eval(q(1, 3)) == q(-4, 5));
  CHECK(*r.eval(q(1, 2)) == q(-52, 81));
  CHECK(*r.eval(Rat(1)) == q(-1, 3));
}

TEST_CASE("profile residual shape and endpoint regularity") {
  SeedTables t = load_seed_tables(kDataDir);
  ProfileCore pc = build_profile(t.f0);
  CHECK(pc.ghalf_u.degree() == 14);
  CHECK(pc.resid_t.num().degree() == 44);
  CHECK(pc.resid_t.den().size() == 1);
  CHECK(pc.resid_t.den()[0].first.degree() == 59);
  CHECK(pc.resid_t.den()[0].second == 1);
  // Regular on the whole closed chart, including both endpoints.
  for (long j = 0; j <= 16; ++j) {
    auto v = pc.resid_t.eval(q(j, 16));
    REQUIRE(v.has_value());
    CHECK(rat_abs(*v) < q(15, 10000000));  // 1.5e-6 : coarse sanity ceiling
  }
}

TEST_CASE("residual stays under its certified level on a fine grid") {
  SeedTables t = load_seed_tables(kDataDir);
  ProfileCore pc = build_profile(t.f0);
  Interval sqrt2 = iv_sqrt_point(Rat(2));
  Rat maxv(0);
  for (long j = 0; j <= 500; ++j) {
    auto v = pc.resid_t.eval(q(j, 500));
    REQUIRE(v.has_value());
    maxv = rat_max(maxv, rat_abs(*v));
  }
  // max |resid/sqrt(2)| observed ~8.7e-7; certified target is 1e-6.
  CHECK(maxv < sqrt2.lo * q(1, 1000000));
  CHECK(maxv > sqrt2.hi * q(8, 10000000));
}

TEST_CASE("sine factor: origin value, sup location, and far value") {
  SeedTables t = load_seed_tables(kDataDir);
  ProfileCore pc = build_profile(t.f0);
  Rat g0 = pc.ghalf_u.eval(Rat(0));
  CHECK(*pc.sinfac_t.eval(Rat(0)) == q(8, 3) * g0);
  // Numeric value of the full factor at 0: (8/3) G(0)/sqrt(2) ~ 3.65167.
  Interval sqrt2 = iv_sqrt_point(Rat(2));
  Rat lo = *pc.sinfac_t.eval(Rat(0)) / sqrt2.hi;
  Rat hi = *pc.sinfac_t.eval(Rat(0)) / sqrt2.lo;
  CHECK(lo > q(36516, 10000));
  CHECK(hi < q(36518, 10000));
  // Grid maximum of |sinfac| is attained at t = 0 for this ansatz.
  Rat m0 = rat_abs(*pc.sinfac_t.eval(Rat(0)));
  for (long j = 1; j <= 200; ++j) {
    auto v = pc.sinfac_t.eval(q(j, 200));
    REQUIRE(v.has_value());
    CHECK(rat_abs(*v) <= m0);
  }
}

TEST_CASE("weight factor is monotone with exact sup 8/9") {
  SeedTables t = load_seed_tables(kDataDir);
  ProfileCore pc = build_profile(t.f0);
  CHECK(*pc.weight_t.eval(Rat(0)) == q(4, 9));
  CHECK(*pc.weight_t.eval(Rat(1)) == q(8, 9));
  for (long j = 0; j < 8; ++j) {
    CHECK(*pc.weight_t.eval(q(j, 8)) < *pc.weight_t.eval(q(j + 1, 8)));
  }
}

TEST_CASE("potential is negative and matches its origin closed form") {
  SeedTables t = load_seed_tables(kDataDir);
  ProfileCore pc = build_profile(t.f0);
  Rat g0 = pc.ghalf_u.eval(Rat(0));
  CHECK(*pc.v_s.eval(Rat(0)) == Rat(-8) * g0 * g0);
  for (long j = 1; j <= 100; ++j) {
    auto v = pc.v_s.eval(q(j, 2));
    REQUIRE(v.has_value());
    CHECK(*v < 0);
  }
}

TEST_CASE("trig elimination: sine of the profile matches the closed form") {
  SeedTables t = load_seed_tables(kDataDir);
  ProfileCore pc = build_profile(t.f0);
  EncPrec prec;
  prec.sqrt_bits = 224;
  prec.series_terms = 64;
  prec.arg_bits = 288;
  prec.out_bits = 352;
  std::mt19937 rng(777);
  std::uniform_int_distribution<long> dist(1, 9999);
  Rat tol = rat_pow(q(1, 10), 30);
  for (int i = 0; i < 100; ++i) {
    Rat y = q(dist(rng), 1000);  // (0, 10)
    // g = y G(t) / sqrt(2+y^2), t = y^2/(2+y^2)
    Rat t_y = y * y / (y * y + 2);
    Rat gt = pc.ghalf_u.eval(t_y);
    Interval root = iv_sqrt_point(Rat(2) + y * y, prec);
    auto inv = iv_div(Interval(y * gt), root);
    REQUIRE(inv.has_value());
    Interval g = *inv;
    // closed form 4 g (1-g^2)/(1+g^2)^2
    Interval g2 = iv_pow(g, 2);
    Interval one(Rat(1));
    auto den = iv_div(Interval(Rat(4)) * g * (one - g2),
                      iv_pow(one + g2, 2));
    REQUIRE(den.has_value());
    // sin(2 f) with f = 2 arctan(g)
    Interval f = iv_atan(g, prec);
    Interval arg = Interval(Rat(4)) * f;  // 2 * (2 arctan g)
    Interval lhs = sin_short(arg, prec);
    Interval diff = lhs - *den;
    CHECK(diff.contains(Rat(0)));
    CHECK(diff.width() < tol);
  }
}
