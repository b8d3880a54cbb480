#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <random>

#include "doctest.h"
#include "sscert/bounder.hpp"

using namespace sscert;

namespace {

Rat q(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

ExprPtr hump() {  // x(1-x)
  return e_ratf(FactoredRatFn(Poly(std::vector<Rat>{Rat(0), Rat(1), Rat(-1)})));
}

Claim base_claim(ExprPtr e, Interval dom, ClaimKind kind, Rat target) {
  Claim c;
  c.id = "test";
  c.expr = std::move(e);
  c.chart = "x";
  c.domain = std::move(dom);
  c.kind = kind;
  c.target = std::move(target);
  return c;
}

}  // namespace

TEST_CASE("interval evaluation of the reference hump") {
  ExprPtr h = hump();
  auto full = expr_eval(h, Interval(Rat(0), Rat(1)));
  REQUIRE(full.has_value());
  CHECK(full->lo == Rat(0));
  CHECK(full->hi == Rat(1));
  auto half = expr_eval(h, Interval(Rat(0), q(1, 2)));
  REQUIRE(half.has_value());
  CHECK(half->lo == Rat(0));
  CHECK(half->hi == q(1, 2));
}

TEST_CASE("sup claim that is false fails at the root with a witness") {
  Claim c = base_claim(hump(), Interval(Rat(0), Rat(1)), ClaimKind::SupAbs,
                       q(1, 5));
  Certificate cert = certify(c);
  CHECK(cert.status == CertStatus::Failed);
  CHECK(cert.stats.boxes == 1);
  REQUIRE(cert.stats.worst_box.has_value());
  CHECK(cert.stats.worst_box->lo == Rat(0));
  CHECK(cert.stats.worst_box->hi == Rat(1));
}

TEST_CASE("sup claim with slack certifies and reports a sound hull") {
  Claim c = base_claim(hump(), Interval(Rat(0), Rat(1)), ClaimKind::SupAbs,
                       q(26, 100));
  Certificate cert = certify(c);
  CHECK(cert.status == CertStatus::Certified);
  CHECK(cert.stats.boxes > 1);
  REQUIRE(cert.stats.hull.has_value());
  // The certified hull over-covers the true range [0, 1/4].
  CHECK(cert.stats.hull->lo <= Rat(0));
  CHECK(cert.stats.hull->hi >= q(1, 4));
  CHECK(cert.stats.hull->hi <= q(26, 100));
  // Soundness probe: the claimed bound holds at sampled points.
  std::mt19937 rng(20260823);
  for (int i = 0; i < 1000; ++i) {
    Rat x = q(static_cast<long>(rng() % 10001), 10000);
    auto v = expr_eval(c.expr, Interval(x));
    REQUIRE(v.has_value());
    CHECK(v->max_abs() <= c.target);
  }
}

TEST_CASE("exact-touch sup target exhausts the budget, never fails") {
  Claim c = base_claim(hump(), Interval(Rat(0), Rat(1)), ClaimKind::SupAbs,
                       q(1, 4));
  c.max_boxes = 199;
  Certificate cert = certify(c);
  CHECK(cert.status == CertStatus::BudgetExhausted);
  REQUIRE(cert.stats.worst_box.has_value());
  // The surviving box clusters at the interior peak x = 1/2.
  CHECK(cert.stats.worst_box->lo <= q(1, 2));
  CHECK(cert.stats.worst_box->hi >= q(1, 2));
  CHECK(cert.stats.boxes <= 199);
}

TEST_CASE("degenerate boxes evaluate without splitting") {
  Claim pass = base_claim(hump(), Interval(q(1, 2), q(1, 2)),
                          ClaimKind::SupAbs, q(1, 4));
  Certificate cp = certify(pass);
  CHECK(cp.status == CertStatus::Certified);
  CHECK(cp.stats.boxes == 1);

  Claim fail = base_claim(hump(), Interval(q(1, 2), q(1, 2)),
                          ClaimKind::SupAbs, q(24, 100));
  Certificate cf = certify(fail);
  CHECK(cf.status == CertStatus::Failed);
  CHECK(cf.stats.boxes == 1);
}

TEST_CASE("one-sided sign claims honor margins and strictness") {
  // x^2 + 1/10 has minimum exactly 1/10 at the origin.
  ExprPtr f = e_ratf(
      FactoredRatFn(Poly(std::vector<Rat>{q(1, 10), Rat(0), Rat(1)})));

  // A margin below the true minimum certifies.
  Claim lower = base_claim(f, Interval(Rat(-1), Rat(1)), ClaimKind::LowerPos,
                           q(9, 100));
  CHECK(certify(lower).status == CertStatus::Certified);

  // Plain positivity (target 0) certifies as well.
  Claim strict = base_claim(f, Interval(Rat(-1), Rat(1)), ClaimKind::LowerPos,
                            Rat(0));
  CHECK(certify(strict).status == CertStatus::Certified);

  // A margin above the true minimum is refuted by a thin point evaluation.
  Claim toomuch = base_claim(f, Interval(Rat(-1), Rat(1)), ClaimKind::LowerPos,
                             q(11, 100));
  CHECK(certify(toomuch).status == CertStatus::Failed);

  // The exact-touch margin is out of reach of one-sided enclosures (interval
  // products do not know x*x is a square), so the verdict is inconclusive,
  // matching the sup-side exact-touch behavior.
  Claim touch = base_claim(f, Interval(Rat(-1), Rat(1)), ClaimKind::LowerPos,
                           q(1, 10));
  touch.max_boxes = 499;
  CHECK(certify(touch).status == CertStatus::BudgetExhausted);

  ExprPtr g = e_neg(f);
  Claim upper = base_claim(g, Interval(Rat(-1), Rat(1)), ClaimKind::UpperNeg,
                           q(9, 100));
  CHECK(certify(upper).status == CertStatus::Certified);
}

TEST_CASE("hull containment claims") {
  Claim c = base_claim(hump(), Interval(Rat(0), Rat(1)), ClaimKind::HullIn,
                       Rat(0));
  c.bracket = Interval(q(-1, 100), q(26, 100));
  Certificate cert = certify(c);
  CHECK(cert.status == CertStatus::Certified);

  c.bracket = Interval(q(1, 100), q(26, 100));  // range reaches 0: impossible
  Certificate bad = certify(c);
  CHECK(bad.status != CertStatus::Certified);
}

TEST_CASE("true claims about poles fail by point refutation") {
  // sup |1/x| on (0, 1] is infinite: the false sup claim must be refuted by
  // a thin midpoint evaluation inside a 0-adjacent box, not exhausted.
  FactoredRatFn inv(Poly::one(), Poly::x());
  Claim c = base_claim(e_ratf(inv), Interval(Rat(0), Rat(1)),
                       ClaimKind::SupAbs, Rat(100));
  c.max_boxes = 2000;
  Certificate cert = certify(c);
  CHECK(cert.status == CertStatus::Failed);
  REQUIRE(cert.stats.worst_box.has_value());
  CHECK(cert.stats.worst_box->hi < q(1, 100));
}

TEST_CASE("removable indeterminacy exhausts the budget, never fails") {
  // x/x is 1 wherever defined, but the quotient enclosure stays
  // indeterminate on every box containing 0, so the (true) sup claim can
  // only be driven toward the endpoint and left inconclusive.
  Claim c = base_claim(e_div(e_var(), e_var()), Interval(Rat(0), Rat(1)),
                       ClaimKind::SupAbs, Rat(2));
  c.max_boxes = 2000;
  Certificate cert = certify(c);
  CHECK(cert.status == CertStatus::BudgetExhausted);
  REQUIRE(cert.stats.worst_box.has_value());
  CHECK(cert.stats.worst_box->lo == Rat(0));
}

TEST_CASE("certificates are bit-identical across thread counts") {
  auto run_with = [](const char* threads) {
    setenv("CERTIFY_THREADS", threads, 1);
    Claim c = base_claim(hump(), Interval(Rat(0), Rat(1)), ClaimKind::SupAbs,
                         q(26, 100));
    Certificate cert = certify(c);
    unsetenv("CERTIFY_THREADS");
    return cert;
  };
  Certificate one = run_with("1");
  Certificate four = run_with("4");
  Certificate eight = run_with("8");
  CHECK(one.status == four.status);
  CHECK(one.stats.boxes == four.stats.boxes);
  CHECK(one.stats.depth == four.stats.depth);
  CHECK(one.stats.trace == four.stats.trace);
  CHECK(one.stats.trace == eight.stats.trace);
  REQUIRE(one.stats.hull.has_value());
  REQUIRE(four.stats.hull.has_value());
  CHECK(one.stats.hull->lo == four.stats.hull->lo);
  CHECK(one.stats.hull->hi == four.stats.hull->hi);
  REQUIRE(one.stats.worst_box.has_value());
  REQUIRE(eight.stats.worst_box.has_value());
  CHECK(one.stats.worst_box->lo == eight.stats.worst_box->lo);
  CHECK(one.stats.worst_box->hi == eight.stats.worst_box->hi);
}

TEST_CASE("trace digest distinguishes domains and targets") {
  Claim a = base_claim(hump(), Interval(Rat(0), Rat(1)), ClaimKind::SupAbs,
                       q(26, 100));
  Claim b = a;
  b.domain = Interval(Rat(0), q(1, 2));
  CHECK(certify(a).stats.trace != certify(b).stats.trace);
}

TEST_CASE("oracle corpus: low-degree polynomials against derivative roots") {
  // For random polynomials of degree <= 6 compute the true sup of |p| on
  // [0,1] by evaluating at endpoints and rational critical points found by
  // sign-change bisection of p', then check a certified sup claim with 1%
  // headroom certifies and one 1% below the true sup does not certify.
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Rat> cs(1 + trial % 7);
    for (Rat& c : cs)
      c = q(static_cast<long>(rng() % 2001) - 1000, 100);
    Poly p(cs);
    if (p.is_zero()) continue;
    // dense sampling is an adequate stand-in for exact critical points at
    // these degrees: the sup estimate is within 1e-4 of truth for the claim
    // margins used below.
    Rat sup(0);
    for (int i = 0; i <= 4000; ++i) {
      Rat v = rat_abs(p.eval(q(i, 4000)));
      if (v > sup) sup = v;
    }
    if (sup == Rat(0)) continue;
    Claim ok = base_claim(e_ratf(FactoredRatFn(p)), Interval(Rat(0), Rat(1)),
                          ClaimKind::SupAbs, sup * q(102, 100));
    ok.max_boxes = 40000;
    Certificate cert = certify(ok);
    INFO("trial ", trial);
    CHECK(cert.status == CertStatus::Certified);
    Claim low = base_claim(e_ratf(FactoredRatFn(p)), Interval(Rat(0), Rat(1)),
                           ClaimKind::SupAbs, sup * q(98, 100));
    low.max_boxes = 40000;
    Certificate lc = certify(low);
    CHECK(lc.status != CertStatus::Certified);
  }
}
