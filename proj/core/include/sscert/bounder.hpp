#pragma once
// Certified range bounding by adaptive bisection.  A claim asks for a
// uniform bound (sup of |f|, a one-sided sign bound with margin, or range
// containment) of an expression over a closed box in one chart variable.
// Boxes whose enclosure settles the claim become certified leaves; a thin
// evaluation at a box midpoint that *violates* the claim is a definitive
// counterexample and stops refinement with a witness.  Budgets are assigned
// per subtree at split time (integer halving), which makes the entire leaf
// set -- and therefore the certificate, including its splitting-trace
// digest -- independent of evaluation order and thread count.
//
// Budget or depth exhaustion is reported as `BudgetExhausted`, which is an
// inconclusive outcome, never a mathematical failure.

#include <cstdint>
#include <optional>
#include <string>

#include "sscert/expr.hpp"
#include "sscert/interval.hpp"

namespace sscert {

enum class ClaimKind { SupAbs, LowerPos, UpperNeg, HullIn };

struct Claim {
  std::string id;
  std::string description;
  ExprPtr expr;
  std::string chart;  // label recorded in reports ("y", "u", "t", "z", ...)
  Interval domain;
  ClaimKind kind = ClaimKind::SupAbs;
  // SupAbs:   sup |f| <= target            (target > 0)
  // LowerPos: f >= target everywhere       (target >= 0; 0 means strict > 0)
  // UpperNeg: f <= -target everywhere      (target >= 0; 0 means strict < 0)
  Rat target;
  Interval bracket;  // HullIn: every enclosure must land inside this
  int max_depth = 48;
  long max_boxes = 1000000;
  EncPrec prec{};
};

enum class CertStatus { Certified, Failed, BudgetExhausted };

struct CertStats {
  long boxes = 0;                    // enclosure evaluations spent
  int depth = 0;                     // deepest box examined
  std::optional<Interval> hull;      // union of certified leaf enclosures
  std::optional<Interval> worst_box; // witness (Failed) or worst leaf box
  std::uint64_t trace = 0;           // splitting-trace digest (Merkle FNV)
  double wall_seconds = 0;           // informational only; never serialized
};

struct Certificate {
  Claim claim;
  CertStatus status = CertStatus::BudgetExhausted;
  CertStats stats;
};

const char* status_name(CertStatus s);

// Runs the adaptive certifier.  Honors the CERTIFY_THREADS environment
// variable (default 1); results are bit-identical for any thread count.
Certificate certify(const Claim& claim);

}  // namespace sscert
