#include "sscert/bounder.hpp"

#include <chrono>
#include <cstdlib>
#include <future>
#include <string>

namespace sscert {

namespace {

// Deterministic "how bad is this enclosure" score; larger is worse.  Used
// only for reporting the worst leaf, never for control flow.
Rat badness(const Claim& c, const Interval& e) {
  switch (c.kind) {
    case ClaimKind::SupAbs:
      return e.max_abs();
    case ClaimKind::LowerPos:
      return -e.lo;
    case ClaimKind::UpperNeg:
      return e.hi;
    case ClaimKind::HullIn: {
      Rat over = e.hi - c.bracket.hi;
      Rat under = c.bracket.lo - e.lo;
      Rat worst = rat_max(over, under);
      return rat_max(worst, Rat(0));
    }
  }
  return Rat(0);
}

bool leaf_passes(const Claim& c, const Interval& e) {
  switch (c.kind) {
    case ClaimKind::SupAbs:
      return e.max_abs() <= c.target;
    case ClaimKind::LowerPos:
      return c.target > 0 ? e.lo >= c.target : e.lo > 0;
    case ClaimKind::UpperNeg:
      return c.target > 0 ? e.hi <= -c.target : e.hi < 0;
    case ClaimKind::HullIn:
      return e.inside(c.bracket);
  }
  return false;
}

// True when a thin evaluation at a single point already contradicts the
// claim (a certified counterexample).
bool point_refutes(const Claim& c, const Interval& t) {
  switch (c.kind) {
    case ClaimKind::SupAbs:
      return t.lo > c.target || t.hi < -c.target;
    case ClaimKind::LowerPos:
      if (c.target > 0) return t.hi < c.target;
      return t.hi < 0 || (t.width() == 0 && t.hi <= 0);
    case ClaimKind::UpperNeg:
      if (c.target > 0) return t.lo > -c.target;
      return t.lo > 0 || (t.width() == 0 && t.lo >= 0);
    case ClaimKind::HullIn:
      return t.lo > c.bracket.hi || t.hi < c.bracket.lo;
  }
  return false;
}

struct WorstPick {
  bool valid = false;
  bool from_exhausted = false;  // exhausted leaves dominate certified ones
  bool infinite = false;        // indeterminate enclosure
  Rat score;
  Interval box;
};

// Deterministic preference order for the reported worst leaf.
WorstPick pick_worse(const WorstPick& a, const WorstPick& b) {
  if (!a.valid) return b;
  if (!b.valid) return a;
  if (a.from_exhausted != b.from_exhausted)
    return a.from_exhausted ? a : b;
  if (a.infinite != b.infinite) return a.infinite ? a : b;
  if (a.score != b.score) return a.score > b.score ? a : b;
  return a.box.lo <= b.box.lo ? a : b;
}

struct Outcome {
  CertStatus status = CertStatus::Certified;
  long boxes = 0;
  int depth = 0;
  std::optional<Interval> hull;     // union over certified leaves
  std::optional<Interval> witness;  // first refuting box in tree order
  WorstPick worst;
  std::uint64_t trace = 0;
};

std::uint64_t le_bytes(std::uint64_t seed, std::uint64_t v) {
  std::string b(8, '\0');
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  return fnv1a(seed, b);
}

std::uint64_t node_digest(const Interval& box, int depth, char tag) {
  std::uint64_t h = fnv1a(0xcbf29ce484222325ULL, std::string(1, tag));
  h = le_bytes(h, static_cast<std::uint64_t>(depth));
  h = rat_digest(h, box.lo);
  h = rat_digest(h, box.hi);
  return h;
}

void merge_hull(std::optional<Interval>& into, const std::optional<Interval>& from) {
  if (!from) return;
  into = into ? iv_hull(*into, *from) : *from;
}

Outcome run(const Claim& c, const Interval& box, int depth, long budget,
            int fork_levels) {
  Outcome out;
  out.boxes = 1;
  out.depth = depth;

  std::optional<Interval> hull = expr_eval(c.expr, box, c.prec);

  if (hull && leaf_passes(c, *hull)) {
    out.status = CertStatus::Certified;
    out.hull = hull;
    out.worst = WorstPick{true, false, false, badness(c, *hull), box};
    out.trace = node_digest(box, depth, 'C');
    return out;
  }

  std::optional<Interval> at_mid = expr_eval(c.expr, Interval(box.mid()), c.prec);
  if (at_mid && point_refutes(c, *at_mid)) {
    out.status = CertStatus::Failed;
    out.witness = box;
    out.worst = WorstPick{true, false, false,
                          hull ? badness(c, *hull) : Rat(0), box};
    out.worst.infinite = !hull;
    out.trace = node_digest(box, depth, 'F');
    return out;
  }

  const bool can_split =
      box.width() > 0 && depth < c.max_depth && budget >= 3;
  if (!can_split) {
    out.status = CertStatus::BudgetExhausted;
    out.worst = WorstPick{true, true, !hull,
                          hull ? badness(c, *hull) : Rat(0), box};
    out.trace = node_digest(box, depth, 'X');
    return out;
  }

  const Rat mid = box.mid();
  const long rest = budget - 1;
  const long lbud = (rest + 1) / 2;
  const long rbud = rest - lbud;
  const Interval lbox(box.lo, mid), rbox(mid, box.hi);

  Outcome l, r;
  if (depth < fork_levels) {
    auto rf = std::async(std::launch::async, [&] {
      return run(c, rbox, depth + 1, rbud, fork_levels);
    });
    l = run(c, lbox, depth + 1, lbud, fork_levels);
    r = rf.get();
  } else {
    l = run(c, lbox, depth + 1, lbud, fork_levels);
    r = run(c, rbox, depth + 1, rbud, fork_levels);
  }

  out.boxes += l.boxes + r.boxes;
  out.depth = std::max(l.depth, r.depth);
  if (l.status == CertStatus::Failed || r.status == CertStatus::Failed)
    out.status = CertStatus::Failed;
  else if (l.status == CertStatus::BudgetExhausted ||
           r.status == CertStatus::BudgetExhausted)
    out.status = CertStatus::BudgetExhausted;
  else
    out.status = CertStatus::Certified;
  merge_hull(out.hull, l.hull);
  merge_hull(out.hull, r.hull);
  out.witness = l.witness ? l.witness : r.witness;
  out.worst = pick_worse(l.worst, r.worst);
  out.trace = node_digest(box, depth, hull ? 'S' : 'I');
  out.trace = le_bytes(out.trace, l.trace);
  out.trace = le_bytes(out.trace, r.trace);
  return out;
}

}  // namespace

const char* status_name(CertStatus s) {
  switch (s) {
    case CertStatus::Certified:
      return "certified";
    case CertStatus::Failed:
      return "failed";
    case CertStatus::BudgetExhausted:
      return "budget-exhausted";
  }
  return "unknown";
}

Certificate certify(const Claim& claim) {
  int threads = 1;
  if (const char* env = std::getenv("CERTIFY_THREADS")) {
    threads = std::atoi(env);
    if (threads < 1) threads = 1;
    if (threads > 64) threads = 64;
  }
  int fork_levels = 0;
  while ((1 << fork_levels) < threads) ++fork_levels;

  auto t0 = std::chrono::steady_clock::now();
  Outcome o = run(claim, claim.domain, 0, claim.max_boxes, fork_levels);
  auto t1 = std::chrono::steady_clock::now();

  Certificate cert;
  cert.claim = claim;
  cert.status = o.status;
  cert.stats.boxes = o.boxes;
  cert.stats.depth = o.depth;
  cert.stats.hull = o.hull;
  if (o.status == CertStatus::Failed)
    cert.stats.worst_box = o.witness;
  else if (o.worst.valid)
    cert.stats.worst_box = o.worst.box;
  cert.stats.trace = o.trace;
  cert.stats.wall_seconds =
      std::chrono::duration<double>(t1 - t0).count();
  return cert;
}

}  // namespace sscert
