#pragma once
// Expression trees in one chart variable.  Leaves are exact rationals, the
// chart variable, factored rational functions, or named interval atoms
// (unknown-but-bracketed quantities); interior nodes are ring operations,
// integer powers, sqrt, and exp.  Interval evaluation returns nullopt when
// any subresult is indeterminate (division through zero, sqrt reaching below
// zero), and rounds every composite node outward to dyadic endpoints so
// endpoint sizes stay bounded through deep trees.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sscert/enclosures.hpp"
#include "sscert/factored.hpp"
#include "sscert/interval.hpp"

namespace sscert {

enum class Op {
  Const,
  Var,
  Add,
  Sub,
  Mul,
  Div,
  Neg,
  PowInt,
  Sqrt,
  Exp,
  Atom,
  Ratf
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  Op op{};
  Rat value;              // Const
  long ipow = 0;          // PowInt exponent, >= 0
  std::string atom_name;  // Atom
  Interval atom_range;    // Atom bracket (fixed, box-independent)
  FactoredRatFn rf;       // Ratf
  std::vector<ExprPtr> kids;
};

ExprPtr e_const(Rat v);
ExprPtr e_const(const std::string& text);
ExprPtr e_var();
ExprPtr e_add(ExprPtr a, ExprPtr b);
ExprPtr e_sub(ExprPtr a, ExprPtr b);
ExprPtr e_mul(ExprPtr a, ExprPtr b);
ExprPtr e_div(ExprPtr a, ExprPtr b);
ExprPtr e_neg(ExprPtr a);
ExprPtr e_powint(ExprPtr a, long n);
ExprPtr e_sqrt(ExprPtr a);
ExprPtr e_exp(ExprPtr a);
ExprPtr e_atom(std::string name, Interval range);
ExprPtr e_ratf(FactoredRatFn f);

// Enclosure of the expression over the box x; nullopt = indeterminate.
std::optional<Interval> expr_eval(const ExprPtr& e, const Interval& x,
                                  const EncPrec& prec = {});

// Structural digest (operator tags + exact payloads), for trace digests.
std::uint64_t expr_digest(const ExprPtr& e, std::uint64_t seed);

// Canonical JSON form; parse throws std::runtime_error on malformed input.
nlohmann::ordered_json expr_to_json(const ExprPtr& e);
ExprPtr expr_from_json(const nlohmann::ordered_json& j);

}  // namespace sscert
