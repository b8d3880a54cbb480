#include "sscert/expr.hpp"

#include <cstdlib>
#include <iostream>
#include <stdexcept>

namespace sscert {

namespace {

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

Rat parse_or_throw(const std::string& text, const char* what) {
  auto v = rat_parse(text);
  if (!v) throw std::runtime_error(std::string("bad rational in ") + what +
                                   ": '" + text + "'");
  return *v;
}

}  // namespace

ExprPtr e_const(Rat v) {
  Expr e;
  e.op = Op::Const;
  e.value = std::move(v);
  return make(std::move(e));
}

ExprPtr e_const(const std::string& text) { return e_const(rat(text)); }

ExprPtr e_var() {
  Expr e;
  e.op = Op::Var;
  return make(std::move(e));
}

namespace {
ExprPtr binary(Op op, ExprPtr a, ExprPtr b) {
  Expr e;
  e.op = op;
  e.kids = {std::move(a), std::move(b)};
  return make(std::move(e));
}
ExprPtr unary(Op op, ExprPtr a) {
  Expr e;
  e.op = op;
  e.kids = {std::move(a)};
  return make(std::move(e));
}
}  // namespace

ExprPtr e_add(ExprPtr a, ExprPtr b) {
  return binary(Op::Add, std::move(a), std::move(b));
}
ExprPtr e_sub(ExprPtr a, ExprPtr b) {
  return binary(Op::Sub, std::move(a), std::move(b));
}
ExprPtr e_mul(ExprPtr a, ExprPtr b) {
  return binary(Op::Mul, std::move(a), std::move(b));
}
ExprPtr e_div(ExprPtr a, ExprPtr b) {
  return binary(Op::Div, std::move(a), std::move(b));
}
ExprPtr e_neg(ExprPtr a) { return unary(Op::Neg, std::move(a)); }

ExprPtr e_powint(ExprPtr a, long n) {
  if (n < 0) {
    std::cerr << "sscert: negative integer power; use an explicit division\n";
    std::abort();
  }
  Expr e;
  e.op = Op::PowInt;
  e.ipow = n;
  e.kids = {std::move(a)};
  return make(std::move(e));
}

ExprPtr e_sqrt(ExprPtr a) { return unary(Op::Sqrt, std::move(a)); }
ExprPtr e_exp(ExprPtr a) { return unary(Op::Exp, std::move(a)); }

ExprPtr e_atom(std::string name, Interval range) {
  Expr e;
  e.op = Op::Atom;
  e.atom_name = std::move(name);
  e.atom_range = std::move(range);
  return make(std::move(e));
}

ExprPtr e_ratf(FactoredRatFn f) {
  Expr e;
  e.op = Op::Ratf;
  e.rf = std::move(f);
  return make(std::move(e));
}

std::optional<Interval> expr_eval(const ExprPtr& e, const Interval& x,
                                  const EncPrec& prec) {
  auto round = [&](Interval v) { return iv_round_out(v, prec.out_bits); };
  switch (e->op) {
    case Op::Const:
      return Interval(e->value);
    case Op::Var:
      return x;
    case Op::Atom:
      return e->atom_range;
    case Op::Ratf: {
      auto v = e->rf.eval(x);
      if (!v) return std::nullopt;
      return round(*v);
    }
    case Op::Neg: {
      auto a = expr_eval(e->kids[0], x, prec);
      if (!a) return std::nullopt;
      return -*a;
    }
    case Op::PowInt: {
      auto a = expr_eval(e->kids[0], x, prec);
      if (!a) return std::nullopt;
      return round(iv_pow(*a, e->ipow));
    }
    case Op::Sqrt: {
      auto a = expr_eval(e->kids[0], x, prec);
      if (!a) return std::nullopt;
      auto s = iv_sqrt(*a, prec);
      if (!s) return std::nullopt;
      return round(*s);
    }
    case Op::Exp: {
      auto a = expr_eval(e->kids[0], x, prec);
      if (!a) return std::nullopt;
      return round(iv_exp(*a, prec));
    }
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: {
      auto a = expr_eval(e->kids[0], x, prec);
      if (!a) return std::nullopt;
      auto b = expr_eval(e->kids[1], x, prec);
      if (!b) return std::nullopt;
      switch (e->op) {
        case Op::Add:
          return round(*a + *b);
        case Op::Sub:
          return round(*a - *b);
        case Op::Mul:
          return round(*a * *b);
        default: {
          auto q = iv_div(*a, *b);
          if (!q) return std::nullopt;
          return round(*q);
        }
      }
    }
  }
  return std::nullopt;  // unreachable
}

namespace {

const char* op_name(Op op) {
  switch (op) {
    case Op::Const:
      return "const";
    case Op::Var:
      return "var";
    case Op::Add:
      return "add";
    case Op::Sub:
      return "sub";
    case Op::Mul:
      return "mul";
    case Op::Div:
      return "div";
    case Op::Neg:
      return "neg";
    case Op::PowInt:
      return "pow";
    case Op::Sqrt:
      return "sqrt";
    case Op::Exp:
      return "exp";
    case Op::Atom:
      return "atom";
    case Op::Ratf:
      return "ratf";
  }
  return "?";
}

}  // namespace

std::uint64_t expr_digest(const ExprPtr& e, std::uint64_t seed) {
  seed = fnv1a(seed, op_name(e->op));
  switch (e->op) {
    case Op::Const:
      seed = rat_digest(seed, e->value);
      break;
    case Op::PowInt:
      seed = fnv1a(seed, std::to_string(e->ipow));
      break;
    case Op::Atom:
      seed = fnv1a(seed, e->atom_name);
      seed = rat_digest(seed, e->atom_range.lo);
      seed = rat_digest(seed, e->atom_range.hi);
      break;
    case Op::Ratf:
      seed = e->rf.digest(seed);
      break;
    default:
      break;
  }
  for (const auto& k : e->kids) seed = expr_digest(k, seed);
  return seed;
}

nlohmann::ordered_json expr_to_json(const ExprPtr& e) {
  nlohmann::ordered_json j;
  j["op"] = op_name(e->op);
  switch (e->op) {
    case Op::Const:
      j["value"] = rat_str(e->value);
      break;
    case Op::PowInt:
      j["n"] = e->ipow;
      break;
    case Op::Atom:
      j["name"] = e->atom_name;
      j["lo"] = rat_str(e->atom_range.lo);
      j["hi"] = rat_str(e->atom_range.hi);
      break;
    case Op::Ratf: {
      nlohmann::ordered_json num = nlohmann::ordered_json::array();
      for (const auto& c : e->rf.num().coeffs()) num.push_back(rat_str(c));
      j["num"] = std::move(num);
      nlohmann::ordered_json den = nlohmann::ordered_json::array();
      for (const auto& [f, exp] : e->rf.den()) {
        nlohmann::ordered_json fac;
        fac["exp"] = exp;
        nlohmann::ordered_json fc = nlohmann::ordered_json::array();
        for (const auto& c : f.coeffs()) fc.push_back(rat_str(c));
        fac["factor"] = std::move(fc);
        den.push_back(std::move(fac));
      }
      j["den"] = std::move(den);
      break;
    }
    default:
      break;
  }
  if (!e->kids.empty()) {
    nlohmann::ordered_json kids = nlohmann::ordered_json::array();
    for (const auto& k : e->kids) kids.push_back(expr_to_json(k));
    j["args"] = std::move(kids);
  }
  return j;
}

namespace {

std::vector<Rat> parse_coeff_list(const nlohmann::ordered_json& j,
                                  const char* what) {
  if (!j.is_array())
    throw std::runtime_error(std::string(what) + " must be an array");
  std::vector<Rat> out;
  for (const auto& c : j)
    out.push_back(parse_or_throw(c.get<std::string>(), what));
  return out;
}

}  // namespace

ExprPtr expr_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("op"))
    throw std::runtime_error("expression node must be an object with 'op'");
  std::string op = j.at("op").get<std::string>();
  auto kids = [&]() {
    std::vector<ExprPtr> out;
    if (j.contains("args"))
      for (const auto& a : j.at("args")) out.push_back(expr_from_json(a));
    return out;
  };
  auto need_kids = [&](std::size_t n) {
    auto k = kids();
    if (k.size() != n)
      throw std::runtime_error("operator '" + op + "' needs " +
                               std::to_string(n) + " argument(s)");
    return k;
  };
  if (op == "const")
    return e_const(parse_or_throw(j.at("value").get<std::string>(), "const"));
  if (op == "var") return e_var();
  if (op == "add") {
    auto k = need_kids(2);
    return e_add(k[0], k[1]);
  }
  if (op == "sub") {
    auto k = need_kids(2);
    return e_sub(k[0], k[1]);
  }
  if (op == "mul") {
    auto k = need_kids(2);
    return e_mul(k[0], k[1]);
  }
  if (op == "div") {
    auto k = need_kids(2);
    return e_div(k[0], k[1]);
  }
  if (op == "neg") return e_neg(need_kids(1)[0]);
  if (op == "pow") {
    long n = j.at("n").get<long>();
    if (n < 0) throw std::runtime_error("pow exponent must be >= 0");
    return e_powint(need_kids(1)[0], n);
  }
  if (op == "sqrt") return e_sqrt(need_kids(1)[0]);
  if (op == "exp") return e_exp(need_kids(1)[0]);
  if (op == "atom") {
    Rat lo = parse_or_throw(j.at("lo").get<std::string>(), "atom lo");
    Rat hi = parse_or_throw(j.at("hi").get<std::string>(), "atom hi");
    if (lo > hi) throw std::runtime_error("atom bracket has lo > hi");
    return e_atom(j.at("name").get<std::string>(), Interval(lo, hi));
  }
  if (op == "ratf") {
    FactoredRatFn f(Poly(parse_coeff_list(j.at("num"), "ratf num")));
    if (j.contains("den")) {
      for (const auto& fac : j.at("den")) {
        int exp = fac.at("exp").get<int>();
        if (exp <= 0) throw std::runtime_error("ratf factor exponent must be > 0");
        Poly fp(parse_coeff_list(fac.at("factor"), "ratf factor"));
        if (fp.is_zero()) throw std::runtime_error("ratf factor is zero");
        f.push_den_factor(std::move(fp), exp);
      }
    }
    return e_ratf(std::move(f));
  }
  throw std::runtime_error("unknown operator '" + op + "'");
}

}  // namespace sscert
