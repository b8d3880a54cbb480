#pragma once
// Quadratic extension of the rational-function field: elements a + b*r where
// r^2 = d for a fixed rational function d.  Lets square roots that appear in
// the approximant algebra be carried exactly; a construction is finished by
// extracting the purely rational part, which fails loudly if any radical
// survives.

#include "sscert/factored.hpp"

namespace sscert {

class QuadTower {
 public:
  // Adjoin r with r^2 = d.
  explicit QuadTower(FactoredRatFn d);

  struct Elem {
    FactoredRatFn a, b;  // value a + b r
  };

  const FactoredRatFn& d() const { return d_; }

  Elem from_ratfn(FactoredRatFn f) const { return {std::move(f), {}}; }
  Elem constant(const Rat& c) const {
    return {FactoredRatFn::constant(c), {}};
  }
  // r itself.
  Elem radical() const {
    return {{}, FactoredRatFn::constant(Rat(1))};
  }

  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem div(const Elem& x, const Elem& y) const;
  Elem scale(const Elem& x, const Rat& s) const;

  // d/dx using r' = d' r / (2 d).
  Elem derivative(const Elem& x) const;

  // Asserts the radical part vanishes identically and returns the rational
  // part; aborts otherwise.
  FactoredRatFn extract_rational(const Elem& x) const;
  // Asserts the rational part vanishes identically and returns the radical
  // coefficient; aborts otherwise.
  FactoredRatFn extract_radical_coeff(const Elem& x) const;

 private:
  FactoredRatFn d_;
  FactoredRatFn dlog_;  // d' / (2 d)
};

}  // namespace sscert
