#include "sscert/tower.hpp"

#include <cstdlib>
#include <iostream>

namespace sscert {

QuadTower::QuadTower(FactoredRatFn d) : d_(std::move(d)) {
  if (d_.is_zero()) {
    std::cerr << "sscert: quadratic tower over r^2 = 0\n";
    std::abort();
  }
  dlog_ = d_.derivative() / d_ * Rat(1, 2);
}

QuadTower::Elem QuadTower::add(const Elem& x, const Elem& y) const {
  return {x.a + y.a, x.b + y.b};
}

QuadTower::Elem QuadTower::sub(const Elem& x, const Elem& y) const {
  return {x.a - y.a, x.b - y.b};
}

QuadTower::Elem QuadTower::neg(const Elem& x) const { return {-x.a, -x.b}; }

QuadTower::Elem QuadTower::mul(const Elem& x, const Elem& y) const {
  return {x.a * y.a + x.b * y.b * d_, x.a * y.b + x.b * y.a};
}

QuadTower::Elem QuadTower::div(const Elem& x, const Elem& y) const {
  // (x.a + x.b r)(y.a - y.b r) / (y.a^2 - y.b^2 d)
  FactoredRatFn norm = y.a * y.a - y.b * y.b * d_;
  if (norm.is_zero()) {
    std::cerr << "sscert: tower division by zero-norm element\n";
    std::abort();
  }
  Elem prod = mul(x, Elem{y.a, -y.b});
  return {prod.a / norm, prod.b / norm};
}

QuadTower::Elem QuadTower::scale(const Elem& x, const Rat& s) const {
  return {x.a * s, x.b * s};
}

QuadTower::Elem QuadTower::derivative(const Elem& x) const {
  return {x.a.derivative(), x.b.derivative() + x.b * dlog_};
}

FactoredRatFn QuadTower::extract_rational(const Elem& x) const {
  if (!x.b.is_zero()) {
    std::cerr << "sscert: radical part survived rational extraction\n";
    std::abort();
  }
  return x.a;
}

FactoredRatFn QuadTower::extract_radical_coeff(const Elem& x) const {
  if (!x.a.is_zero()) {
    std::cerr << "sscert: rational part survived radical extraction\n";
    std::abort();
  }
  return x.b;
}

}  // namespace sscert
