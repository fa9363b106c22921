// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#include "xop/rational_function.hpp"

#include <stdexcept>

namespace xop {

RationalFunction::RationalFunction(ExactPoly num, ExactPoly den)
    : num_(std::move(num)), den_(std::move(den))
{
  if (den_.is_zero())
    throw std::invalid_argument("RationalFunction: denominator identically zero");
  reduce();
}

void RationalFunction::reduce()
{
  if (num_.is_zero()) {
    den_ = ExactPoly::constant(1);
    return;
  }
  ExactPoly g = ExactPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = ExactPoly::exact_div(num_, g);
    den_ = ExactPoly::exact_div(den_, g);
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

RationalFunction RationalFunction::derivative() const
{
  // (n/d)' = (n'd - nd') / d^2, reduced on construction
  return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
{
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
{
  if (b.is_zero()) throw std::invalid_argument("RationalFunction: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction operator*(const Rational& s, const RationalFunction& a)
{
  return {s * a.num_, a.den_};
}

std::string RationalFunction::str(const std::string& var) const
{
  if (is_polynomial()) {
    Rational d = den_.leading();
    return d == 1 ? num_.str(var) : "(" + num_.str(var) + ")/" + d.str();
  }
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace xop
