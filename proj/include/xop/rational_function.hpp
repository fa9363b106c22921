// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "xop/poly.hpp"

namespace xop {

/// Ratio of exact polynomials kept in reduced form with monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(ExactPoly::constant(1)) {}
  RationalFunction(ExactPoly num, ExactPoly den);
  RationalFunction(const ExactPoly& p) : RationalFunction(p, ExactPoly::constant(1)) {}

  static RationalFunction constant(const Rational& c) { return {ExactPoly::constant(c)}; }
  static RationalFunction x() { return {ExactPoly::x()}; }

  const ExactPoly& num() const { return num_; }
  const ExactPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// deg(num) - deg(den); INT_MIN-free convention: the zero function reports -1 - 0.
  int degree() const { return num_.degree() - den_.degree(); }

  RationalFunction derivative() const;

  template <class T>
  T eval(const T& x) const
  {
    return num_.eval(x) / den_.eval(x);
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const Rational& s, const RationalFunction& a);
  friend RationalFunction operator-(const RationalFunction& a) { return Rational(-1) * a; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b)
  {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str(const std::string& var = "x") const;

 private:
  void reduce();

  ExactPoly num_;
  ExactPoly den_;
};

}  // namespace xop
