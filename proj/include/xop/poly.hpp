// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xop/numeric.hpp"

namespace xop {

/// Univariate polynomial with exact rational coefficients, lowest degree first.
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector with degree() == -1.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static ExactPoly constant(Rational c);
  static ExactPoly x();
  static ExactPoly monomial(int k, Rational c = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const Rational& coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;

  ExactPoly derivative(int order = 1) const;
  ExactPoly monic() const;

  template <class T>
  T eval(const T& x) const
  {
    T acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + scalar_of<T>(*it);
    return acc;
  }

  Rational eval_rational(const Rational& x) const;

  friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator*(const Rational& s, const ExactPoly& a);
  friend ExactPoly operator-(const ExactPoly& a) { return Rational(-1) * a; }
  friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder of exact polynomial long division.
  static std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly& a, const ExactPoly& b);

  /// Division known to be exact; throws std::logic_error on nonzero remainder.
  static ExactPoly exact_div(const ExactPoly& a, const ExactPoly& b);

  /// Monic gcd; gcd(0, p) is the monic scaling of p, gcd(0, 0) = 0.
  static ExactPoly gcd(const ExactPoly& a, const ExactPoly& b);

  std::string str(const std::string& var = "x") const;

 private:
  template <class T>
  static T scalar_of(const Rational& q)
  {
    if constexpr (std::is_same_v<T, Rational>) return q;
    else if constexpr (std::is_same_v<T, Complex<double>> || std::is_same_v<T, Complex<Float256>>)
      return T(to_real<decltype(T{}.re)>(q));
    else return to_real<T>(q);
  }

  void trim();

  std::vector<Rational> c_;
};

}  // namespace xop
