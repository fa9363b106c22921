// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <vector>

#include "xop/classical.hpp"
#include "xop/partition.hpp"
#include "xop/rational_function.hpp"

namespace xop {

/// Weight-family descriptor. The full weight is
///   omega(x) = base_family_weight(x) / eta(x)^2 * p_factor(x),
/// where the base is e^{-x^2}, x^alpha e^{-x} or (1-x)^alpha (1+x)^beta and
/// p_factor is the leading ODE coefficient polynomial (the p of
/// p y'' + q y' + c y = 0). For classical families eta = 1; for exceptional
/// Hermite eta is the Wronskian denominator and p_factor = 1.
struct WeightSpec {
  Family family = Family::hermite;
  bool is_exceptional = false;
  Rational alpha = 0;
  Rational beta = 0;
  ExactPoly eta = ExactPoly::constant(1);
  ExactPoly p_factor = ExactPoly::constant(1);
  RationalFunction p;  // ODE coefficients; omega'/omega = q/p (Pearson)
  RationalFunction q;
  double domain_lo = -std::numeric_limits<double>::infinity();
  double domain_hi = std::numeric_limits<double>::infinity();

  static WeightSpec classical_hermite();
  static WeightSpec classical_laguerre(const Rational& alpha);
  static WeightSpec classical_jacobi(const Rational& alpha, const Rational& beta);
  /// omega = e^{-x^2} / eta_H^2 with eta_H checked to have no real zeros.
  static WeightSpec exceptional_hermite(const Partition& lambda);

  /// log omega(z), assembled additively with the principal branch on each
  /// factor; the real part equals log|omega(z)| regardless of branch.
  template <class R>
  Complex<R> log_weight(const Complex<R>& z) const
  {
    Complex<R> one(R(1));
    Complex<R> acc{};
    switch (family) {
      case Family::hermite:
        acc = -(z * z);
        break;
      case Family::laguerre:
        acc = to_real<R>(alpha) * log(z) - z;
        break;
      case Family::jacobi:
        acc = to_real<R>(alpha) * log(one - z) + to_real<R>(beta) * log(one + z);
        break;
    }
    if (p_factor.degree() > 0) acc += log(p_factor.eval(z));
    if (eta.degree() > 0) acc -= R(2) * log(eta.eval(z));
    return acc;
  }

  /// omega'(z)/omega(z) = (log omega)'(z).
  template <class R>
  Complex<R> dlog_weight(const Complex<R>& z) const
  {
    Complex<R> one(R(1));
    Complex<R> acc{};
    switch (family) {
      case Family::hermite:
        acc = -(R(2) * z);
        break;
      case Family::laguerre:
        acc = Complex<R>(to_real<R>(alpha)) / z - one;
        break;
      case Family::jacobi:
        acc = -(Complex<R>(to_real<R>(alpha)) / (one - z)) +
              Complex<R>(to_real<R>(beta)) / (one + z);
        break;
    }
    if (p_factor.degree() > 0) acc += p_factor.derivative().eval(z) / p_factor.eval(z);
    if (eta.degree() > 0) acc -= R(2) * (eta.derivative().eval(z) / eta.eval(z));
    return acc;
  }

  /// (omega'/omega)'(z) = (log omega)''(z).
  template <class R>
  Complex<R> ddlog_weight(const Complex<R>& z) const
  {
    Complex<R> one(R(1));
    Complex<R> acc{};
    switch (family) {
      case Family::hermite:
        acc = Complex<R>(R(-2));
        break;
      case Family::laguerre:
        acc = -(Complex<R>(to_real<R>(alpha)) / (z * z));
        break;
      case Family::jacobi: {
        Complex<R> a = one - z, b = one + z;
        acc = -(Complex<R>(to_real<R>(alpha)) / (a * a)) -
              Complex<R>(to_real<R>(beta)) / (b * b);
        break;
      }
    }
    if (p_factor.degree() > 0) acc += dlog_second(p_factor, z);
    if (eta.degree() > 0) acc -= R(2) * dlog_second(eta, z);
    return acc;
  }

  /// (log g)''(z) = (g'' g - g'^2) / g^2 for a polynomial g.
  template <class R>
  static Complex<R> dlog_second(const ExactPoly& g, const Complex<R>& z)
  {
    Complex<R> gv = g.eval(z);
    Complex<R> gp = g.derivative().eval(z);
    Complex<R> gpp = g.derivative(2).eval(z);
    return (gpp * gv - gp * gp) / (gv * gv);
  }
};

/// Evenly spaced evaluation grid inside the domain; unbounded ends are
/// truncated at the conventional radii (|x| <= 6 for Hermite, x in
/// [0.05, 30] for Laguerre, |x| <= 0.99 for Jacobi).
std::vector<double> domain_grid(const WeightSpec& w, int count = 101);

/// max over the grid of |p(x) (log omega)'(x) - q(x)| / max(1, |q(x)|);
/// zero exactly when the Pearson equation (p omega_hat)' = q omega_hat holds.
double pearson_residual(const WeightSpec& w, int grid_points = 101);

}  // namespace xop
