// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#include "xop/stieltjes.hpp"

#include <stdexcept>

#include "xop/wronskian.hpp"

namespace xop {

namespace {

Rational binom(int n, int k)
{
  Rational r(1);
  for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
  return r;
}

Rational factorial(int n)
{
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

OdeCoefficients::OdeCoefficients(RationalFunction p_, RationalFunction q_, RationalFunction c_)
    : p(std::move(p_)), q(std::move(q_)), c(std::move(c_))
{
  if (p.is_zero()) throw std::invalid_argument("OdeCoefficients: p identically zero");
  if (p.degree() > 2 || (!q.is_zero() && q.degree() > 1) || (!c.is_zero() && c.degree() > 0))
    throw std::invalid_argument("OdeCoefficients: degree bounds deg p<=2, deg q<=1, deg c<=0 violated");
}

OdeCoefficients OdeCoefficients::classical(Family family, int n, const Rational& alpha,
                                           const Rational& beta)
{
  const RationalFunction x = RationalFunction::x();
  switch (family) {
    case Family::hermite:
      return {RationalFunction::constant(1), Rational(-2) * x,
              RationalFunction::constant(2 * n)};
    case Family::laguerre:
      if (alpha <= -1) throw std::out_of_range("OdeCoefficients: alpha must exceed -1");
      return {x, RationalFunction::constant(alpha + 1) - x, RationalFunction::constant(n)};
    case Family::jacobi: {
      if (alpha <= -1 || beta <= -1)
        throw std::out_of_range("OdeCoefficients: alpha, beta must exceed -1");
      RationalFunction p = RationalFunction::constant(1) - x * x;
      RationalFunction q = RationalFunction::constant(beta - alpha) - (alpha + beta + 2) * x;
      Rational lam = Rational(n) * (Rational(n) + alpha + beta + 1);
      return {std::move(p), std::move(q), RationalFunction::constant(lam)};
    }
  }
  throw std::logic_error("OdeCoefficients: bad family");
}

OdeCoefficients OdeCoefficients::exceptional_hermite_ode(const Partition& lambda, int n)
{
  ExactPoly eta = eta_hermite(lambda);
  ExactPoly y = exceptional_hermite(lambda, n);
  Rational cc = fit_ode_constant(y, eta);
  ExactPoly x = ExactPoly::x();
  RationalFunction p = RationalFunction::constant(1);
  RationalFunction q{Rational(-2) * (x * eta + eta.derivative()), eta};
  RationalFunction c{eta.derivative(2) + Rational(2) * (x * eta.derivative()) + cc * eta, eta};
  return {std::move(p), std::move(q), std::move(c)};
}

StieltjesPredictor::StieltjesPredictor(OdeCoefficients ode, int max_order) : ode_(std::move(ode))
{
  if (max_order < 1) throw std::invalid_argument("StieltjesPredictor: order must be positive");

  // Clear denominators: P y'' + Q y' + C y = 0 with polynomial coefficients.
  ExactPoly d = ode_.p.den();
  for (const ExactPoly& e : {ode_.q.den(), ode_.c.den()}) {
    ExactPoly g = ExactPoly::gcd(d, e);
    d = d * ExactPoly::exact_div(e, g);
  }
  ExactPoly P = ode_.p.num() * ExactPoly::exact_div(d, ode_.p.den());
  ExactPoly Q = ode_.q.num() * ExactPoly::exact_div(d, ode_.q.den());
  ExactPoly C = ode_.c.num() * ExactPoly::exact_div(d, ode_.c.den());

  const int kmax = max_order + 1;  // need rho up to kmax

  // Precompute coefficient derivatives up to order kmax-2.
  std::vector<ExactPoly> Pd{P}, Qd{Q}, Cd{C};
  for (int i = 1; i <= kmax; ++i) {
    Pd.push_back(Pd.back().derivative());
    Qd.push_back(Qd.back().derivative());
    Cd.push_back(Cd.back().derivative());
  }

  // rho_k = y^(k)(x_j) / y'(x_j) at a generic simple zero x_j, from the
  // (k-2)-th derivative of the ODE with y(x_j) = 0.
  std::vector<RationalFunction> rho(static_cast<size_t>(kmax) + 1);
  rho[0] = RationalFunction{};
  rho[1] = RationalFunction::constant(1);
  RationalFunction Prf{P};
  for (int k = 2; k <= kmax; ++k) {
    const int dord = k - 2;
    RationalFunction acc{};
    for (int i = 0; i <= dord; ++i) {
      Rational b = binom(dord, i);
      auto add = [&](const ExactPoly& coeff, int idx) {
        if (idx >= 1 && idx < k && !coeff.is_zero() && !rho[static_cast<size_t>(idx)].is_zero())
          acc = acc + b * (RationalFunction{coeff} * rho[static_cast<size_t>(idx)]);
      };
      if (i > 0) add(Pd[static_cast<size_t>(i)], k - i);
      add(Qd[static_cast<size_t>(i)], k - 1 - i);
      add(Cd[static_cast<size_t>(i)], k - 2 - i);
    }
    rho[static_cast<size_t>(k)] = -acc / Prf;
  }

  // Taylor coefficients of the deflated factor y_j around x_j (b_0 = 1),
  // then the series of y_j'/y_j; S_m = (-1)^(m-1) * coefficient m-1.
  std::vector<RationalFunction> b(static_cast<size_t>(max_order) + 1);
  for (int k = 0; k <= max_order; ++k)
    b[static_cast<size_t>(k)] =
        (Rational(1) / factorial(k + 1)) * rho[static_cast<size_t>(k) + 1];

  std::vector<RationalFunction> inv(b.size());
  inv[0] = RationalFunction::constant(1);
  for (size_t k = 1; k < b.size(); ++k) {
    RationalFunction acc{};
    for (size_t j = 1; j <= k; ++j) acc = acc + b[j] * inv[k - j];
    inv[k] = -acc;
  }

  s_.resize(static_cast<size_t>(max_order));
  for (int m = 1; m <= max_order; ++m) {
    const int k = m - 1;
    RationalFunction u{};
    for (int j = 0; j <= k; ++j)
      u = u + Rational(j + 1) * (b[static_cast<size_t>(j) + 1] * inv[static_cast<size_t>(k - j)]);
    s_[static_cast<size_t>(m) - 1] = (m % 2 == 1) ? u : -u;
  }
}

const RationalFunction& StieltjesPredictor::closed_form(int m) const
{
  if (m < 1 || m > max_order())
    throw std::invalid_argument("StieltjesPredictor: order out of range");
  return s_[static_cast<size_t>(m) - 1];
}

}  // namespace xop
