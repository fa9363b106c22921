// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#include "xop/weight.hpp"

#include <cmath>
#include <stdexcept>

#include "xop/roots.hpp"
#include "xop/wronskian.hpp"

namespace xop {

WeightSpec WeightSpec::classical_hermite()
{
  WeightSpec w;
  w.family = Family::hermite;
  w.p = RationalFunction::constant(1);
  w.q = Rational(-2) * RationalFunction::x();
  return w;
}

WeightSpec WeightSpec::classical_laguerre(const Rational& alpha)
{
  if (alpha <= -1) throw std::out_of_range("WeightSpec: alpha must exceed -1");
  WeightSpec w;
  w.family = Family::laguerre;
  w.alpha = alpha;
  w.p_factor = ExactPoly::x();
  w.p = RationalFunction::x();
  w.q = RationalFunction::constant(alpha + 1) - RationalFunction::x();
  w.domain_lo = 0;
  return w;
}

WeightSpec WeightSpec::classical_jacobi(const Rational& alpha, const Rational& beta)
{
  if (alpha <= -1 || beta <= -1)
    throw std::out_of_range("WeightSpec: alpha, beta must exceed -1");
  WeightSpec w;
  w.family = Family::jacobi;
  w.alpha = alpha;
  w.beta = beta;
  ExactPoly x = ExactPoly::x();
  w.p_factor = ExactPoly::constant(1) - x * x;
  w.p = RationalFunction(w.p_factor);
  w.q = RationalFunction::constant(beta - alpha) - (alpha + beta + 2) * RationalFunction::x();
  w.domain_lo = -1;
  w.domain_hi = 1;
  return w;
}

WeightSpec WeightSpec::exceptional_hermite(const Partition& lambda)
{
  WeightSpec w;
  w.family = Family::hermite;
  w.is_exceptional = true;
  w.eta = eta_hermite(lambda);
  if (w.eta.degree() > 0) {
    // Double partitions guarantee eta has no real zeros; verify numerically.
    auto zs = classify_zeros(find_roots<double>(w.eta));
    if (zs.n_real() > 0)
      throw std::domain_error("WeightSpec: eta has real zeros; weight ill-posed");
  }
  ExactPoly x = ExactPoly::x();
  w.p = RationalFunction::constant(1);
  w.q = RationalFunction(Rational(-2) * (x * w.eta + w.eta.derivative()), w.eta);
  return w;
}

std::vector<double> domain_grid(const WeightSpec& w, int count)
{
  if (count < 2) throw std::invalid_argument("domain_grid: need at least 2 points");
  double lo = w.domain_lo, hi = w.domain_hi;
  switch (w.family) {
    case Family::hermite:
      lo = -6.0;
      hi = 6.0;
      break;
    case Family::laguerre:
      lo = 0.05;
      hi = 30.0;
      break;
    case Family::jacobi:
      lo = -0.99;
      hi = 0.99;
      break;
  }
  std::vector<double> g(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    g[static_cast<size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  return g;
}

double pearson_residual(const WeightSpec& w, int grid_points)
{
  double worst = 0;
  for (double x : domain_grid(w, grid_points)) {
    Complex<double> z(x);
    Complex<double> lhs = w.p.eval(z) * w.dlog_weight(z);
    Complex<double> qv = w.q.eval(z);
    double r = abs(lhs - qv) / std::max(1.0, abs(qv));
    worst = std::max(worst, r);
  }
  return worst;
}

}  // namespace xop
