// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <vector>

#include "xop/classical.hpp"
#include "xop/partition.hpp"
#include "xop/rational_function.hpp"
#include "xop/roots.hpp"

namespace xop {

/// Coefficients of p y'' + q y' + c y = 0 for a polynomial eigenfunction.
/// c is the combined zeroth-order block (potential term minus eigenvalue);
/// only the combination is ever determined.
struct OdeCoefficients {
  RationalFunction p;
  RationalFunction q;
  RationalFunction c;

  OdeCoefficients(RationalFunction p_, RationalFunction q_, RationalFunction c_);

  static OdeCoefficients classical(Family family, int n, const Rational& alpha = 0,
                                   const Rational& beta = 0);

  /// p = 1, q = -2(x + eta'/eta), c = (eta'' + 2x eta')/eta + C with C fitted
  /// exactly from the constructed polynomial.
  static OdeCoefficients exceptional_hermite_ode(const Partition& lambda, int n);
};

/// S_{m,j} = sum_{k != j} 1/(z_j - z_k)^m over the full zero list.
template <class R>
Complex<R> direct_sum(const std::vector<Complex<R>>& zeros, int m, int j)
{
  if (m < 1) throw std::invalid_argument("direct_sum: m must be positive");
  if (j < 0 || j >= static_cast<int>(zeros.size()))
    throw std::invalid_argument("direct_sum: index out of range");
  Complex<R> s{};
  const Complex<R>& zj = zeros[static_cast<size_t>(j)];
  for (int k = 0; k < static_cast<int>(zeros.size()); ++k) {
    if (k == j) continue;
    Complex<R> d = zj - zeros[static_cast<size_t>(k)];
    if (abs(d) < R(1e-13))
      throw std::domain_error("direct_sum: coincident zeros");
    Complex<R> term = Complex<R>(R(1)) / d;
    Complex<R> acc = term;
    for (int t = 1; t < m; ++t) acc = acc * term;
    s += acc;
  }
  return s;
}

/// Closed forms of the first three relations, evaluated numerically.
template <class R>
Complex<R> predict_S1(const OdeCoefficients& ode, const Complex<R>& x)
{
  Complex<R> p = ode.p.eval(x);
  if (norm(p) == R(0)) throw std::domain_error("predict_S1: p vanishes at x_j");
  return -ode.q.eval(x) / (R(2) * p);
}

template <class R>
Complex<R> predict_S2(const OdeCoefficients& ode, const Complex<R>& x)
{
  Complex<R> p = ode.p.eval(x);
  if (norm(p) == R(0)) throw std::domain_error("predict_S2: p vanishes at x_j");
  Complex<R> s1 = predict_S1(ode, x);
  Complex<R> num = R(2) * (ode.p.derivative().eval(x) + ode.q.eval(x)) * s1 +
                   (ode.q.derivative().eval(x) + ode.c.eval(x));
  return num / (R(3) * p) + s1 * s1;
}

/// Third-order relation. For polynomial coefficients (q'' = c' = 0, the
/// classical families) the last bracket vanishes and this is the familiar
/// closed form; for rational coefficients the derivative terms are required
/// for the relation to hold at the zeros, and with them the exceptional
/// Hermite value comes out as x_j/2.
template <class R>
Complex<R> predict_S3(const OdeCoefficients& ode, const Complex<R>& x)
{
  Complex<R> p = ode.p.eval(x);
  if (norm(p) == R(0)) throw std::domain_error("predict_S3: p vanishes at x_j");
  Complex<R> s1 = predict_S1(ode, x);
  Complex<R> s2 = predict_S2(ode, x);
  Complex<R> pp = ode.p.derivative().eval(x);
  Complex<R> qp = ode.q.derivative().eval(x);
  Complex<R> ppp = ode.p.derivative().derivative().eval(x);
  Complex<R> qpp = ode.q.derivative().derivative().eval(x);
  Complex<R> cp = ode.c.derivative().eval(x);
  Complex<R> brace = R(3) * (R(2) * pp + ode.q.eval(x)) * (s1 * s1 - s2) +
                     R(2) * (ppp + R(2) * qp + ode.c.eval(x)) * s1 +
                     (R(2) * cp + qpp);
  return -brace / (R(8) * p) + (R(3) / R(2)) * s1 * s2 - (R(1) / R(2)) * s1 * s1 * s1;
}

/// Closed-form S_m(x) generated symbolically from the ODE by the Z-recurrence
/// route: Taylor coefficients of the deflated solution at a generic zero are
/// propagated as exact rational functions; only the final evaluation at x_j is
/// numeric. Matches (and extends past) the m = 1,2,3 closed forms.
class StieltjesPredictor {
 public:
  explicit StieltjesPredictor(OdeCoefficients ode, int max_order = 5);

  int max_order() const { return static_cast<int>(s_.size()); }
  const RationalFunction& closed_form(int m) const;

  template <class R>
  Complex<R> predict(int m, const Complex<R>& x) const
  {
    const RationalFunction& s = closed_form(m);
    Complex<R> den = s.den().eval(x);
    if (norm(den) == R(0)) throw std::domain_error("StieltjesPredictor: pole at x_j");
    return s.num().eval(x) / den;
  }

 private:
  OdeCoefficients ode_;
  std::vector<RationalFunction> s_;  // s_[m-1] = S_m(x)
};

template <class R>
Complex<R> z_recurrence_predict(const OdeCoefficients& ode, const Complex<R>& x, int r)
{
  if (r < 1) throw std::invalid_argument("z_recurrence_predict: r must be positive");
  StieltjesPredictor pred(ode, r);
  return pred.predict(r, x);
}

/// |LHS - RHS| of the real-index identity: sum over the m complex zeros
/// (conjugates counted individually, so mu takes both signs) of
/// 1/((x_i - x_{n+t}) + i mu_t) equals its conjugate counterpart.
template <class R>
R corollary_identity_real(const ZeroSet<R>& zs, int real_index)
{
  if (real_index < 0 || real_index >= zs.n_real())
    throw std::invalid_argument("corollary_identity_real: bad real index");
  const R xi = zs.real_zeros[static_cast<size_t>(real_index)];
  Complex<R> lhs{}, rhs{};
  for (const auto& p : zs.pairs) {
    for (R mu : {p.mu, -p.mu}) {
      lhs += Complex<R>(R(1)) / Complex<R>(xi - p.x, mu);
      rhs += Complex<R>(R(1)) / Complex<R>(xi - p.x, -mu);
    }
  }
  return abs(lhs - rhs);
}

/// Equivalent real form: |sum_t mu_t / ((x_i - x_{n+t})^2 + mu_t^2)| over the
/// signed complex-zero list.
template <class R>
R stationarity_identity_real(const ZeroSet<R>& zs, int real_index)
{
  const R xi = zs.real_zeros[static_cast<size_t>(real_index)];
  R s{};
  for (const auto& p : zs.pairs) {
    R d = xi - p.x;
    s += p.mu / (d * d + p.mu * p.mu);
    s += -p.mu / (d * d + p.mu * p.mu);
  }
  return abs(s);
}

struct WeightSpec;  // energy module; only omega'/omega is needed here

template <class R>
struct ComplexIdentityResiduals {
  R equality;  // |LHS - RHS|
  R zero;      // |LHS|
};

/// Residuals of the complex-index identity at the complex zero with index
/// complex_index in the deterministic full-list ordering (0-based among the
/// complex zeros; conjugates counted individually). dlog_omega is omega'/omega.
template <class R, class DLog>
ComplexIdentityResiduals<R> corollary_identity_complex_impl(const ZeroSet<R>& zs, int complex_index,
                                                            DLog&& dlog_omega)
{
  const int m = zs.n_complex();
  if (complex_index < 0 || complex_index >= m)
    throw std::invalid_argument("corollary_identity_complex: bad complex index");
  auto full = zs.full_list();
  const int n = zs.n_real();
  const Complex<R>& zi = full[static_cast<size_t>(n + complex_index)];

  auto side = [&](bool conjugate) {
    Complex<R> z = conjugate ? conj(zi) : zi;
    Complex<R> acc = dlog_omega(z);
    for (int l = 0; l < m; ++l) {
      if (l == complex_index) continue;
      const Complex<R>& zl = full[static_cast<size_t>(n + l)];
      // (x_i - x_{n+l}) + i(mu_{i-n} - mu_l), conjugated on the other side
      Complex<R> d(zi.re - zl.re, conjugate ? -(zi.im - zl.im) : (zi.im - zl.im));
      acc += Complex<R>(R(2)) / d;
    }
    for (const R& xs : zs.real_zeros)
      acc += Complex<R>(R(2)) / Complex<R>(zi.re - xs, conjugate ? -zi.im : zi.im);
    return acc;
  };

  Complex<R> lhs = side(false);
  Complex<R> rhs = side(true);
  return {abs(lhs - rhs), abs(lhs)};
}

}  // namespace xop
