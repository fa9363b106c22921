// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "xop/roots.hpp"
#include "xop/weight.hpp"

namespace xop {

/// A point configuration with n real coordinates and m complex coordinates
/// y_{n+j} + i*mu_j whose imaginary parts mu_j are fixed (signed, nonzero;
/// conjugate-closed zero sets enter with +mu and -mu as separate coordinates,
/// matching the individual-zero indexing of the identities checked here).
template <class R>
struct Configuration {
  std::vector<R> y;   // n + m free real coordinates
  std::vector<R> mu;  // m fixed imaginary parts

  int n() const { return static_cast<int>(y.size()) - static_cast<int>(mu.size()); }
  int m() const { return static_cast<int>(mu.size()); }

  void validate() const
  {
    if (static_cast<int>(y.size()) < static_cast<int>(mu.size()))
      throw std::invalid_argument("Configuration: more imaginary parts than coordinates");
    for (const R& v : mu)
      if (v == R(0))
        throw std::invalid_argument(
            "Configuration: mu must be nonzero; a vanishing pair belongs in the real slots");
  }

  Complex<R> point(int i) const
  {
    const int nn = n();
    if (i < nn) return Complex<R>(y[static_cast<size_t>(i)]);
    return Complex<R>(y[static_cast<size_t>(i)], mu[static_cast<size_t>(i - nn)]);
  }

  std::vector<Complex<R>> points() const
  {
    std::vector<Complex<R>> out;
    out.reserve(y.size());
    for (int i = 0; i < static_cast<int>(y.size()); ++i) out.push_back(point(i));
    return out;
  }

  /// Coordinates of a zero set in full-list order: reals ascending, then each
  /// conjugate pair as two coordinates with imaginary parts +mu, -mu.
  static Configuration from_zeros(const ZeroSet<R>& zs)
  {
    Configuration c;
    c.y = zs.real_zeros;
    for (const auto& p : zs.pairs) {
      c.y.push_back(p.x);
      c.y.push_back(p.x);
      c.mu.push_back(p.mu);
      c.mu.push_back(-p.mu);
    }
    c.validate();
    return c;
  }
};

/// log T_omega = sum_j log omega(z_j) + 2 sum_{i<j} log(z_i - z_j), principal
/// branch per term; the real part is log|T| independent of branch choices.
template <class R>
Complex<R> log_T(const std::vector<Complex<R>>& pts, const WeightSpec& w)
{
  Complex<R> acc{};
  for (const auto& z : pts) acc += w.log_weight(z);
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      Complex<R> d = pts[i] - pts[j];
      if (norm(d) == R(0)) throw std::domain_error("log_T: coincident points");
      acc += R(2) * log(d);
    }
  return acc;
}

/// log |T_omega(Y)|^2 = 2 Re log T_omega.
template <class R>
R log_abs_T_sq(const Configuration<R>& c, const WeightSpec& w)
{
  return R(2) * log_T(c.points(), w).re;
}

/// The same quantity from the expanded real product form (independent route,
/// used as a cross-check): products of omega moduli and squared distances
/// written out over real/complex index blocks.
template <class R>
R log_abs_T_sq_expanded(const Configuration<R>& c, const WeightSpec& w)
{
  using std::log;
  const int n = c.n(), m = c.m();
  R acc{};
  for (int i = 0; i < n; ++i) acc += R(2) * w.log_weight(c.point(i)).re;
  for (int j = 0; j < m; ++j) {
    acc += w.log_weight(c.point(n + j)).re;
    acc += w.log_weight(conj(c.point(n + j))).re;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      R d = c.y[static_cast<size_t>(i)] - c.y[static_cast<size_t>(j)];
      acc += R(4) * log(abs(Complex<R>(d)));
    }
  for (int k = 0; k < m; ++k)
    for (int l = k + 1; l < m; ++l) {
      R d = c.y[static_cast<size_t>(n + k)] - c.y[static_cast<size_t>(n + l)];
      R dm = c.mu[static_cast<size_t>(k)] - c.mu[static_cast<size_t>(l)];
      acc += R(2) * log(d * d + dm * dm);
    }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < m; ++t) {
      R d = c.y[static_cast<size_t>(s)] - c.y[static_cast<size_t>(n + t)];
      R mt = c.mu[static_cast<size_t>(t)];
      acc += R(2) * log(d * d + mt * mt);
    }
  return acc;
}

/// Analytic gradient of log|T_omega(Y)|^2 in the n+m real coordinates.
template <class R>
std::vector<R> gradient(const Configuration<R>& c, const WeightSpec& w)
{
  c.validate();
  const int n = c.n(), m = c.m();
  std::vector<R> g(c.y.size());
  for (int i = 0; i < n; ++i) {
    R acc = R(2) * w.dlog_weight(Complex<R>(c.y[static_cast<size_t>(i)])).re;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      acc += R(4) / (c.y[static_cast<size_t>(i)] - c.y[static_cast<size_t>(j)]);
    }
    for (int t = 0; t < m; ++t) {
      R d = c.y[static_cast<size_t>(i)] - c.y[static_cast<size_t>(n + t)];
      R mt = c.mu[static_cast<size_t>(t)];
      acc += R(4) * d / (d * d + mt * mt);
    }
    g[static_cast<size_t>(i)] = acc;
  }
  for (int i = 0; i < m; ++i) {
    Complex<R> zi = c.point(n + i);
    // omega'/omega at y + i*mu plus at y - i*mu = twice the real part.
    R acc = R(2) * w.dlog_weight(zi).re;
    for (int l = 0; l < m; ++l) {
      if (l == i) continue;
      R d = c.y[static_cast<size_t>(n + i)] - c.y[static_cast<size_t>(n + l)];
      R dm = c.mu[static_cast<size_t>(i)] - c.mu[static_cast<size_t>(l)];
      acc += R(4) * d / (d * d + dm * dm);
    }
    for (int s = 0; s < n; ++s) {
      R d = c.y[static_cast<size_t>(n + i)] - c.y[static_cast<size_t>(s)];
      R mi = c.mu[static_cast<size_t>(i)];
      acc += R(4) * d / (d * d + mi * mi);
    }
    g[static_cast<size_t>(n + i)] = acc;
  }
  return g;
}

/// Hessian of -log|T_omega(Y)|^2 (the six displayed element types). With
/// classical_convention (m = 0 only) entries are halved, giving the Hessian
/// of -log T_omega used in the classical theorem.
template <class R>
std::vector<std::vector<R>> hessian(const Configuration<R>& c, const WeightSpec& w,
                                    bool classical_convention = false)
{
  c.validate();
  const int n = c.n(), m = c.m();
  if (classical_convention && m != 0)
    throw std::invalid_argument("hessian: classical convention requires m = 0");
  const int sz = n + m;
  std::vector<std::vector<R>> H(static_cast<size_t>(sz),
                                std::vector<R>(static_cast<size_t>(sz), R(0)));

  auto off = [&](int i, int j) -> R {
    R d = c.y[static_cast<size_t>(i)] - c.y[static_cast<size_t>(j)];
    if (i < n && j < n) return R(-4) / (d * d);
    R dm;
    if (i < n) dm = c.mu[static_cast<size_t>(j - n)];
    else if (j < n) dm = c.mu[static_cast<size_t>(i - n)];
    else dm = c.mu[static_cast<size_t>(i - n)] - c.mu[static_cast<size_t>(j - n)];
    R s = d * d + dm * dm;
    return R(-4) * (d * d - dm * dm) / (s * s);
  };

  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j)
      if (i != j) H[static_cast<size_t>(i)][static_cast<size_t>(j)] = off(i, j);

  for (int i = 0; i < n; ++i) {
    R acc = R(-2) * w.ddlog_weight(Complex<R>(c.y[static_cast<size_t>(i)])).re;
    for (int j = 0; j < sz; ++j)
      if (j != i) acc -= off(i, j);
    H[static_cast<size_t>(i)][static_cast<size_t>(i)] = acc;
  }
  for (int i = n; i < sz; ++i) {
    // (-omega'/omega)' at y + i*mu plus at y - i*mu = -2 Re (log omega)''.
    R acc = R(-2) * w.ddlog_weight(c.point(i)).re;
    for (int j = 0; j < sz; ++j)
      if (j != i) acc -= off(i, j);
    H[static_cast<size_t>(i)][static_cast<size_t>(i)] = acc;
  }

  if (classical_convention)
    for (auto& row : H)
      for (R& v : row) v = v / R(2);
  return H;
}

struct DominanceReport {
  bool dominant = false;            // positive diagonal and strict dominance
  std::vector<double> margins;      // H_ii - sum_{j != i} |H_ij|
};

DominanceReport check_diag_dominance(const std::vector<std::vector<double>>& H);

enum class HessianClass { positive_definite, indefinite, semidefinite_degenerate };

std::string hessian_class_name(HessianClass c);

struct SpectrumReport {
  HessianClass classification = HessianClass::semidefinite_degenerate;
  std::vector<double> eigenvalues;  // ascending
};

/// Classify by the extreme eigenvalues relative to the matrix norm.
SpectrumReport classify_hessian(const std::vector<std::vector<double>>& H, double tol = 1e-9);

struct LogConcavityReport {
  bool concave = false;
  double max_second = 0;  // max over the grid of (log omega)'' = (q/p)'
};

LogConcavityReport check_log_concavity(const WeightSpec& w, int grid_points = 101);

struct FPositivityReport {
  bool nonnegative = false;
  double min_value = 0;  // min over the grid of F = q p' - p q'
};

FPositivityReport check_F_positivity(const WeightSpec& w, int grid_points = 101);

/// Margins for the sufficient conditions on the denominator eta. All margins
/// are "LHS - RHS"; a condition holds when its margins are positive (weakly
/// for the domain-wide inequality). The per-zero inequality is reported under
/// both readings of its evaluation point: at the complex zero z_i itself
/// (real part of the complex second derivative) and at the real part x_i.
struct ConditionReport {
  double k = 0;              // family constant (1 Hermite, 0 Laguerre/Jacobi)
  double margin_domain = 0;  // min over the grid of (log eta)'' + k
  bool holds_domain = false;
  std::vector<double> margin_per_zero_at_zero;       // size n+m
  std::vector<double> margin_per_zero_at_real_part;  // size n+m
  bool holds_per_zero_at_zero = false;
  bool holds_per_zero_at_real_part = false;
  std::vector<double> margin_real_rows;     // proof form, real indices (size n)
  std::vector<double> margin_complex_rows;  // proof form, complex indices (size m)
  bool holds_real_rows = false;
  bool holds_complex_rows = false;
};

ConditionReport check_theorem44_conditions(const WeightSpec& w, const ZeroSet<double>& zs,
                                           int grid_points = 101);

}  // namespace xop
