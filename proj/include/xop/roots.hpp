// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "xop/partition.hpp"
#include "xop/poly.hpp"
#include "xop/wronskian.hpp"

namespace xop {

struct RootFindingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class R>
struct RootResult {
  std::vector<Complex<R>> roots;
  std::vector<R> residuals;  // |p(root)| at working precision
};

/// Classified simple zeros: n real zeros (ascending) plus conjugate pairs
/// (x, mu), mu > 0, standing for x +- i*mu.
template <class R>
struct ZeroSet {
  std::vector<R> real_zeros;
  struct Pair {
    R x;
    R mu;
  };
  std::vector<Pair> pairs;
  int source_degree = 0;
  std::vector<R> residuals;

  int n_real() const { return static_cast<int>(real_zeros.size()); }
  int n_complex() const { return 2 * static_cast<int>(pairs.size()); }

  /// Deterministic expansion to the full zero list: reals ascending, then
  /// pairs by ascending x, each +i*mu before -i*mu.
  std::vector<Complex<R>> full_list() const
  {
    std::vector<Complex<R>> out;
    for (const R& x : real_zeros) out.push_back(Complex<R>(x));
    for (const auto& p : pairs) {
      out.push_back(Complex<R>(p.x, p.mu));
      out.push_back(Complex<R>(p.x, -p.mu));
    }
    return out;
  }
};

namespace detail {

template <class R>
std::vector<Complex<R>> scaled_coeffs(const ExactPoly& p)
{
  // Scale by the largest magnitude so double conversion cannot overflow.
  std::vector<Float256> hi;
  hi.reserve(p.coeffs().size());
  Float256 maxabs = 0;
  for (const Rational& c : p.coeffs()) {
    hi.push_back(to_real<Float256>(c));
    Float256 a = abs(hi.back());
    if (a > maxabs) maxabs = a;
  }
  std::vector<Complex<R>> out;
  out.reserve(hi.size());
  for (const Float256& c : hi) {
    if constexpr (std::is_same_v<R, double>)
      out.push_back(Complex<R>((c / maxabs).convert_to<double>()));
    else
      out.push_back(Complex<R>(R(c / maxabs)));
  }
  return out;
}

template <class R>
Complex<R> horner(const std::vector<Complex<R>>& c, const Complex<R>& z)
{
  Complex<R> acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

template <class R>
void horner2(const std::vector<Complex<R>>& c, const Complex<R>& z, Complex<R>& p, Complex<R>& dp)
{
  p = Complex<R>{};
  dp = Complex<R>{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
}

template <class R>
void newton_polish(const std::vector<Complex<R>>& c, Complex<R>& z, R& residual, const R& tol,
                   int cap, int index)
{
  using std::max;
  Complex<R> p, dp;
  horner2(c, z, p, dp);
  R best = abs(p);
  Complex<R> best_z = z;
  for (int it = 0; it < cap; ++it) {
    if (norm(dp) == 0)
      throw RootFindingError("newton polish hit a vanishing derivative at root index " +
                             std::to_string(index));
    Complex<R> step = p / dp;
    z = z - step;
    horner2(c, z, p, dp);
    R r = abs(p);
    if (r < best) {
      best = r;
      best_z = z;
    }
    if (abs(step) < tol * max(R(1), abs(z))) {
      z = best_z;
      residual = best;
      return;
    }
  }
  throw RootFindingError("newton polish failed to converge at root index " +
                         std::to_string(index));
}

}  // namespace detail

/// All complex roots of an exact polynomial by Aberth-Ehrlich simultaneous
/// iteration (initial guesses on a circle at the Cauchy bound) followed by a
/// per-root Newton polish at the working precision. For the 256-bit lane the
/// Aberth stage runs in double and only the polish runs at full precision.
template <class R>
RootResult<R> find_roots(const ExactPoly& poly, R tol = precision_traits<R>::default_tol(),
                         int aberth_cap = 200, int newton_cap = 100)
{
  using std::cos;
  using std::max;
  using std::sin;
  if (poly.degree() < 1) throw std::invalid_argument("find_roots: degree must be at least 1");

  const int d = poly.degree();
  auto cd = detail::scaled_coeffs<double>(poly);

  // Cauchy bound on |root|.
  double lead = abs(cd.back());
  double radius = 0;
  for (int k = 0; k < d; ++k) radius = std::max(radius, abs(cd[static_cast<size_t>(k)]) / lead);
  radius = 1.0 + radius;

  std::vector<Complex<double>> z(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) {
    double a = 2.0 * 3.14159265358979323846 * k / d + 0.4;
    z[static_cast<size_t>(k)] = Complex<double>(radius * std::cos(a), radius * std::sin(a));
  }

  const double atol = 1e-14;
  bool converged = false;
  double max_step = std::numeric_limits<double>::infinity();
  for (int sweep = 0; sweep < aberth_cap && !converged; ++sweep) {
    converged = true;
    max_step = 0;
    for (int k = 0; k < d; ++k) {
      Complex<double> p, dp;
      detail::horner2(cd, z[static_cast<size_t>(k)], p, dp);
      if (norm(p) == 0.0) continue;
      Complex<double> ratio = (norm(dp) == 0.0) ? Complex<double>(1.0) : p / dp;
      Complex<double> s{};
      for (int j = 0; j < d; ++j)
        if (j != k) s += Complex<double>(1.0) / (z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)]);
      Complex<double> denom = Complex<double>(1.0) - ratio * s;
      Complex<double> w = (norm(denom) == 0.0) ? ratio : ratio / denom;
      z[static_cast<size_t>(k)] = z[static_cast<size_t>(k)] - w;
      double rel = abs(w) / std::max(1.0, abs(z[static_cast<size_t>(k)]));
      max_step = std::max(max_step, rel);
      if (rel > atol) converged = false;
    }
  }
  // Double-precision steps can stagnate above atol for higher degrees; the
  // per-root Newton polish below independently verifies convergence, so the
  // simultaneous stage only has to land close enough for polishing.
  if (!converged && !(max_step < 1e-8))
    throw RootFindingError("Aberth iteration failed to converge");

  RootResult<R> result;
  auto cr = detail::scaled_coeffs<R>(poly);
  result.roots.reserve(static_cast<size_t>(d));
  result.residuals.reserve(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) {
    Complex<R> zr(R(z[static_cast<size_t>(k)].re), R(z[static_cast<size_t>(k)].im));
    R residual{};
    detail::newton_polish(cr, zr, residual, tol, newton_cap, k);
    result.roots.push_back(zr);
    result.residuals.push_back(residual);
  }
  return result;
}

/// Splits roots into real zeros and conjugate pairs. tau_real is relative:
/// |Im z| <= tau_real * max(1, |z|) counts as real. Throws if a complex root
/// lacks a conjugate partner within that tolerance.
template <class R>
ZeroSet<R> classify_zeros(const RootResult<R>& rr, R tau_real = R(1e-12))
{
  using std::max;
  ZeroSet<R> zs;
  zs.source_degree = static_cast<int>(rr.roots.size());
  zs.residuals = rr.residuals;

  std::vector<Complex<R>> upper, lower;
  for (const auto& z : rr.roots) {
    R scale = max(R(1), abs(z));
    if (abs(z.im) <= tau_real * scale) zs.real_zeros.push_back(z.re);
    else if (z.im > R(0)) upper.push_back(z);
    else lower.push_back(z);
  }
  if (upper.size() != lower.size())
    throw RootFindingError("classify_zeros: complex roots not closed under conjugation");

  std::vector<bool> used(lower.size(), false);
  for (const auto& u : upper) {
    size_t best = lower.size();
    R best_dist{};
    for (size_t j = 0; j < lower.size(); ++j) {
      if (used[j]) continue;
      R dist = abs(u - conj(lower[j]));
      if (best == lower.size() || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    R scale = max(R(1), abs(u));
    if (best == lower.size() || best_dist > R(1e-8) * scale)
      throw RootFindingError("classify_zeros: unpaired complex root");
    used[best] = true;
    // Symmetrize the pair.
    zs.pairs.push_back({(u.re + lower[best].re) / R(2), (u.im - lower[best].im) / R(2)});
  }

  std::sort(zs.real_zeros.begin(), zs.real_zeros.end());
  std::sort(zs.pairs.begin(), zs.pairs.end(), [](const auto& a, const auto& b) {
    return a.x != b.x ? a.x < b.x : a.mu < b.mu;
  });
  return zs;
}

/// True iff gcd(p, p') is constant.
bool check_simplicity(const ExactPoly& p);

/// Distance from each exceptional (complex) zero of H^(lambda)_n to the
/// nearest zero of eta_H.
template <class R>
struct ProximityEntry {
  Complex<R> zero;
  R distance;
};

template <class R>
std::vector<ProximityEntry<R>> eta_proximity(const Partition& lambda, int n,
                                             R tol = precision_traits<R>::default_tol())
{
  std::vector<ProximityEntry<R>> out;
  if (lambda.length() == 0) return out;
  ExactPoly eta = eta_hermite(lambda);
  ExactPoly h = exceptional_hermite(lambda, n);
  auto eta_roots = find_roots<R>(eta, tol);
  auto zs = classify_zeros(find_roots<R>(h, tol));
  for (const auto& p : zs.pairs) {
    for (const Complex<R>& z : {Complex<R>(p.x, p.mu), Complex<R>(p.x, -p.mu)}) {
      R best{};
      bool first = true;
      for (const auto& e : eta_roots.roots) {
        R dist = abs(z - e);
        if (first || dist < best) {
          best = dist;
          first = false;
        }
      }
      out.push_back({z, best});
    }
  }
  return out;
}

}  // namespace xop
