// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#include "xop/explorer.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace xop {

void ScanSpec::validate() const
{
  if (!(window > 0) || !(radius > 0) || !(eps > 0))
    throw std::invalid_argument("ScanSpec: window, radius, eps must be positive");
  if (real_samples < 3 || circle_samples < 3)
    throw std::invalid_argument("ScanSpec: need at least 3 samples per grid");
}

std::string scan_class_name(ScanClass c)
{
  switch (c) {
    case ScanClass::real_max_and_saddle: return "real-max-and-saddle";
    case ScanClass::real_max_only: return "real-max-only";
    case ScanClass::neither: return "neither";
    case ScanClass::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// log f(z) = Re[log T(Z + z) - log T(Z)]; the base value is precomputed once
// so the z = 0 sample cancels bit-exactly.
struct Translator {
  const std::vector<Complex<double>>& zeros;
  const WeightSpec& w;
  double base;

  ScanSample at(double re, double im) const
  {
    ScanSample s;
    s.re = re;
    s.im = im;
    if (re == 0 && im == 0) return s;  // log_f = 0 by construction
    Complex<double> shift(re, im);
    std::vector<Complex<double>> pts;
    pts.reserve(zeros.size());
    for (const auto& z : zeros) pts.push_back(z + shift);
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        if (abs(pts[i] - pts[j]) < 1e-13) {
          s.skipped = true;
          return s;
        }
    double v = log_T(pts, w).re - base;
    if (!std::isfinite(v)) {
      s.skipped = true;
      return s;
    }
    s.log_f = v;
    return s;
  }
};

}  // namespace

ScanResult scan_f(const ZeroSet<double>& zs, const WeightSpec& w, const ScanSpec& spec)
{
  spec.validate();
  auto zeros = zs.full_list();
  Translator tr{zeros, w, log_T(zeros, w).re};

  ScanResult out;
  out.real_line.reserve(static_cast<size_t>(spec.real_samples));
  for (int i = 0; i < spec.real_samples; ++i) {
    double x = -spec.window + 2 * spec.window * i / (spec.real_samples - 1);
    out.real_line.push_back(tr.at(x, 0.0));
  }
  out.circle.reserve(static_cast<size_t>(spec.circle_samples));
  for (int i = 0; i < spec.circle_samples; ++i) {
    double a = 2.0 * 3.14159265358979323846 * i / spec.circle_samples;
    out.circle.push_back(tr.at(spec.radius * std::cos(a), spec.radius * std::sin(a)));
  }
  return out;
}

ScanClass classify_scan(const ScanResult& scan, const ScanSpec& spec)
{
  // "neither" wins as soon as some real sample beats f(0).
  bool real_above = false;
  bool real_max = true;
  for (const auto& s : scan.real_line) {
    if (s.skipped || (s.re == 0 && s.im == 0)) continue;
    if (s.log_f > spec.eps) real_above = true;
    double scaled = s.re / spec.window;
    if (!(s.log_f < -spec.eps * scaled * scaled)) real_max = false;
  }
  if (real_above) return ScanClass::neither;

  bool circle_up = false, circle_down = false;
  for (const auto& s : scan.circle) {
    if (s.skipped) continue;
    if (s.log_f > spec.eps) circle_up = true;
    if (s.log_f < -spec.eps) circle_down = true;
  }
  bool saddle = circle_up && circle_down;
  if (real_max && saddle) return ScanClass::real_max_and_saddle;
  if (real_max) return ScanClass::real_max_only;
  return ScanClass::inconclusive;
}

std::pair<double, double> zero_box(const ExactPoly& p, double factor)
{
  auto rr = find_roots<double>(p);
  double lo = 0, hi = 0;
  for (const auto& z : rr.roots) {
    lo = std::min(lo, z.re);
    hi = std::max(hi, z.re);
  }
  double mid = (lo + hi) / 2, half = (hi - lo) / 2;
  return {mid - factor * half, mid + factor * half};
}

MaximizeResult multistart_maximize(const WeightSpec& w, int n, int m, std::vector<double> mu,
                                   int starts, std::uint64_t seed, double box_lo, double box_hi,
                                   int step_cap, double grad_tol)
{
  if (starts < 1) throw std::invalid_argument("multistart_maximize: starts must be positive");
  if (static_cast<int>(mu.size()) != m)
    throw std::invalid_argument("multistart_maximize: mu size must equal m");
  if (!(box_hi > box_lo)) throw std::invalid_argument("multistart_maximize: empty start box");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(box_lo, box_hi);

  auto value = [&](const Configuration<double>& c) -> double {
    // Keep iterates inside the orthogonality domain; outside it the modulus
    // of the analytically continued weight is meaningless for this problem.
    for (double y : c.y)
      if (!(y > w.domain_lo && y < w.domain_hi))
        return -std::numeric_limits<double>::infinity();
    try {
      return log_abs_T_sq(c, w);
    } catch (const std::domain_error&) {
      return -std::numeric_limits<double>::infinity();
    }
  };

  MaximizeResult res;
  res.seed = seed;
  res.total_starts = starts;
  bool have_best = false;

  for (int s = 0; s < starts; ++s) {
    Configuration<double> c;
    c.mu = mu;
    for (int i = 0; i < n + m; ++i) c.y.push_back(u(rng));
    double fv = value(c);
    int tries = 0;
    while (!std::isfinite(fv) && tries++ < 100) {
      for (double& y : c.y) y = u(rng);
      fv = value(c);
    }

    auto grad_max = [](const std::vector<double>& g) {
      double r = 0;
      for (double v : g) r = std::max(r, std::abs(v));
      return r;
    };

    bool ok = false;
    bool stalled = false;
    for (int it = 0; it < step_cap && !stalled; ++it) {
      std::vector<double> g;
      try {
        g = gradient(c, w);
      } catch (const std::domain_error&) {
        break;
      }
      double gmax = grad_max(g), gsq = 0;
      for (double v : g) gsq += v * v;
      if (gmax < grad_tol) {
        ok = true;
        break;
      }
      // Armijo backtracking along the gradient (ascent).
      double t = 1.0 / std::max(1.0, gmax);
      bool moved = false;
      for (int bt = 0; bt < 60; ++bt, t /= 2) {
        Configuration<double> cand = c;
        for (size_t i = 0; i < c.y.size(); ++i) cand.y[i] += t * g[i];
        double cv = value(cand);
        if (std::isfinite(cv) && cv >= fv + 1e-4 * t * gsq) {
          c = cand;
          fv = cv;
          moved = true;
          break;
        }
      }
      // Function-value increments drop below double resolution near a
      // maximum while the gradient is still ~1e-7; hand over to Newton.
      if (!moved) stalled = true;
    }

    if (!ok) {
      // Newton refinement on the stationarity condition: solve H d = g with
      // the analytic Hessian of -log|T|^2 and step y += d; accepted only
      // while the gradient norm keeps shrinking.
      try {
        std::vector<double> g = gradient(c, w);
        double gmax = grad_max(g);
        for (int it = 0; it < 50 && gmax >= grad_tol; ++it) {
          auto H = hessian(c, w);
          const auto sz = static_cast<Eigen::Index>(c.y.size());
          Eigen::MatrixXd M(sz, sz);
          Eigen::VectorXd b(sz);
          for (Eigen::Index i = 0; i < sz; ++i) {
            b(i) = g[static_cast<size_t>(i)];
            for (Eigen::Index j = 0; j < sz; ++j)
              M(i, j) = H[static_cast<size_t>(i)][static_cast<size_t>(j)];
          }
          Eigen::VectorXd d = M.ldlt().solve(b);
          Configuration<double> cand = c;
          for (Eigen::Index i = 0; i < sz; ++i) cand.y[static_cast<size_t>(i)] += d(i);
          bool inside = true;
          for (double y : cand.y)
            if (!(y > w.domain_lo && y < w.domain_hi)) inside = false;
          if (!inside) break;
          auto gc = gradient(cand, w);
          double gmc = grad_max(gc);
          if (!std::isfinite(gmc) || gmc >= gmax) break;
          c = cand;
          g = gc;
          gmax = gmc;
        }
        if (gmax < grad_tol) {
          ok = true;
          fv = value(c);
        }
      } catch (const std::domain_error&) {
      }
    }

    res.terminal_values.push_back(fv);
    res.converged.push_back(ok);
    if (ok) ++res.converged_starts;
    if (ok && (!have_best || fv > res.best_value)) {
      res.best = c;
      res.best_value = fv;
      have_best = true;
    }
  }
  if (!have_best) throw std::runtime_error("multistart_maximize: no start converged");
  std::sort(res.best.y.begin(), res.best.y.begin() + n);
  return res;
}

ExampleReport run_example(const Partition& lambda, int n, const ScanSpec& spec)
{
  auto t0 = std::chrono::steady_clock::now();
  ExampleReport rep;
  rep.partition = lambda.str();
  ExactPoly h = exceptional_hermite(lambda, n);
  rep.degree = h.degree();
  auto w = WeightSpec::exceptional_hermite(lambda);
  auto zs = classify_zeros(find_roots<double>(h));
  rep.n_real = zs.n_real();
  rep.n_complex = zs.n_complex();

  auto c = Configuration<double>::from_zeros(zs);
  double worst = 0;
  for (double g : gradient(c, w)) worst = std::max(worst, std::abs(g));
  rep.stationarity_residual = worst;

  rep.hessian_class = classify_hessian(hessian(c, w)).classification;
  rep.conditions = check_theorem44_conditions(w, zs);
  rep.scan_class = classify_scan(scan_f(zs, w, spec), spec);

  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<ExampleReport> reproduce_examples(const ScanSpec& spec)
{
  return {
      run_example(Partition::parse("1,1,1,1"), 8, spec),
      run_example(Partition::parse("1,1,3,3"), 8, spec),
      run_example(Partition::parse("2,2,3,3"), 10, spec),
  };
}

}  // namespace xop
