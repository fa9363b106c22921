// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xop/energy.hpp"

namespace xop {

/// Grid parameters for the translation scan of f(z) =
/// |T(z_1+z,...,z_N+z) / T(z_1,...,z_N)| around z = 0.
struct ScanSpec {
  double window = 0.2;      // half-width of the real segment
  int real_samples = 401;   // odd keeps z = 0 on the grid
  double radius = 0.05;     // complex circle radius
  int circle_samples = 360;
  double eps = 1e-8;        // classification margin on log f

  void validate() const;
};

struct ScanSample {
  double re = 0;
  double im = 0;
  double log_f = 0;
  bool skipped = false;  // collision or weight singularity at this shift
};

struct ScanResult {
  std::vector<ScanSample> real_line;  // ordered by grid index
  std::vector<ScanSample> circle;
};

enum class ScanClass { real_max_and_saddle, real_max_only, neither, inconclusive };

std::string scan_class_name(ScanClass c);

ScanResult scan_f(const ZeroSet<double>& zs, const WeightSpec& w, const ScanSpec& spec = {});

ScanClass classify_scan(const ScanResult& scan, const ScanSpec& spec = {});

/// Gradient ascent on log|T_omega(Y)|^2 with Armijo backtracking from random
/// starts in [box_lo, box_hi]^(n+m); mu stays fixed.
struct MaximizeResult {
  Configuration<double> best;
  double best_value = 0;
  int converged_starts = 0;
  int total_starts = 0;
  std::uint64_t seed = 0;
  std::vector<double> terminal_values;  // per start, sorted by start index
  std::vector<bool> converged;
};

MaximizeResult multistart_maximize(const WeightSpec& w, int n, int m, std::vector<double> mu,
                                   int starts, std::uint64_t seed, double box_lo, double box_hi,
                                   int step_cap = 2000, double grad_tol = 1e-10);

/// Box covering 1.5x the extreme zeros of a polynomial, for seeding starts.
std::pair<double, double> zero_box(const ExactPoly& p, double factor = 1.5);

/// Full pipeline for one exceptional Hermite instance: construct, find and
/// classify zeros, verify stationarity, classify the Hessian, evaluate the
/// sufficient conditions, and run the translation scan.
struct ExampleReport {
  std::string partition;
  int degree = 0;
  int n_real = 0;
  int n_complex = 0;
  ScanClass scan_class = ScanClass::inconclusive;
  double stationarity_residual = 0;  // max |gradient| at the zero configuration
  HessianClass hessian_class = HessianClass::semidefinite_degenerate;
  ConditionReport conditions;
  double runtime_seconds = 0;
};

ExampleReport run_example(const Partition& lambda, int n, const ScanSpec& spec = {});

/// The paper's three instances: (1,1,1,1)/8, (1,1,3,3)/8, (2,2,3,3)/10.
std::vector<ExampleReport> reproduce_examples(const ScanSpec& spec = {});

}  // namespace xop
