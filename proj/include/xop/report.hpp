// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "xop/explorer.hpp"
#include "xop/stieltjes.hpp"

namespace xop {

using json = nlohmann::json;

/// "num/den" in lowest terms ("num" when den = 1).
std::string rational_str(const Rational& q);

/// Decimal string with 17 significant digits (shortest round-trip superset).
std::string num_str(double v);

/// Decimal string with enough digits for the 256-bit working precision.
std::string num_str(const Float256& v);

/// Coefficients lowest degree first, each as a "num/den" string.
json poly_json(const ExactPoly& p);

template <class R>
json zeroset_json(const ZeroSet<R>& zs)
{
  json j;
  j["real"] = json::array();
  for (const R& x : zs.real_zeros) j["real"].push_back(num_str(x));
  j["pairs"] = json::array();
  for (const auto& p : zs.pairs)
    j["pairs"].push_back({{"x", num_str(p.x)}, {"mu", num_str(p.mu)}});
  j["degree"] = zs.source_degree;
  j["residuals"] = json::array();
  for (const R& r : zs.residuals) j["residuals"].push_back(num_str(r));
  return j;
}

/// Per-index residuals of one family of identities, with a summary maximum.
struct RelationReport {
  struct Row {
    int index = 0;
    std::string relation;
    double residual = 0;
  };
  std::vector<Row> rows;
  double max_abs_residual = 0;

  void add(int index, std::string relation, double residual);
  json to_json() const;
  std::string table() const;
};

json dominance_json(const DominanceReport& r);
json spectrum_json(const SpectrumReport& r);
json condition_json(const ConditionReport& r);

/// Everything computed at one stationary configuration.
struct CriticalPointReport {
  Configuration<double> config;
  double stationarity_residual = 0;
  std::vector<std::vector<double>> hessian;  // of -log|T|^2
  SpectrumReport spectrum;
  DominanceReport dominance;
  ConditionReport conditions;

  json to_json() const;
};

json scan_json(const ScanResult& scan, ScanClass cls);
json example_json(const ExampleReport& rep);
json maximize_json(const MaximizeResult& res);

/// CSV grid: header "re(z),im(z),log_f", 17 significant digits, real-line
/// samples then circle samples, in grid order; skipped samples are omitted.
void write_scan_csv(std::ostream& os, const ScanResult& scan);

}  // namespace xop
