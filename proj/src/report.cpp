// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#include "xop/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace xop {

std::string rational_str(const Rational& q)
{
  std::ostringstream os;
  if (boost::multiprecision::denominator(q) == 1)
    os << boost::multiprecision::numerator(q);
  else
    os << boost::multiprecision::numerator(q) << "/" << boost::multiprecision::denominator(q);
  return os.str();
}

std::string num_str(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string num_str(const Float256& v)
{
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<Float256>::max_digits10) << v;
  return os.str();
}

json poly_json(const ExactPoly& p)
{
  json j = json::array();
  for (const Rational& c : p.coeffs()) j.push_back(rational_str(c));
  return j;
}

void RelationReport::add(int index, std::string relation, double residual)
{
  rows.push_back({index, std::move(relation), residual});
  max_abs_residual = std::max(max_abs_residual, std::abs(residual));
}

json RelationReport::to_json() const
{
  json j;
  j["rows"] = json::array();
  for (const Row& r : rows)
    j["rows"].push_back(
        {{"index", r.index}, {"relation", r.relation}, {"residual", num_str(r.residual)}});
  j["max_abs_residual"] = num_str(max_abs_residual);
  return j;
}

std::string RelationReport::table() const
{
  std::ostringstream os;
  os << std::left << std::setw(8) << "index" << std::setw(28) << "relation"
     << "residual\n";
  for (const Row& r : rows)
    os << std::left << std::setw(8) << r.index << std::setw(28) << r.relation
       << num_str(r.residual) << "\n";
  os << "max_abs_residual: " << num_str(max_abs_residual) << "\n";
  return os.str();
}

json dominance_json(const DominanceReport& r)
{
  json j;
  j["dominant"] = r.dominant;
  j["margins"] = json::array();
  for (double m : r.margins) j["margins"].push_back(num_str(m));
  return j;
}

json spectrum_json(const SpectrumReport& r)
{
  json j;
  j["classification"] = hessian_class_name(r.classification);
  j["eigenvalues"] = json::array();
  for (double e : r.eigenvalues) j["eigenvalues"].push_back(num_str(e));
  return j;
}

json condition_json(const ConditionReport& r)
{
  auto arr = [](const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(num_str(x));
    return a;
  };
  json j;
  j["k"] = num_str(r.k);
  j["domain"] = {{"margin", num_str(r.margin_domain)}, {"holds", r.holds_domain}};
  j["per_zero_at_zero"] = {{"margins", arr(r.margin_per_zero_at_zero)},
                           {"holds", r.holds_per_zero_at_zero}};
  j["per_zero_at_real_part"] = {{"margins", arr(r.margin_per_zero_at_real_part)},
                                {"holds", r.holds_per_zero_at_real_part}};
  j["real_rows"] = {{"margins", arr(r.margin_real_rows)}, {"holds", r.holds_real_rows}};
  j["complex_rows"] = {{"margins", arr(r.margin_complex_rows)}, {"holds", r.holds_complex_rows}};
  return j;
}

json CriticalPointReport::to_json() const
{
  json j;
  j["y"] = json::array();
  for (double v : config.y) j["y"].push_back(num_str(v));
  j["mu"] = json::array();
  for (double v : config.mu) j["mu"].push_back(num_str(v));
  j["stationarity_residual"] = num_str(stationarity_residual);
  json H = json::array();  // row-major
  for (const auto& row : hessian)
    for (double v : row) H.push_back(num_str(v));
  j["hessian"] = H;
  j["hessian_size"] = hessian.size();
  j["spectrum"] = spectrum_json(spectrum);
  j["diag_dominance"] = dominance_json(dominance);
  j["conditions"] = condition_json(conditions);
  return j;
}

namespace {

json sample_json(const ScanSample& s)
{
  json j;
  j["re"] = num_str(s.re);
  j["im"] = num_str(s.im);
  if (s.skipped)
    j["skipped"] = true;
  else
    j["log_f"] = num_str(s.log_f);
  return j;
}

}  // namespace

json scan_json(const ScanResult& scan, ScanClass cls)
{
  json j;
  j["classification"] = scan_class_name(cls);
  j["real_line"] = json::array();
  for (const auto& s : scan.real_line) j["real_line"].push_back(sample_json(s));
  j["circle"] = json::array();
  for (const auto& s : scan.circle) j["circle"].push_back(sample_json(s));
  return j;
}

json example_json(const ExampleReport& rep)
{
  json j;
  j["partition"] = rep.partition;
  j["degree"] = rep.degree;
  j["n_real"] = rep.n_real;
  j["n_complex"] = rep.n_complex;
  j["scan_classification"] = scan_class_name(rep.scan_class);
  j["stationarity_residual"] = num_str(rep.stationarity_residual);
  j["hessian_classification"] = hessian_class_name(rep.hessian_class);
  j["conditions"] = condition_json(rep.conditions);
  j["runtime_seconds"] = num_str(rep.runtime_seconds);
  return j;
}

json maximize_json(const MaximizeResult& res)
{
  json j;
  j["seed"] = res.seed;
  j["total_starts"] = res.total_starts;
  j["converged_starts"] = res.converged_starts;
  j["best_value"] = num_str(res.best_value);
  j["best_y"] = json::array();
  for (double v : res.best.y) j["best_y"].push_back(num_str(v));
  j["mu"] = json::array();
  for (double v : res.best.mu) j["mu"].push_back(num_str(v));
  j["terminal_values"] = json::array();
  for (size_t s = 0; s < res.terminal_values.size(); ++s)
    j["terminal_values"].push_back({{"start", s},
                                    {"value", num_str(res.terminal_values[s])},
                                    {"converged", static_cast<bool>(res.converged[s])}});
  return j;
}

void write_scan_csv(std::ostream& os, const ScanResult& scan)
{
  os << "re(z),im(z),log_f\n";
  auto line = [&](const ScanSample& s) {
    if (s.skipped) return;
    os << num_str(s.re) << "," << num_str(s.im) << "," << num_str(s.log_f) << "\n";
  };
  for (const auto& s : scan.real_line) line(s);
  for (const auto& s : scan.circle) line(s);
}

}  // namespace xop
