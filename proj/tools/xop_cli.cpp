// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: construct exceptional Hermite polynomials, find and
// classify their zeros, verify the electrostatic relations, evaluate the
// energy-function machinery, and run the translation-scan / multistart
// experiments.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "xop/report.hpp"

namespace {

using namespace xop;

struct Global {
  std::string partition = "1,1,1,1";
  int n = 8;
  int precision = 53;
  std::string out;
  std::string csv;
};

void emit(const Global& g, const json& j)
{
  if (g.out.empty()) return;
  std::ofstream os(g.out);
  if (!os) throw std::runtime_error("cannot open output file: " + g.out);
  os << j.dump(2) << "\n";
}

Partition parse_partition(const Global& g)
{
  Partition lam = Partition::parse(g.partition);
  if (!lam.is_double())
    throw std::runtime_error("partition " + lam.str() +
                             " is not a double partition; zeros would not be simple");
  return lam;
}

ExactPoly build_poly(const Global& g) { return exceptional_hermite(parse_partition(g), g.n); }

template <class R>
ZeroSet<R> compute_zeros(const ExactPoly& p)
{
  return classify_zeros(find_roots<R>(p));
}

int cmd_build(const Global& g)
{
  ExactPoly h = build_poly(g);
  json j;
  j["partition"] = parse_partition(g).str();
  j["n"] = g.n;
  j["degree"] = h.degree();
  j["coefficients"] = poly_json(h);
  std::cout << "degree " << h.degree() << " polynomial for partition ("
            << parse_partition(g).str() << "), n = " << g.n << ":\n"
            << h.str() << "\n";
  emit(g, j);
  return 0;
}

template <class R>
int roots_impl(const Global& g)
{
  auto zs = compute_zeros<R>(build_poly(g));
  std::cout << zs.n_real() << " real zeros, " << zs.n_complex()
            << " complex zeros (in " << zs.pairs.size() << " conjugate pairs)\n";
  for (const R& x : zs.real_zeros) std::cout << "  " << num_str(x) << "\n";
  for (const auto& p : zs.pairs)
    std::cout << "  " << num_str(p.x) << " +- " << num_str(p.mu) << " i\n";
  emit(g, zeroset_json(zs));
  return 0;
}

template <class R>
RelationReport stieltjes_report(const Global& g, const std::vector<int>& ms)
{
  Partition lam = parse_partition(g);
  ExactPoly h = exceptional_hermite(lam, g.n);
  OdeCoefficients ode = lam.length() == 0
                            ? OdeCoefficients::classical(Family::hermite, g.n)
                            : OdeCoefficients::exceptional_hermite_ode(lam, g.n);
  int max_m = 1;
  for (int m : ms) {
    if (m < 1 || m > 5) throw std::runtime_error("stieltjes-check: m must be in 1..5");
    max_m = std::max(max_m, m);
  }
  StieltjesPredictor pred(ode, max_m);

  auto zs = compute_zeros<R>(h);
  auto full = zs.full_list();
  auto w = lam.length() == 0 ? WeightSpec::classical_hermite()
                             : WeightSpec::exceptional_hermite(lam);

  RelationReport rep;
  for (int m : ms)
    for (int j = 0; j < static_cast<int>(full.size()); ++j) {
      R res = abs(direct_sum(full, m, j) - pred.predict(m, full[static_cast<size_t>(j)]));
      rep.add(j, "S_" + std::to_string(m), static_cast<double>(res));
    }
  for (int i = 0; i < zs.n_real(); ++i) {
    rep.add(i, "corollary-real", static_cast<double>(corollary_identity_real(zs, i)));
    rep.add(i, "stationarity-real", static_cast<double>(stationarity_identity_real(zs, i)));
  }
  for (int i = 0; i < zs.n_complex(); ++i) {
    auto res = corollary_identity_complex_impl(
        zs, i, [&](const Complex<R>& z) { return w.template dlog_weight<R>(z); });
    rep.add(i, "corollary-complex-equality", static_cast<double>(res.equality));
    rep.add(i, "corollary-complex-zero", static_cast<double>(res.zero));
  }
  return rep;
}

int cmd_stieltjes(const Global& g, const std::vector<int>& ms)
{
  RelationReport rep = g.precision == 256 ? stieltjes_report<Float256>(g, ms)
                                          : stieltjes_report<double>(g, ms);
  std::cout << rep.table();
  emit(g, rep.to_json());
  return 0;
}

CriticalPointReport critical_point_report(const Global& g)
{
  Partition lam = parse_partition(g);
  auto w = lam.length() == 0 ? WeightSpec::classical_hermite()
                             : WeightSpec::exceptional_hermite(lam);
  auto zs = compute_zeros<double>(exceptional_hermite(lam, g.n));

  CriticalPointReport rep;
  rep.config = Configuration<double>::from_zeros(zs);
  if (g.precision == 256) {
    auto zs256 = compute_zeros<Float256>(exceptional_hermite(lam, g.n));
    auto c = Configuration<Float256>::from_zeros(zs256);
    Float256 worst = 0;
    for (const Float256& v : gradient(c, w)) worst = std::max(worst, abs(v));
    rep.stationarity_residual = static_cast<double>(worst);
  } else {
    double worst = 0;
    for (double v : gradient(rep.config, w)) worst = std::max(worst, std::abs(v));
    rep.stationarity_residual = worst;
  }
  rep.hessian = hessian(rep.config, w);
  rep.spectrum = classify_hessian(rep.hessian);
  rep.dominance = check_diag_dominance(rep.hessian);
  rep.conditions = check_theorem44_conditions(w, zs);
  return rep;
}

int cmd_energy(const Global& g)
{
  CriticalPointReport rep = critical_point_report(g);
  std::cout << "stationarity residual: " << num_str(rep.stationarity_residual) << "\n"
            << "hessian of -log|T|^2: " << hessian_class_name(rep.spectrum.classification)
            << "\n"
            << "diagonally dominant: " << (rep.dominance.dominant ? "yes" : "no") << "\n"
            << "eigenvalues:";
  for (double e : rep.spectrum.eigenvalues) std::cout << " " << num_str(e);
  std::cout << "\n";
  emit(g, rep.to_json());
  return 0;
}

int cmd_conditions(const Global& g)
{
  Partition lam = parse_partition(g);
  auto w = lam.length() == 0 ? WeightSpec::classical_hermite()
                             : WeightSpec::exceptional_hermite(lam);
  auto zs = compute_zeros<double>(exceptional_hermite(lam, g.n));
  ConditionReport rep = check_theorem44_conditions(w, zs);
  auto lc = check_log_concavity(w);
  auto fp = check_F_positivity(w);

  auto flag = [](bool b) { return b ? "holds" : "fails"; };
  std::cout << "domain inequality (min margin " << num_str(rep.margin_domain)
            << "): " << flag(rep.holds_domain) << "\n"
            << "per-zero inequality at complex zeros: " << flag(rep.holds_per_zero_at_zero)
            << "\n"
            << "per-zero inequality at real parts: " << flag(rep.holds_per_zero_at_real_part)
            << "\n"
            << "proof-form real rows: " << flag(rep.holds_real_rows) << "\n"
            << "proof-form complex rows: " << flag(rep.holds_complex_rows) << "\n"
            << "log-concavity of the weight (max (log w)'' = " << num_str(lc.max_second)
            << "): " << flag(lc.concave) << "\n"
            << "F = q p' - p q' nonnegative (min " << num_str(fp.min_value)
            << "): " << flag(fp.nonnegative) << "\n";

  json j = condition_json(rep);
  j["log_concavity"] = {{"concave", lc.concave}, {"max_second", num_str(lc.max_second)}};
  j["F_positivity"] = {{"nonnegative", fp.nonnegative}, {"min_value", num_str(fp.min_value)}};
  emit(g, j);
  return 0;
}

int cmd_scan(const Global& g, const ScanSpec& spec)
{
  Partition lam = parse_partition(g);
  auto w = lam.length() == 0 ? WeightSpec::classical_hermite()
                             : WeightSpec::exceptional_hermite(lam);
  auto zs = compute_zeros<double>(exceptional_hermite(lam, g.n));
  ScanResult scan = scan_f(zs, w, spec);
  ScanClass cls = classify_scan(scan, spec);
  std::cout << "classification: " << scan_class_name(cls) << "\n";
  emit(g, scan_json(scan, cls));
  if (!g.csv.empty()) {
    std::ofstream os(g.csv);
    if (!os) throw std::runtime_error("cannot open csv file: " + g.csv);
    write_scan_csv(os, scan);
  }
  return cls == ScanClass::inconclusive ? 2 : 0;
}

int cmd_reproduce(const Global& g)
{
  auto reports = reproduce_examples();
  json arr = json::array();
  bool inconclusive = false;
  for (const auto& r : reports) {
    std::cout << "(" << r.partition << ") n_real=" << r.n_real << " n_complex=" << r.n_complex
              << " scan=" << scan_class_name(r.scan_class)
              << " hessian=" << hessian_class_name(r.hessian_class)
              << " stationarity=" << num_str(r.stationarity_residual) << " ["
              << num_str(r.runtime_seconds) << " s]\n";
    arr.push_back(example_json(r));
    if (r.scan_class == ScanClass::inconclusive) inconclusive = true;
  }
  emit(g, arr);
  return inconclusive ? 2 : 0;
}

int cmd_maximize(const Global& g, int starts, std::uint64_t seed, const std::string& family,
                 double alpha, double beta)
{
  WeightSpec w;
  int n = 0, m = 0;
  std::vector<double> mu;
  ExactPoly target;
  if (family.empty()) {
    Partition lam = parse_partition(g);
    w = lam.length() == 0 ? WeightSpec::classical_hermite()
                          : WeightSpec::exceptional_hermite(lam);
    target = exceptional_hermite(lam, g.n);
    auto zs = compute_zeros<double>(target);
    auto c = Configuration<double>::from_zeros(zs);
    n = c.n();
    m = c.m();
    mu = c.mu;  // imaginary parts fixed at the computed zeros
  } else {
    auto ar = Rational(static_cast<long long>(alpha * 2), 2);
    auto br = Rational(static_cast<long long>(beta * 2), 2);
    Family f = family_from_name(family);
    w = f == Family::hermite ? WeightSpec::classical_hermite()
        : f == Family::laguerre ? WeightSpec::classical_laguerre(ar)
                                : WeightSpec::classical_jacobi(ar, br);
    target = classical_poly(f, g.n, ar, br);
    n = g.n;
  }
  auto box = zero_box(target);
  box.first = std::max(box.first, w.domain_lo + 1e-3);
  box.second = std::min(box.second, w.domain_hi - 1e-3);
  auto res = multistart_maximize(w, n, m, mu, starts, seed, box.first, box.second);
  std::cout << res.converged_starts << "/" << res.total_starts
            << " starts converged; best value " << num_str(res.best_value) << "\n"
            << "best y:";
  for (double v : res.best.y) std::cout << " " << num_str(v);
  std::cout << "\n";
  emit(g, maximize_json(res));
  return 0;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"exceptional-orthogonal-polynomial zero explorer"};
  app.require_subcommand(1);

  Global g;
  app.add_option("--precision", g.precision, "working precision in bits")
      ->check(CLI::IsMember({53, 256}));
  app.add_option("--out", g.out, "write a JSON report to this file");
  app.add_option("--csv", g.csv, "write grid samples as CSV to this file");
  app.fallthrough();

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--partition", g.partition,
                    "double partition literal, e.g. 1,1,3,3 (empty = classical)");
    sub->add_option("--n", g.n, "degree parameter");
  };

  auto* build = app.add_subcommand("build", "construct the polynomial exactly");
  add_instance(build);

  auto* roots = app.add_subcommand("roots", "find and classify all zeros");
  add_instance(roots);

  std::vector<int> ms{1, 2, 3};
  auto* stj = app.add_subcommand("stieltjes-check",
                                 "verify the power-sum and corollary identities at the zeros");
  add_instance(stj);
  stj->add_option("--m", ms, "relation orders to check")->delimiter(',');

  auto* energy = app.add_subcommand("energy-check",
                                    "stationarity and Hessian at the zero configuration");
  add_instance(energy);

  auto* cond = app.add_subcommand("conditions", "sufficient-condition margins and flags");
  add_instance(cond);

  ScanSpec spec;
  auto* scan = app.add_subcommand("scan", "translation scan of f(z) around z = 0");
  add_instance(scan);
  scan->add_option("--window", spec.window, "half-width of the real segment");
  scan->add_option("--radius", spec.radius, "complex circle radius");
  scan->add_option("--real-samples", spec.real_samples, "samples on the real segment");
  scan->add_option("--circle-samples", spec.circle_samples, "samples on the circle");
  scan->add_option("--eps", spec.eps, "classification margin on log f");

  auto* repro = app.add_subcommand("reproduce-examples",
                                   "full pipeline for the three reference instances");

  int starts = 50;
  std::uint64_t seed = 42;
  std::string family;
  double alpha = 0, beta = 0;
  auto* maxi = app.add_subcommand("maximize", "multistart ascent on log|T|^2");
  add_instance(maxi);
  maxi->add_option("--starts", starts, "number of random starts");
  maxi->add_option("--seed", seed, "RNG seed (recorded in the report)");
  maxi->add_option("--family", family,
                   "classical family (hermite|laguerre|jacobi) instead of --partition");
  maxi->add_option("--alpha", alpha, "classical parameter alpha (half-integer)");
  maxi->add_option("--beta", beta, "classical parameter beta (half-integer)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(g);
    if (roots->parsed())
      return g.precision == 256 ? roots_impl<Float256>(g) : roots_impl<double>(g);
    if (stj->parsed()) return cmd_stieltjes(g, ms);
    if (energy->parsed()) return cmd_energy(g);
    if (cond->parsed()) return cmd_conditions(g);
    if (scan->parsed()) return cmd_scan(g, spec);
    if (repro->parsed()) return cmd_reproduce(g);
    if (maxi->parsed()) return cmd_maximize(g, starts, seed, family, alpha, beta);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
