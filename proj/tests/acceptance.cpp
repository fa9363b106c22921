// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one pass/fail line per criterion. The process exits with
// the number of failed criteria, so the test harness records any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "xop/explorer.hpp"
#include "xop/stieltjes.hpp"

using namespace xop;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& what, const std::string& detail = "")
{
  std::printf("criterion %2d: %s  %s%s%s\n", idx, ok ? "PASS" : "FAIL", what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

struct Instance {
  Partition lambda;
  int n;
};

WeightSpec weight_of(const Partition& lam)
{
  return lam.length() == 0 ? WeightSpec::classical_hermite()
                           : WeightSpec::exceptional_hermite(lam);
}

double now_minus(std::chrono::steady_clock::time_point t0)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------- criteria 1-3: the three reference instances ----------

struct ExampleOutcome {
  ExampleReport rep;
  double seconds;
};

ExampleOutcome run_instance(const char* lit, int n)
{
  auto t0 = std::chrono::steady_clock::now();
  ExampleOutcome out{run_example(Partition::parse(lit), n), 0};
  out.seconds = now_minus(t0);
  return out;
}

void criteria_123(const ExampleOutcome& e1, const ExampleOutcome& e2, const ExampleOutcome& e3)
{
  report(1,
         e1.rep.degree == 8 && e1.rep.n_real == 4 && e1.rep.n_complex == 4 &&
             e1.rep.scan_class == ScanClass::real_max_and_saddle && e1.seconds < 5,
         "instance (1,1,1,1)/8: 4 real + 4 complex, real-max-and-saddle, < 5 s",
         "got " + std::to_string(e1.rep.n_real) + "r+" + std::to_string(e1.rep.n_complex) +
             "c, " + scan_class_name(e1.rep.scan_class) + ", " + std::to_string(e1.seconds) +
             " s");
  report(2,
         e2.rep.degree == 8 && e2.rep.n_real == 2 && e2.rep.n_complex == 6 &&
             e2.rep.scan_class == ScanClass::real_max_and_saddle && e2.seconds < 5,
         "instance (1,1,3,3)/8: 2 real + 6 complex, real-max-and-saddle, < 5 s",
         "got " + std::to_string(e2.rep.n_real) + "r+" + std::to_string(e2.rep.n_complex) +
             "c, " + scan_class_name(e2.rep.scan_class) + ", " + std::to_string(e2.seconds) +
             " s");
  // The reference text states "neither" (some real translation increases f).
  // The computed scan finds log f < 0 at every real grid point except 0, and
  // an independent high-precision dense scan agrees, so this criterion fails
  // honestly; the computed classification is real-max-and-saddle.
  report(3,
         e3.rep.degree == 10 && e3.rep.n_real == 2 && e3.rep.n_complex == 8 &&
             e3.rep.scan_class == ScanClass::neither && e3.seconds < 10,
         "instance (2,2,3,3)/10: 2 real + 8 complex, classification \"neither\", < 10 s",
         "got " + std::to_string(e3.rep.n_real) + "r+" + std::to_string(e3.rep.n_complex) +
             "c, " + scan_class_name(e3.rep.scan_class) + ", " + std::to_string(e3.seconds) +
             " s; independent dense high-precision scan confirms log f < 0 for all real z != 0"
             " (max -8e-8), so the stated \"neither\" outcome is not reproducible from the"
             " stated zero data");
}

// ---------- shared instance lists ----------

std::vector<Instance> criterion4_instances()
{
  std::vector<Instance> out;
  for (int n = 2; n <= 20; ++n) out.push_back({Partition(), n});
  for (const char* lit : {"1,1", "1,1,1,1"}) {
    Partition lam = Partition::parse(lit);
    for (int n = 0; n <= 12; ++n) {
      try {
        exceptional_hermite(lam, n);
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (n >= 2) out.push_back({lam, n});
    }
  }
  return out;
}

OdeCoefficients ode_of(const Instance& inst)
{
  return inst.lambda.length() == 0
             ? OdeCoefficients::classical(Family::hermite, inst.n)
             : OdeCoefficients::exceptional_hermite_ode(inst.lambda, inst.n);
}

// ---------- criterion 4 / 10: power-sum relations ----------

template <class R>
double stieltjes_worst(const std::vector<Instance>& list, double* worst_s3_dev)
{
  double worst = 0;
  if (worst_s3_dev) *worst_s3_dev = 0;
  for (const auto& inst : list) {
    StieltjesPredictor pred(ode_of(inst), 3);
    auto full =
        classify_zeros(find_roots<R>(exceptional_hermite(inst.lambda, inst.n))).full_list();
    for (int m = 1; m <= 3; ++m)
      for (int j = 0; j < static_cast<int>(full.size()); ++j) {
        const Complex<R>& z = full[static_cast<size_t>(j)];
        double res = static_cast<double>(abs(direct_sum(full, m, j) - pred.predict(m, z)));
        worst = std::max(worst, res);
        if (m == 3 && inst.lambda.length() > 0 && worst_s3_dev) {
          // the third relation collapses to S_3 = z_j / 2 for this family
          double dev = static_cast<double>(abs(pred.predict(3, z) - z / R(2)));
          *worst_s3_dev = std::max(*worst_s3_dev, dev);
        }
      }
  }
  return worst;
}

// ---------- criterion 5 / 10: stationarity and corollary identities ----------

template <class R>
void stationarity_residuals(const std::vector<Instance>& examples, double* worst_grad,
                            double* worst_corollary)
{
  *worst_grad = 0;
  *worst_corollary = 0;
  for (const auto& inst : examples) {
    auto w = weight_of(inst.lambda);
    auto zs = classify_zeros(find_roots<R>(exceptional_hermite(inst.lambda, inst.n)));
    auto c = Configuration<R>::from_zeros(zs);
    for (const R& gv : gradient(c, w))
      *worst_grad = std::max(*worst_grad, static_cast<double>(abs(gv)));
    for (int i = 0; i < zs.n_real(); ++i) {
      *worst_corollary =
          std::max(*worst_corollary, static_cast<double>(corollary_identity_real(zs, i)));
      *worst_corollary =
          std::max(*worst_corollary, static_cast<double>(stationarity_identity_real(zs, i)));
    }
    for (int i = 0; i < zs.n_complex(); ++i) {
      auto res = corollary_identity_complex_impl(
          zs, i, [&](const Complex<R>& z) { return w.template dlog_weight<R>(z); });
      *worst_corollary = std::max(*worst_corollary, static_cast<double>(res.equality));
      *worst_corollary = std::max(*worst_corollary, static_cast<double>(res.zero));
    }
  }
}

// ---------- criterion 6: exact ODE residual ----------

bool ode_residual_exact(const std::vector<Instance>& list)
{
  for (const auto& inst : list) {
    ExactPoly h = exceptional_hermite(inst.lambda, inst.n);
    OdeCoefficients ode = ode_of(inst);
    RationalFunction res = ode.p * RationalFunction(h.derivative(2)) +
                           ode.q * RationalFunction(h.derivative()) +
                           ode.c * RationalFunction(h);
    if (!res.is_zero()) return false;
  }
  return true;
}

// ---------- criterion 7: classical multistart oracle ----------

struct ClassicalCase {
  WeightSpec w;
  ExactPoly target;
  double lo_clip, hi_clip;
};

bool classical_oracle(std::string& detail)
{
  std::vector<ClassicalCase> cases;
  cases.push_back({WeightSpec::classical_hermite(), hermite(3), -1e30, 1e30});
  cases.push_back({WeightSpec::classical_hermite(), hermite(4), -1e30, 1e30});
  cases.push_back({WeightSpec::classical_laguerre(Rational(1, 2)), laguerre(3, Rational(1, 2)),
                   1e-3, 1e30});
  cases.push_back({WeightSpec::classical_jacobi(Rational(1, 2), Rational(1, 2)),
                   jacobi(3, Rational(1, 2), Rational(1, 2)), -0.999, 0.999});

  for (const auto& cs : cases) {
    auto zs = classify_zeros(find_roots<double>(cs.target));
    if (zs.n_complex() != 0) return false;
    const int n = zs.n_real();
    auto box = zero_box(cs.target);
    box.first = std::max(box.first, cs.lo_clip);
    box.second = std::min(box.second, cs.hi_clip);
    auto res = multistart_maximize(cs.w, n, 0, {}, 50, 42, box.first, box.second);

    auto value_at = [&](const Configuration<double>& c) { return log_abs_T_sq(c, cs.w); };
    Configuration<double> at_zeros = Configuration<double>::from_zeros(zs);
    double ref = value_at(at_zeros);
    int good = 0;
    for (size_t s = 0; s < res.terminal_values.size(); ++s)
      if (res.converged[s] && std::abs(res.terminal_values[s] - ref) < 1e-6) ++good;
    double worst = 0;
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, std::abs(res.best.y[static_cast<size_t>(i)] - zs.real_zeros[static_cast<size_t>(i)]));
    if (worst > 1e-6 || good < 45) {
      detail = "recovery " + std::to_string(worst) + ", " + std::to_string(good) + "/50 starts";
      return false;
    }
    auto H = hessian(at_zeros, cs.w, /*classical_convention=*/true);
    if (!check_diag_dominance(H).dominant) {
      detail = "diagonal dominance fails";
      return false;
    }
    if (classify_hessian(H).classification != HessianClass::positive_definite) {
      detail = "not positive definite";
      return false;
    }
  }

  // hand-check: the two-particle Hermite Hessian is [[3,-1],[-1,3]]
  auto zs2 = classify_zeros(find_roots<double>(hermite(2)));
  auto H2 = hessian(Configuration<double>::from_zeros(zs2), WeightSpec::classical_hermite(),
                    /*classical_convention=*/true);
  double dev = std::max(std::max(std::abs(H2[0][0] - 3), std::abs(H2[1][1] - 3)),
                        std::max(std::abs(H2[0][1] + 1), std::abs(H2[1][0] + 1)));
  if (dev > 1e-12) {
    detail = "hand Hessian deviation " + std::to_string(dev);
    return false;
  }
  return true;
}

// ---------- criterion 8: finite-difference oracle ----------

Configuration<double> random_config(std::mt19937_64& rng, const WeightSpec& w, int n, int m)
{
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<Complex<double>> eta_roots;
  if (w.eta.degree() > 0) eta_roots = find_roots<double>(w.eta).roots;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Configuration<double> c;
    for (int i = 0; i < n + m; ++i) c.y.push_back(u(rng));
    for (int j = 0; j < m; ++j) {
      double v = u(rng);
      c.mu.push_back(v >= 0 ? v + 0.3 : v - 0.3);
    }
    bool ok = true;
    for (size_t i = 0; i < c.y.size() && ok; ++i)
      for (size_t j = i + 1; j < c.y.size(); ++j)
        if (std::abs(c.y[i] - c.y[j]) < 0.3) {
          ok = false;
          break;
        }
    // keep every coordinate away from the weight's poles (zeros of eta)
    for (size_t i = 0; i < c.y.size() && ok; ++i) {
      Complex<double> z = c.point(static_cast<int>(i));
      for (const auto& r : eta_roots)
        if (std::min(abs(z - r), abs(conj(z) - r)) < 0.4) {
          ok = false;
          break;
        }
    }
    if (ok) return c;
  }
  throw std::runtime_error("random_config: rejection sampling failed");
}

bool fd_oracle(const std::vector<Instance>& examples, std::string& detail)
{
  std::mt19937_64 rng(20260824);
  for (const auto& inst : examples) {
    auto w = weight_of(inst.lambda);
    auto zs = classify_zeros(find_roots<double>(exceptional_hermite(inst.lambda, inst.n)));
    const int n = zs.n_real(), m = zs.n_complex();
    for (int rep = 0; rep < 20; ++rep) {
      auto c = random_config(rng, w, n, m);
      auto g = gradient(c, w);
      const double hg = 1e-5, hh = 1e-4;
      for (size_t i = 0; i < c.y.size(); ++i) {
        auto cp = c, cm = c;
        cp.y[i] += hg;
        cm.y[i] -= hg;
        double fd = (log_abs_T_sq(cp, w) - log_abs_T_sq(cm, w)) / (2 * hg);
        if (std::abs(fd - g[i]) > 1e-6 * std::max(1.0, std::abs(g[i]))) {
          detail = "gradient mismatch " + std::to_string(std::abs(fd - g[i]));
          return false;
        }
      }
      auto H = hessian(c, w);  // of -log|T|^2
      for (size_t i = 0; i < c.y.size(); ++i) {
        auto cp = c, cm = c;
        cp.y[i] += hh;
        cm.y[i] -= hh;
        auto gp = gradient(cp, w), gm = gradient(cm, w);
        for (size_t j = 0; j < c.y.size(); ++j) {
          double fd = -(gp[j] - gm[j]) / (2 * hh);
          if (std::abs(fd - H[j][i]) > 1e-5 * std::max(1.0, std::abs(H[j][i]))) {
            detail = "hessian mismatch " + std::to_string(std::abs(fd - H[j][i]));
            return false;
          }
        }
      }
    }
  }
  return true;
}

// ---------- criterion 9: condition reporting ----------

bool condition_reporting(const std::vector<ExampleOutcome*>& outs, std::string& detail)
{
  for (const auto* e : outs) {
    const auto& c = e->rep.conditions;
    const size_t total = static_cast<size_t>(e->rep.n_real + e->rep.n_complex);
    if (c.margin_per_zero_at_zero.size() != total ||
        c.margin_per_zero_at_real_part.size() != total ||
        c.margin_real_rows.size() != static_cast<size_t>(e->rep.n_real) ||
        c.margin_complex_rows.size() != static_cast<size_t>(e->rep.n_complex)) {
      detail = "margin vectors malformed for (" + e->rep.partition + ")";
      return false;
    }
  }
  const auto& c3 = outs.back()->rep.conditions;
  bool ex3_fails = !c3.holds_domain || !c3.holds_per_zero_at_zero ||
                   !c3.holds_per_zero_at_real_part || !c3.holds_real_rows ||
                   !c3.holds_complex_rows;
  if (!ex3_fails) detail = "instance (2,2,3,3)/10 unexpectedly satisfies every condition";
  return ex3_fails;
}

}  // namespace

int main()
{
  auto e1 = run_instance("1,1,1,1", 8);
  auto e2 = run_instance("1,1,3,3", 8);
  auto e3 = run_instance("2,2,3,3", 10);
  criteria_123(e1, e2, e3);

  auto list4 = criterion4_instances();
  double s3dev = 0;
  double worst4 = stieltjes_worst<double>(list4, &s3dev);
  char buf4[128];
  std::snprintf(buf4, sizeof(buf4), "worst residual %.3g, worst S_3 deviation %.3g", worst4,
                s3dev);
  report(4, worst4 < 1e-8 && s3dev < 1e-8,
         "power-sum relations m=1,2,3 at 53-bit over " + std::to_string(list4.size()) +
             " instances; S_3 = x_j/2 for the exceptional family",
         buf4);

  std::vector<Instance> examples = {{Partition::parse("1,1,1,1"), 8},
                                    {Partition::parse("1,1,3,3"), 8},
                                    {Partition::parse("2,2,3,3"), 10}};
  double wg = 0, wc = 0;
  stationarity_residuals<double>(examples, &wg, &wc);
  char buf5[128];
  std::snprintf(buf5, sizeof(buf5), "worst gradient %.3g, worst identity residual %.3g", wg, wc);
  report(5, wg < 1e-7 && wc < 1e-8,
         "stationarity gradient < 1e-7 and corollary identities < 1e-8 at the zeros", buf5);

  report(6, ode_residual_exact(list4),
         "fitted ODE constant gives an identically-zero residual polynomial (exact)");

  std::string detail7;
  report(7, classical_oracle(detail7),
         "classical multistart oracle (Hermite 3,4; Laguerre a=1/2; Jacobi a=b=1/2) + hand "
         "Hessian",
         detail7);

  std::string detail8;
  report(8, fd_oracle(examples, detail8),
         "analytic gradient/Hessian match central differences on 20 random configurations "
         "per instance",
         detail8);

  std::string detail9;
  std::vector<ExampleOutcome*> outs = {&e1, &e2, &e3};
  report(9, condition_reporting(outs, detail9),
         "condition margins reported under both interpretations; (2,2,3,3)/10 fails at "
         "least one condition",
         detail9);

  double worst4h = stieltjes_worst<Float256>(list4, nullptr);
  double wgh = 0, wch = 0;
  stationarity_residuals<Float256>(examples, &wgh, &wch);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "relations %.3g, gradient %.3g, identities %.3g", worst4h,
                wgh, wch);
  report(10, worst4h < 1e-20 && wgh < 1e-20 && wch < 1e-20,
         "all residuals below 1e-20 at 256-bit precision", buf);

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures;
}
