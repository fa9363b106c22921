// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
//
// Python bindings for the main operations: exact construction, zero finding
// and classification, the electrostatic identities, energy gradients and
// Hessians, condition checks, and the scan/multistart experiments.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xop/report.hpp"

namespace py = pybind11;
using namespace xop;

namespace {

Partition make_partition(const std::string& literal)
{
  Partition lam = Partition::parse(literal);
  if (!lam.is_double())
    throw std::invalid_argument("partition " + lam.str() + " is not a double partition");
  return lam;
}

std::vector<std::string> poly_coeffs(const ExactPoly& p)
{
  std::vector<std::string> out;
  for (const Rational& c : p.coeffs()) out.push_back(rational_str(c));
  return out;
}

WeightSpec weight_for(const std::string& partition)
{
  Partition lam = make_partition(partition);
  return lam.length() == 0 ? WeightSpec::classical_hermite()
                           : WeightSpec::exceptional_hermite(lam);
}

}  // namespace

PYBIND11_MODULE(_xopzeros, m)
{
  m.doc() = "exceptional-orthogonal-polynomial zero explorer (C++ core)";

  py::class_<ZeroSet<double>>(m, "ZeroSet")
      .def_readonly("real_zeros", &ZeroSet<double>::real_zeros)
      .def_property_readonly("pairs",
                             [](const ZeroSet<double>& zs) {
                               std::vector<std::pair<double, double>> out;
                               for (const auto& p : zs.pairs) out.emplace_back(p.x, p.mu);
                               return out;
                             })
      .def_readonly("degree", &ZeroSet<double>::source_degree)
      .def("n_real", &ZeroSet<double>::n_real)
      .def("n_complex", &ZeroSet<double>::n_complex)
      .def("full_list", [](const ZeroSet<double>& zs) {
        std::vector<std::complex<double>> out;
        for (const auto& z : zs.full_list()) out.emplace_back(z.re, z.im);
        return out;
      });

  m.def(
      "build",
      [](const std::string& partition, int n) {
        return poly_coeffs(exceptional_hermite(make_partition(partition), n));
      },
      py::arg("partition"), py::arg("n"),
      "Exact coefficients (\"num/den\" strings, lowest degree first) of the "
      "degree-n exceptional Hermite polynomial for a double partition.");

  m.def(
      "zeros",
      [](const std::string& partition, int n) {
        return classify_zeros(find_roots<double>(exceptional_hermite(make_partition(partition), n)));
      },
      py::arg("partition"), py::arg("n"), "Find and classify all zeros.");

  m.def(
      "stieltjes_residuals",
      [](const std::string& partition, int n, int order) {
        Partition lam = make_partition(partition);
        OdeCoefficients ode = lam.length() == 0
                                  ? OdeCoefficients::classical(Family::hermite, n)
                                  : OdeCoefficients::exceptional_hermite_ode(lam, n);
        StieltjesPredictor pred(ode, order);
        auto full =
            classify_zeros(find_roots<double>(exceptional_hermite(lam, n))).full_list();
        std::vector<double> out;
        for (int j = 0; j < static_cast<int>(full.size()); ++j)
          out.push_back(abs(direct_sum(full, order, j) -
                            pred.predict(order, full[static_cast<size_t>(j)])));
        return out;
      },
      py::arg("partition"), py::arg("n"), py::arg("order"),
      "Per-zero |direct power sum - ODE prediction| for the given order.");

  m.def(
      "stationarity_residual",
      [](const std::string& partition, int n) {
        auto w = weight_for(partition);
        auto zs = classify_zeros(
            find_roots<double>(exceptional_hermite(make_partition(partition), n)));
        auto c = Configuration<double>::from_zeros(zs);
        double worst = 0;
        for (double g : gradient(c, w)) worst = std::max(worst, std::abs(g));
        return worst;
      },
      py::arg("partition"), py::arg("n"),
      "max |gradient of log|T|^2| at the zero configuration.");

  m.def(
      "hessian_eigenvalues",
      [](const std::string& partition, int n) {
        auto w = weight_for(partition);
        auto zs = classify_zeros(
            find_roots<double>(exceptional_hermite(make_partition(partition), n)));
        auto c = Configuration<double>::from_zeros(zs);
        return classify_hessian(hessian(c, w)).eigenvalues;
      },
      py::arg("partition"), py::arg("n"),
      "Ascending eigenvalues of the Hessian of -log|T|^2 at the zeros.");

  m.def(
      "scan_classification",
      [](const std::string& partition, int n, double window, double radius) {
        ScanSpec spec;
        spec.window = window;
        spec.radius = radius;
        auto w = weight_for(partition);
        auto zs = classify_zeros(
            find_roots<double>(exceptional_hermite(make_partition(partition), n)));
        return scan_class_name(classify_scan(scan_f(zs, w, spec), spec));
      },
      py::arg("partition"), py::arg("n"), py::arg("window") = 0.2, py::arg("radius") = 0.05,
      "Translation-scan classification around z = 0.");

  m.def(
      "reproduce_examples",
      []() {
        std::vector<py::dict> out;
        for (const auto& r : reproduce_examples()) {
          py::dict d;
          d["partition"] = r.partition;
          d["degree"] = r.degree;
          d["n_real"] = r.n_real;
          d["n_complex"] = r.n_complex;
          d["scan_classification"] = scan_class_name(r.scan_class);
          d["hessian_classification"] = hessian_class_name(r.hessian_class);
          d["stationarity_residual"] = r.stationarity_residual;
          out.push_back(std::move(d));
        }
        return out;
      },
      "Full pipeline for the three reference instances.");

  m.def(
      "maximize",
      [](int n, int starts, std::uint64_t seed) {
        auto w = WeightSpec::classical_hermite();
        auto box = zero_box(hermite(n));
        auto res = multistart_maximize(w, n, 0, {}, starts, seed, box.first, box.second);
        py::dict d;
        d["best_y"] = res.best.y;
        d["best_value"] = res.best_value;
        d["converged_starts"] = res.converged_starts;
        d["total_starts"] = res.total_starts;
        return d;
      },
      py::arg("n"), py::arg("starts") = 50, py::arg("seed") = 42,
      "Multistart ascent on log|T|^2 for the classical Hermite weight.");
}
