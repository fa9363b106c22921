// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#include "xop/wronskian.hpp"

#include <algorithm>
#include <stdexcept>

#include "xop/classical.hpp"

namespace xop {

ExactPoly wronskian(std::span<const ExactPoly> polys)
{
  if (polys.empty()) throw std::invalid_argument("wronskian: empty input");
  const int k = static_cast<int>(polys.size());
  std::vector<std::vector<ExactPoly>> m(static_cast<size_t>(k),
                                        std::vector<ExactPoly>(static_cast<size_t>(k)));
  for (int j = 0; j < k; ++j) {
    m[0][static_cast<size_t>(j)] = polys[static_cast<size_t>(j)];
    for (int i = 1; i < k; ++i)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          m[static_cast<size_t>(i - 1)][static_cast<size_t>(j)].derivative();
  }

  // Bareiss: entries stay exact-divisible by the previous pivot.
  int sign = 1;
  ExactPoly prev = ExactPoly::constant(1);
  for (int s = 0; s < k - 1; ++s) {
    if (m[s][s].is_zero()) {
      int t = s + 1;
      while (t < k && m[t][s].is_zero()) ++t;
      if (t == k) return {};  // zero column, singular
      std::swap(m[s], m[t]);
      sign = -sign;
    }
    const ExactPoly pivot = m[s][s];
    for (int i = s + 1; i < k; ++i) {
      for (int j = s + 1; j < k; ++j)
        m[i][j] = ExactPoly::exact_div(pivot * m[i][j] - m[i][s] * m[s][j], prev);
      m[i][s] = {};
    }
    prev = pivot;
  }
  ExactPoly det = m[static_cast<size_t>(k - 1)][static_cast<size_t>(k - 1)];
  return sign == 1 ? det : -det;
}

ExactPoly wronskian(const std::vector<ExactPoly>& polys)
{
  return wronskian(std::span<const ExactPoly>(polys));
}

std::vector<int> hermite_entry_degrees(const Partition& lambda)
{
  std::vector<int> degs;
  const auto& p = lambda.parts();
  for (size_t i = 0; i < p.size(); ++i) degs.push_back(p[i] + static_cast<int>(i));
  return degs;
}

ExactPoly eta_hermite(const Partition& lambda)
{
  if (!lambda.is_double())
    throw std::invalid_argument("eta_hermite: partition must be double, got (" + lambda.str() + ")");
  if (lambda.length() == 0) return ExactPoly::constant(1);
  std::vector<ExactPoly> entries;
  for (int d : hermite_entry_degrees(lambda)) entries.push_back(hermite(d));
  ExactPoly eta = wronskian(entries);
  if (eta.degree() != lambda.weight())
    throw std::logic_error("eta_hermite: unexpected degree");
  return eta;
}

bool hermite_index_admissible(const Partition& lambda, int n)
{
  const int s = n - lambda.weight() + lambda.length();
  if (s < 0) return false;
  auto degs = hermite_entry_degrees(lambda);
  return std::find(degs.begin(), degs.end(), s) == degs.end();
}

ExactPoly exceptional_hermite(const Partition& lambda, int n)
{
  if (!lambda.is_double())
    throw std::invalid_argument("exceptional_hermite: partition must be double");
  if (n < 0) throw std::invalid_argument("exceptional_hermite: n must be non-negative");
  if (!hermite_index_admissible(lambda, n))
    throw std::invalid_argument("exceptional_hermite: inadmissible degree n=" + std::to_string(n) +
                                " for partition (" + lambda.str() + ")");
  std::vector<ExactPoly> entries;
  for (int d : hermite_entry_degrees(lambda)) entries.push_back(hermite(d));
  entries.push_back(hermite(n - lambda.weight() + lambda.length()));
  ExactPoly h = wronskian(entries);
  if (h.degree() != n) throw std::logic_error("exceptional_hermite: unexpected degree");
  return h;
}

Rational fit_ode_constant(const ExactPoly& y, const ExactPoly& eta)
{
  if (y.is_zero()) throw std::invalid_argument("fit_ode_constant: y must be nonzero");
  if (eta.is_zero()) throw std::invalid_argument("fit_ode_constant: eta must be nonzero");
  const ExactPoly x = ExactPoly::x();
  const ExactPoly ep = eta.derivative();
  const ExactPoly epp = ep.derivative();
  ExactPoly a = eta * y.derivative(2) - Rational(2) * ((x * eta + ep) * y.derivative()) +
                (epp + Rational(2) * (x * ep)) * y;
  ExactPoly b = eta * y;
  const int k = b.degree();
  Rational c = -a.coeff(k) / b.coeff(k);
  ExactPoly residual = a + c * b;
  if (!residual.is_zero())
    throw std::domain_error("fit_ode_constant: no constant satisfies the equation");
  return c;
}

}  // namespace xop
