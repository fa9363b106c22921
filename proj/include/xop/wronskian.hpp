// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "xop/partition.hpp"
#include "xop/poly.hpp"

namespace xop {

/// Wronskian determinant of the given polynomials: entry (i,j) is the i-th
/// derivative of polys[j]. Fraction-free Bareiss elimination over the exact
/// polynomial ring; the zero polynomial is a legal result.
ExactPoly wronskian(std::span<const ExactPoly> polys);
ExactPoly wronskian(const std::vector<ExactPoly>& polys);

/// Degrees of the Hermite entries indexed by a partition: lambda_i + i - 1.
std::vector<int> hermite_entry_degrees(const Partition& lambda);

/// eta_H = Wr[H_{lambda_1}, H_{lambda_2+1}, ..., H_{lambda_r+r-1}].
/// Requires a double partition; degree of the result is |lambda|.
ExactPoly eta_hermite(const Partition& lambda);

/// True iff n indexes a member of the exceptional family: s = n - |lambda| + r
/// is a non-negative integer outside the entry-degree set.
bool hermite_index_admissible(const Partition& lambda, int n);

/// H^(lambda)_n = Wr[H_{lambda_1}, ..., H_{lambda_r+r-1}, H_{n-|lambda|+r}],
/// degree n. Requires a double partition and an admissible n.
ExactPoly exceptional_hermite(const Partition& lambda, int n);

/// The unique exact rational C with
///   eta y'' - 2(x eta + eta') y' + (eta'' + 2x eta' + C eta) y == 0
/// as a polynomial identity. Throws std::domain_error if no such C exists.
Rational fit_ode_constant(const ExactPoly& y, const ExactPoly& eta);

}  // namespace xop
