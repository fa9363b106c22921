// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "xop/poly.hpp"

namespace xop {

enum class Family { hermite, laguerre, jacobi };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

/// Physicists' Hermite polynomial H_n, exact integer coefficients.
ExactPoly hermite(int n);

/// Generalized Laguerre polynomial L_n^(alpha), alpha > -1 rational.
ExactPoly laguerre(int n, const Rational& alpha);

/// Jacobi polynomial P_n^(alpha,beta), alpha, beta > -1 rational.
ExactPoly jacobi(int n, const Rational& alpha, const Rational& beta);

ExactPoly classical_poly(Family family, int n, const Rational& alpha = 0,
                         const Rational& beta = 0);

}  // namespace xop
