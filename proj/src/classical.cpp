// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#include "xop/classical.hpp"

#include <stdexcept>

namespace xop {

const char* family_name(Family f)
{
  switch (f) {
    case Family::hermite: return "hermite";
    case Family::laguerre: return "laguerre";
    case Family::jacobi: return "jacobi";
  }
  return "?";
}

Family family_from_name(const std::string& name)
{
  if (name == "hermite") return Family::hermite;
  if (name == "laguerre") return Family::laguerre;
  if (name == "jacobi") return Family::jacobi;
  throw std::invalid_argument("unknown family: " + name);
}

ExactPoly hermite(int n)
{
  if (n < 0) throw std::invalid_argument("hermite: n must be non-negative");
  ExactPoly hkm1 = ExactPoly::constant(1);
  if (n == 0) return hkm1;
  ExactPoly hk({Rational(0), Rational(2)});  // 2x
  const ExactPoly two_x({Rational(0), Rational(2)});
  for (int k = 1; k < n; ++k) {
    // H_{k+1} = 2x H_k - 2k H_{k-1}
    ExactPoly next = two_x * hk - Rational(2 * k) * hkm1;
    hkm1 = std::move(hk);
    hk = std::move(next);
  }
  return hk;
}

ExactPoly laguerre(int n, const Rational& alpha)
{
  if (n < 0) throw std::invalid_argument("laguerre: n must be non-negative");
  if (alpha <= -1) throw std::out_of_range("laguerre: alpha must exceed -1");
  ExactPoly lkm1 = ExactPoly::constant(1);
  if (n == 0) return lkm1;
  ExactPoly lk({alpha + 1, Rational(-1)});  // 1 + alpha - x
  for (int k = 1; k < n; ++k) {
    // (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}
    ExactPoly a({Rational(2 * k + 1) + alpha, Rational(-1)});
    ExactPoly next = (Rational(1) / Rational(k + 1)) * (a * lk - (Rational(k) + alpha) * lkm1);
    lkm1 = std::move(lk);
    lk = std::move(next);
  }
  return lk;
}

ExactPoly jacobi(int n, const Rational& alpha, const Rational& beta)
{
  if (n < 0) throw std::invalid_argument("jacobi: n must be non-negative");
  if (alpha <= -1 || beta <= -1) throw std::out_of_range("jacobi: alpha, beta must exceed -1");
  ExactPoly pkm1 = ExactPoly::constant(1);
  if (n == 0) return pkm1;
  ExactPoly pk({(alpha - beta) / 2, (alpha + beta + 2) / 2});
  const Rational s = alpha + beta;
  for (int k = 2; k <= n; ++k) {
    // 2k(k+s)(2k+s-2) P_k = (2k+s-1)[(2k+s)(2k+s-2)x + a^2-b^2] P_{k-1}
    //                        - 2(k+a-1)(k+b-1)(2k+s) P_{k-2}
    Rational c0 = Rational(2 * k) * (Rational(k) + s) * (Rational(2 * k) + s - 2);
    Rational c1 = Rational(2 * k) + s - 1;
    ExactPoly lin({alpha * alpha - beta * beta, (Rational(2 * k) + s) * (Rational(2 * k) + s - 2)});
    Rational c2 = 2 * (Rational(k) + alpha - 1) * (Rational(k) + beta - 1) * (Rational(2 * k) + s);
    ExactPoly next = (Rational(1) / c0) * (c1 * (lin * pk) - c2 * pkm1);
    pkm1 = std::move(pk);
    pk = std::move(next);
  }
  return pk;
}

ExactPoly classical_poly(Family family, int n, const Rational& alpha, const Rational& beta)
{
  switch (family) {
    case Family::hermite: return hermite(n);
    case Family::laguerre: return laguerre(n, alpha);
    case Family::jacobi: return jacobi(n, alpha, beta);
  }
  throw std::logic_error("classical_poly: bad family");
}

}  // namespace xop
