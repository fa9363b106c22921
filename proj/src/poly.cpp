// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#include "xop/poly.hpp"

#include <sstream>

namespace xop {

namespace {
const Rational kZero{0};
}

void ExactPoly::trim()
{
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ExactPoly ExactPoly::constant(Rational c)
{
  if (c == 0) return {};
  return ExactPoly({std::move(c)});
}

ExactPoly ExactPoly::x() { return ExactPoly({Rational(0), Rational(1)}); }

ExactPoly ExactPoly::monomial(int k, Rational c)
{
  if (c == 0) return {};
  std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
  v.back() = std::move(c);
  return ExactPoly(std::move(v));
}

const Rational& ExactPoly::coeff(int k) const
{
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(k)];
}

const Rational& ExactPoly::leading() const
{
  if (c_.empty()) return kZero;
  return c_.back();
}

ExactPoly ExactPoly::derivative(int order) const
{
  std::vector<Rational> v = c_;
  for (int o = 0; o < order && !v.empty(); ++o) {
    std::vector<Rational> d;
    d.reserve(v.size() > 0 ? v.size() - 1 : 0);
    for (size_t k = 1; k < v.size(); ++k) d.push_back(Rational(static_cast<long>(k)) * v[k]);
    v = std::move(d);
  }
  return ExactPoly(std::move(v));
}

ExactPoly ExactPoly::monic() const
{
  if (is_zero()) return {};
  return (Rational(1) / leading()) * (*this);
}

Rational ExactPoly::eval_rational(const Rational& x) const { return eval<Rational>(x); }

ExactPoly operator+(const ExactPoly& a, const ExactPoly& b)
{
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
  return ExactPoly(std::move(v));
}

ExactPoly operator-(const ExactPoly& a, const ExactPoly& b)
{
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) v[k] -= b.c_[k];
  return ExactPoly(std::move(v));
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b)
{
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return ExactPoly(std::move(v));
}

ExactPoly operator*(const Rational& s, const ExactPoly& a)
{
  if (s == 0) return {};
  std::vector<Rational> v = a.c_;
  for (auto& c : v) c *= s;
  return ExactPoly(std::move(v));
}

std::pair<ExactPoly, ExactPoly> ExactPoly::divmod(const ExactPoly& a, const ExactPoly& b)
{
  if (b.is_zero()) throw std::invalid_argument("ExactPoly::divmod: division by zero polynomial");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  if (a.degree() < db) return {ExactPoly{}, a};
  std::vector<Rational> quo(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    Rational& rk = rem[static_cast<size_t>(k)];
    if (rk == 0) continue;
    Rational f = rk / b.leading();
    quo[static_cast<size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k - db + j)] -= f * b.coeff(j);
  }
  return {ExactPoly(std::move(quo)), ExactPoly(std::move(rem))};
}

ExactPoly ExactPoly::exact_div(const ExactPoly& a, const ExactPoly& b)
{
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("ExactPoly::exact_div: nonzero remainder");
  return q;
}

ExactPoly ExactPoly::gcd(const ExactPoly& a, const ExactPoly& b)
{
  ExactPoly u = a, v = b;
  while (!v.is_zero()) {
    ExactPoly r = divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

std::string ExactPoly::str(const std::string& var) const
{
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeff(k);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational a = c > 0 ? c : Rational(-c);
    if (a != 1 || k == 0) os << a.str();
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace xop
