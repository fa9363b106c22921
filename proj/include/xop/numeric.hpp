// Copyright (c) 2026 xopzeros contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <type_traits>

namespace xop {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 256-bit binary significand, used for the high-precision lane.
using Float256 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>>;

using std::abs;  // scalar overloads join the Complex ones below

template <class R>
struct precision_traits;

template <>
struct precision_traits<double> {
  static constexpr int bits = 53;
  static double default_tol() { return 1e-13; }
  static constexpr int out_digits = 17;
};

template <>
struct precision_traits<Float256> {
  static constexpr int bits = 256;
  static Float256 default_tol() { return Float256("1e-30"); }
  static constexpr int out_digits = 78;
};

template <class R>
R to_real(const Rational& q)
{
  if constexpr (std::is_same_v<R, double>) {
    // Route through Float256 so huge integer parts do not hit inf/inf.
    return to_real<Float256>(q).convert_to<double>();
  } else {
    return R(numerator(q)) / R(denominator(q));
  }
}

template <class R>
struct Complex {
  R re{};
  R im{};

  Complex() = default;
  Complex(R r) : re(std::move(r)) {}
  Complex(R r, R i) : re(std::move(r)), im(std::move(i)) {}

  Complex operator-() const { return {-re, -im}; }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b)
  {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const R& s, const Complex& a) { return {s * a.re, s * a.im}; }
  friend Complex operator*(const Complex& a, const R& s) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const R& s) { return {a.re / s, a.im / s}; }
  friend Complex operator/(const Complex& a, const Complex& b)
  {
    R d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }

  Complex& operator+=(const Complex& b) { re += b.re; im += b.im; return *this; }
  Complex& operator-=(const Complex& b) { re -= b.re; im -= b.im; return *this; }
  Complex& operator*=(const Complex& b) { *this = *this * b; return *this; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

template <class R>
Complex<R> conj(const Complex<R>& z) { return {z.re, -z.im}; }

template <class R>
R norm(const Complex<R>& z) { return z.re * z.re + z.im * z.im; }

template <class R>
R abs(const Complex<R>& z)
{
  using std::sqrt;
  return sqrt(norm(z));
}

template <class R>
R arg(const Complex<R>& z)
{
  using std::atan2;
  return atan2(z.im, z.re);
}

// Principal branch.
template <class R>
Complex<R> log(const Complex<R>& z)
{
  using std::log;
  return {log(xop::abs(z)), xop::arg(z)};
}

}  // namespace xop
