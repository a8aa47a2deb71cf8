#pragma once

#include <cmath>

#include "mvspace/multivector.hpp"

namespace mvspace {

// a + iota b with iota = e12. iota squares to -1 and commutes with scalars,
// so this pair follows ordinary complex arithmetic.
struct ComplexLike {
  double re = 0.0;
  double im = 0.0;

  // exp(iota theta)
  static ComplexLike unit(double theta) { return {std::cos(theta), std::sin(theta)}; }
  static ComplexLike polar(double r, double theta) { return {r * std::cos(theta), r * std::sin(theta)}; }

  // Scalar part and e12 coefficient; other blades must vanish.
  static ComplexLike from_multivector(const Multivector& m, double tol = kDefaultTolerance);

  constexpr ComplexLike operator+(const ComplexLike& o) const { return {re + o.re, im + o.im}; }
  constexpr ComplexLike operator-(const ComplexLike& o) const { return {re - o.re, im - o.im}; }
  constexpr ComplexLike operator-() const { return {-re, -im}; }
  constexpr ComplexLike operator*(const ComplexLike& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  constexpr ComplexLike operator*(double s) const { return {re * s, im * s}; }
  friend constexpr ComplexLike operator*(double s, const ComplexLike& z) { return z * s; }
  ComplexLike operator/(const ComplexLike& o) const;

  constexpr ComplexLike conj() const { return {re, -im}; }
  constexpr double norm_squared() const { return re * re + im * im; }
  double abs() const { return std::hypot(re, im); }
  double arg() const { return std::atan2(im, re); }

  Multivector lift() const { return Multivector::from_parts(re, {}, {0.0, 0.0, im}, 0.0); }
};

}  // namespace mvspace
