#pragma once

#include "mvspace/multivector.hpp"

namespace mvspace {

inline constexpr double kExpTolerance = 1e-14;
inline constexpr int kExpMaxTerms = 200;

// Boost parameter: rapidity along a unit direction.
struct Rapidity {
  double phi = 0.0;
  Vector3 axis{1.0, 0.0, 0.0};
};

// Taylor series of exp(M) with scaling and squaring. The argument is halved
// until its largest coefficient is below 0.5, the series is summed until a
// term falls below tol relative to the running sum, and the result is
// squared back. Throws ArgumentError for tol <= 0 and ConvergenceError if
// max_terms is exhausted.
Multivector exp_general(const Multivector& m, double tol = kExpTolerance, int max_terms = kExpMaxTerms);

// cosh(phi) + axis sinh(phi).
Multivector exp_vector(const Rapidity& r);
Multivector exp_vector(double phi, const Vector3& axis);

// cos(theta) + i axis sin(theta), the exponential of the bivector i axis theta.
Multivector exp_bivector(double theta, const Vector3& axis);

// atanh(|v|/c). Throws SuperluminalError for ratios >= 1 and ArgumentError
// for negative or non-finite ratios.
double rapidity_from_speed(double speed_ratio);

}  // namespace mvspace
