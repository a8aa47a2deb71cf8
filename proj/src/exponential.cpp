#include "mvspace/exponential.hpp"

#include <cmath>
#include <string>

#include "mvspace/errors.hpp"

namespace mvspace {

Multivector exp_general(const Multivector& m, double tol, int max_terms) {
  if (!(tol > 0.0)) throw ArgumentError("exp_general: tolerance must be positive");
  if (max_terms < 1) throw ArgumentError("exp_general: max_terms must be positive");

  int squarings = 0;
  Multivector arg = m;
  while (arg.max_abs() >= 0.5) {
    arg = arg * 0.5;
    ++squarings;
  }

  Multivector sum = Multivector::scalar(1.0);
  Multivector term = sum;
  bool converged = false;
  for (int n = 1; n < max_terms; ++n) {
    term = term * arg / static_cast<double>(n);
    sum = sum + term;
    if (term.max_abs() < tol * sum.max_abs()) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw ConvergenceError("exp_general: series did not converge within " + std::to_string(max_terms) + " terms");

  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

Multivector exp_vector(const Rapidity& r) { return exp_vector(r.phi, r.axis); }

Multivector exp_vector(double phi, const Vector3& axis) {
  require_unit(axis, "boost axis");
  if (!std::isfinite(phi)) throw ArgumentError("rapidity must be finite");
  return Multivector::from_parts(std::cosh(phi), axis * std::sinh(phi), {}, 0.0);
}

Multivector exp_bivector(double theta, const Vector3& axis) {
  require_unit(axis, "rotation axis");
  if (!std::isfinite(theta)) throw ArgumentError("rotation angle must be finite");
  return Multivector::from_parts(std::cos(theta), {}, axis * std::sin(theta), 0.0);
}

double rapidity_from_speed(double speed_ratio) {
  if (!std::isfinite(speed_ratio) || speed_ratio < 0.0)
    throw ArgumentError("speed ratio must be a non-negative finite number");
  if (speed_ratio >= 1.0) throw SuperluminalError("speed ratio must be below 1, got " + std::to_string(speed_ratio));
  return std::atanh(speed_ratio);
}

}  // namespace mvspace
