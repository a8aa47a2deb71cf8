#pragma once

#include "mvspace/multivector.hpp"

namespace mvspace {

// Relative orthogonality tolerance for space/time vector pairs:
// |a . b| <= kOrthogonalityTolerance * |a| |b|.
inline constexpr double kOrthogonalityTolerance = 1e-9;

bool orthogonal(const Vector3& a, const Vector3& b, double rel_tol = kOrthogonalityTolerance);

// Spacetime event X = x + i c t with position x orthogonal to time vector t.
class Event {
 public:
  // Throws InvariantError when x and t are not orthogonal and
  // ArgumentError for a non-positive c.
  Event(const Vector3& x, const Vector3& t, double c = 1.0);

  // Removes the component of t along x before constructing.
  static Event projected(const Vector3& x, const Vector3& t, double c = 1.0);

  // Reads x from grade 1 and t from grade 2 / c. Scalar and trivector
  // parts must vanish relative to the magnitude of m.
  static Event from_multivector(const Multivector& m, double c = 1.0);

  const Vector3& x() const { return x_; }
  const Vector3& t() const { return t_; }
  double c() const { return c_; }

  Multivector as_multivector() const;

 private:
  Vector3 x_;
  Vector3 t_;
  double c_;
};

// x^2 - c^2 t^2, read from the scalar part of X^2. Throws InvariantError if
// the remaining grades of X^2 do not vanish.
double interval_squared(const Event& e);

// Event reached after proper time dtau moving at velocity v: t = gamma dtau t_hat,
// x = gamma dtau v.
Event worldline_step(double dtau, const Vector3& v, const Vector3& t_hat, double c = 1.0);

// 1 / sqrt(1 - v^2/c^2). Throws SuperluminalError for |v| >= c.
double gamma(const Vector3& v, double c = 1.0);

// Normalized part of e3 orthogonal to v, or e2 when v is parallel to e3.
Vector3 default_time_direction(const Vector3& v);

// gamma (v + i c t_hat).
Multivector proper_velocity(const Vector3& v, const Vector3& t_hat, double c = 1.0);

// P = p + i E / c with momentum p orthogonal to the energy vector E.
class MomentumMultivector {
 public:
  // Throws InvariantError for non-orthogonal p, E and ArgumentError for c <= 0.
  MomentumMultivector(const Vector3& p, const Vector3& energy, double c = 1.0);

  // Inverse of as_multivector; scalar and trivector parts must vanish.
  static MomentumMultivector from_multivector(const Multivector& m, double c = 1.0);

  const Vector3& p() const { return p_; }
  const Vector3& energy() const { return energy_; }
  double c() const { return c_; }

  Multivector as_multivector() const;

  // (E^2 - p^2 c^2) / c^4; m^2 for a massive particle, zero for a photon.
  double mass_squared() const;

 private:
  Vector3 p_;
  Vector3 energy_;
  double c_;
};

// p = gamma m v, E = gamma m c^2 t_hat. Throws ArgumentError for m <= 0,
// non-unit t_hat, or v not orthogonal to t_hat; SuperluminalError for |v| >= c.
MomentumMultivector momentum(double m, const Vector3& v, const Vector3& t_hat, double c = 1.0);

// Photon: Gamma = p + i |p| c_hat, i.e. E = |p| c c_hat.
MomentumMultivector photon_momentum(const Vector3& p, const Vector3& c_hat, double c = 1.0);

}  // namespace mvspace
