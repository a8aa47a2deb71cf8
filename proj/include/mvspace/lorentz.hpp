#pragma once

#include "mvspace/multivector.hpp"
#include "mvspace/spacetime.hpp"

namespace mvspace {

// Conjugation operator X -> L X L_dagger with L L_dagger = 1.
class LorentzOperator {
 public:
  // Throws InvariantError unless l * l_dagger = 1 to kDefaultTolerance
  // (relative to |l| |l_dagger|).
  LorentzOperator(const Multivector& l, const Multivector& l_dagger);

  const Multivector& l() const { return l_; }
  const Multivector& l_dagger() const { return l_dagger_; }

  Multivector apply(const Multivector& x) const;
  Event apply(const Event& e) const;

 private:
  Multivector l_;
  Multivector l_dagger_;
};

// Boost by rapidity phi along v_hat composed with a rotation by theta about
// w_hat. Arguments are full angles; the operator is built from the halves,
//
//   L = exp(-phi v_hat / 2) exp(-i w_hat theta / 2),
//   L_dagger = exp(i w_hat theta / 2) exp(phi v_hat / 2),
//
// so that apply() rotates anticlockwise about w_hat and boosts with the
// same sign convention as boost_field. The rotation acts first.
LorentzOperator make_operator(double phi, const Vector3& v_hat, double theta, const Vector3& w_hat);

// Single mixed exponential L = exp(-(phi v_hat + i w_hat theta) / 2) with
// L_dagger = exp(+(phi v_hat + i w_hat theta) / 2), evaluated by series.
LorentzOperator thomas_operator(double phi, const Vector3& v_hat, double theta, const Vector3& w_hat);

// Electromagnetic field F = E + i c B.
class FieldMultivector {
 public:
  FieldMultivector(const Vector3& e, const Vector3& b, double c = 1.0);

  // Scalar and trivector parts must vanish (InvariantError otherwise).
  static FieldMultivector from_multivector(const Multivector& m, double c = 1.0);

  const Vector3& e() const { return e_; }
  const Vector3& b() const { return b_; }
  double c() const { return c_; }

  Multivector as_multivector() const;

 private:
  Vector3 e_;
  Vector3 b_;
  double c_;
};

// F' = exp(-v_hat phi / 2) F exp(v_hat phi / 2).
FieldMultivector boost_field(const FieldMultivector& f, double phi, const Vector3& v_hat);

// Unit vector along the part of x perpendicular to v_hat. Throws
// DegenerateGeometryError when x has no such part.
Vector3 boost_perpendicular(const Vector3& x, const Vector3& v_hat);

// Time direction under which boost_event reproduces the textbook boost:
// perpendicular to both v_hat and x, oriented as v_perp x v_hat.
Vector3 boost_time_direction(const Vector3& x, const Vector3& v_hat);

// X' = exp(-v_perp phi / 2) X exp(v_perp phi / 2) with v_perp from
// boost_perpendicular. For t = t_s * boost_time_direction(x, v_hat) this
// gives x_par' = gamma (x_par - v t_s), unchanged x_perp and
// t_s' = gamma (t_s - v x_par / c^2). Throws DegenerateGeometryError when
// x is parallel to v_hat; use boost_event_components for that case.
Event boost_event(const Event& x, double phi, const Vector3& v_hat);

// Textbook component form of the same boost for an event given as a
// position and a signed scalar time along `t_hat` (any unit vector
// orthogonal to the result). Used as the fallback for x parallel to v.
struct BoostedComponents {
  Vector3 x;
  double t;
};
BoostedComponents boost_event_components(const Vector3& x, double t, double phi, const Vector3& v_hat, double c = 1.0);

// r = -n I n.
Vector3 reflect(const Vector3& incident, const Vector3& n);

// v' = exp(-i u_hat theta / 2) v exp(i u_hat theta / 2), anticlockwise about u_hat.
Vector3 rotate(const Vector3& v, double theta, const Vector3& u_hat);

}  // namespace mvspace
