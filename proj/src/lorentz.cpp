#include "mvspace/lorentz.hpp"

#include <algorithm>
#include <cmath>

#include "mvspace/errors.hpp"
#include "mvspace/exponential.hpp"

namespace mvspace {

LorentzOperator::LorentzOperator(const Multivector& l, const Multivector& l_dagger) : l_(l), l_dagger_(l_dagger) {
  const double scale = std::max(1.0, l.max_abs() * l_dagger.max_abs());
  if (max_abs_diff(l * l_dagger, Multivector::scalar(1.0)) > kDefaultTolerance * scale)
    throw InvariantError("Lorentz operator: L L_dagger != 1");
}

Multivector LorentzOperator::apply(const Multivector& x) const { return l_ * x * l_dagger_; }

Event LorentzOperator::apply(const Event& e) const { return Event::from_multivector(apply(e.as_multivector()), e.c()); }

LorentzOperator make_operator(double phi, const Vector3& v_hat, double theta, const Vector3& w_hat) {
  const Multivector l = exp_vector(-0.5 * phi, v_hat) * exp_bivector(-0.5 * theta, w_hat);
  const Multivector l_dagger = exp_bivector(0.5 * theta, w_hat) * exp_vector(0.5 * phi, v_hat);
  return LorentzOperator(l, l_dagger);
}

LorentzOperator thomas_operator(double phi, const Vector3& v_hat, double theta, const Vector3& w_hat) {
  require_unit(v_hat, "boost axis");
  require_unit(w_hat, "rotation axis");
  const Multivector generator = Multivector::from_parts(0.0, v_hat * (0.5 * phi), w_hat * (0.5 * theta), 0.0);
  return LorentzOperator(exp_general(-generator), exp_general(generator));
}

FieldMultivector::FieldMultivector(const Vector3& e, const Vector3& b, double c) : e_(e), b_(b), c_(c) {
  if (!std::isfinite(c) || !(c > 0.0)) throw ArgumentError("speed of light must be positive and finite");
  if (!is_finite(e) || !is_finite(b)) throw ArgumentError("field components must be finite");
}

FieldMultivector FieldMultivector::from_multivector(const Multivector& m, double c) {
  const double scale = m.max_abs();
  if (std::abs(m.scalar_part()) > 1e-9 * scale || std::abs(m.trivector_part()) > 1e-9 * scale)
    throw InvariantError("field multivector: scalar and trivector parts must vanish");
  return FieldMultivector(m.vector_part(), m.bivector_part() / c, c);
}

Multivector FieldMultivector::as_multivector() const { return Multivector::from_parts(0.0, e_, b_ * c_, 0.0); }

FieldMultivector boost_field(const FieldMultivector& f, double phi, const Vector3& v_hat) {
  const Multivector left = exp_vector(-0.5 * phi, v_hat);
  const Multivector right = exp_vector(0.5 * phi, v_hat);
  return FieldMultivector::from_multivector(left * f.as_multivector() * right, f.c());
}

Vector3 boost_perpendicular(const Vector3& x, const Vector3& v_hat) {
  require_unit(v_hat, "boost axis");
  const Vector3 perp = x - v_hat * dot(x, v_hat);
  const double n = norm(perp);
  if (n == 0.0 || n <= 1e-12 * norm(x))
    throw DegenerateGeometryError(
        "position is parallel to the boost direction, so the perpendicular boost axis is undefined; "
        "use boost_event_components instead");
  return perp / n;
}

Vector3 boost_time_direction(const Vector3& x, const Vector3& v_hat) {
  return cross(boost_perpendicular(x, v_hat), v_hat);
}

Event boost_event(const Event& x, double phi, const Vector3& v_hat) {
  const Vector3 v_perp = boost_perpendicular(x.x(), v_hat);
  const Multivector left = exp_vector(-0.5 * phi, v_perp);
  const Multivector right = exp_vector(0.5 * phi, v_perp);
  return Event::from_multivector(left * x.as_multivector() * right, x.c());
}

BoostedComponents boost_event_components(const Vector3& x, double t, double phi, const Vector3& v_hat, double c) {
  require_unit(v_hat, "boost axis");
  const double g = std::cosh(phi);
  const double v = c * std::tanh(phi);
  const double x_par = dot(x, v_hat);
  const Vector3 x_new = x + v_hat * (g * (x_par - v * t) - x_par);
  return {x_new, g * (t - v * x_par / (c * c))};
}

Vector3 reflect(const Vector3& incident, const Vector3& n) {
  require_unit(n, "reflection normal");
  const Multivector nm = Multivector::vector(n);
  return (-(nm * Multivector::vector(incident) * nm)).vector_part();
}

Vector3 rotate(const Vector3& v, double theta, const Vector3& u_hat) {
  const Multivector left = exp_bivector(-0.5 * theta, u_hat);
  const Multivector right = exp_bivector(0.5 * theta, u_hat);
  return (left * Multivector::vector(v) * right).vector_part();
}

}  // namespace mvspace
