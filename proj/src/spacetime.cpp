#include "mvspace/spacetime.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mvspace/errors.hpp"

namespace mvspace {

namespace {

void require_speed_of_light(double c) {
  if (!std::isfinite(c) || !(c > 0.0)) throw ArgumentError("speed of light must be positive and finite");
}

// Scalar and trivector parts must be negligible against the grade-1/2 content.
void require_vector_bivector(const Multivector& m, const char* what) {
  const double scale = m.max_abs();
  if (std::abs(m.scalar_part()) > 1e-9 * scale || std::abs(m.trivector_part()) > 1e-9 * scale)
    throw InvariantError(std::string(what) + ": scalar and trivector parts must vanish");
}

}  // namespace

bool orthogonal(const Vector3& a, const Vector3& b, double rel_tol) {
  return std::abs(dot(a, b)) <= rel_tol * norm(a) * norm(b);
}

Event::Event(const Vector3& x, const Vector3& t, double c) : x_(x), t_(t), c_(c) {
  require_speed_of_light(c);
  if (!is_finite(x) || !is_finite(t)) throw ArgumentError("event coordinates must be finite");
  if (!orthogonal(x, t)) {
    std::ostringstream msg;
    msg << "event position " << x << " and time vector " << t << " are not orthogonal (x.t = " << dot(x, t) << ")";
    throw InvariantError(msg.str());
  }
}

Event Event::projected(const Vector3& x, const Vector3& t, double c) {
  const double xx = dot(x, x);
  if (xx == 0.0) return Event(x, t, c);
  return Event(x, t - x * (dot(x, t) / xx), c);
}

Event Event::from_multivector(const Multivector& m, double c) {
  require_speed_of_light(c);
  require_vector_bivector(m, "event multivector");
  return Event(m.vector_part(), m.bivector_part() / c, c);
}

Multivector Event::as_multivector() const { return Multivector::from_parts(0.0, x_, t_ * c_, 0.0); }

double interval_squared(const Event& e) {
  const Multivector x = e.as_multivector();
  const Multivector sq = x * x;
  const double scale = x.norm_squared();
  if (!is_grade(sq, 0, 1e-9 * scale)) throw InvariantError("X^2 has non-scalar content; x and t are not orthogonal");
  return sq.scalar_part();
}

Event worldline_step(double dtau, const Vector3& v, const Vector3& t_hat, double c) {
  require_unit(t_hat, "time direction");
  const double g = gamma(v, c);
  return Event(v * (g * dtau), t_hat * (g * dtau), c);
}

double gamma(const Vector3& v, double c) {
  require_speed_of_light(c);
  const double beta2 = dot(v, v) / (c * c);
  if (!(beta2 < 1.0)) throw SuperluminalError("speed must be below c");
  return 1.0 / std::sqrt(1.0 - beta2);
}

Vector3 default_time_direction(const Vector3& v) {
  const Vector3 e3{0.0, 0.0, 1.0};
  const double vv = dot(v, v);
  if (vv == 0.0) return e3;
  const Vector3 perp = e3 - v * (dot(v, e3) / vv);
  if (norm(perp) <= 1e-12) return {0.0, 1.0, 0.0};
  return normalized(perp);
}

Multivector proper_velocity(const Vector3& v, const Vector3& t_hat, double c) {
  require_unit(t_hat, "time direction");
  if (!orthogonal(v, t_hat)) throw ArgumentError("velocity must be orthogonal to the time direction");
  const double g = gamma(v, c);
  return Multivector::from_parts(0.0, v * g, t_hat * (g * c), 0.0);
}

MomentumMultivector::MomentumMultivector(const Vector3& p, const Vector3& energy, double c)
    : p_(p), energy_(energy), c_(c) {
  require_speed_of_light(c);
  if (!is_finite(p) || !is_finite(energy)) throw ArgumentError("momentum components must be finite");
  if (!orthogonal(p, energy)) throw InvariantError("momentum and energy vectors must be orthogonal");
}

MomentumMultivector MomentumMultivector::from_multivector(const Multivector& m, double c) {
  require_speed_of_light(c);
  require_vector_bivector(m, "momentum multivector");
  return MomentumMultivector(m.vector_part(), m.bivector_part() * c, c);
}

Multivector MomentumMultivector::as_multivector() const {
  return Multivector::from_parts(0.0, p_, energy_ / c_, 0.0);
}

double MomentumMultivector::mass_squared() const {
  const double c2 = c_ * c_;
  return (dot(energy_, energy_) - dot(p_, p_) * c2) / (c2 * c2);
}

MomentumMultivector momentum(double m, const Vector3& v, const Vector3& t_hat, double c) {
  if (!std::isfinite(m) || !(m > 0.0)) throw ArgumentError("mass must be positive");
  require_unit(t_hat, "time direction");
  if (!orthogonal(v, t_hat)) throw ArgumentError("velocity must be orthogonal to the time direction");
  const double g = gamma(v, c);
  return MomentumMultivector(v * (g * m), t_hat * (g * m * c * c), c);
}

MomentumMultivector photon_momentum(const Vector3& p, const Vector3& c_hat, double c) {
  require_unit(c_hat, "photon energy direction");
  if (!orthogonal(p, c_hat)) throw ArgumentError("photon momentum must be orthogonal to its energy direction");
  return MomentumMultivector(p, c_hat * (norm(p) * c), c);
}

}  // namespace mvspace
