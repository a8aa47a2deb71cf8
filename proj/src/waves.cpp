#include "mvspace/waves.hpp"

#include <algorithm>
#include <cmath>

#include "mvspace/errors.hpp"

namespace mvspace {

namespace {

void require_hbar(double hbar) {
  if (!std::isfinite(hbar) || !(hbar > 0.0)) throw ArgumentError("hbar must be positive");
}

Vector3 unit_axis(int axis) {
  Vector3 e{};
  if (axis == 0) e.x = 1.0;
  if (axis == 1) e.y = 1.0;
  if (axis == 2) e.z = 1.0;
  return e;
}

}  // namespace

WaveMultivector::WaveMultivector(const Vector3& k, const Vector3& w, double c) : k_(k), w_(w), c_(c) {
  if (!std::isfinite(c) || !(c > 0.0)) throw ArgumentError("speed of light must be positive and finite");
  if (!is_finite(k) || !is_finite(w)) throw ArgumentError("wave vector components must be finite");
  if (!orthogonal(k, w)) throw InvariantError("wave vector and frequency vector must be orthogonal");
}

Multivector WaveMultivector::as_multivector() const { return Multivector::from_parts(0.0, k_, w_ / c_, 0.0); }

WaveMultivector wave_from_momentum(const MomentumMultivector& p, double hbar) {
  require_hbar(hbar);
  return WaveMultivector(p.p() / hbar, p.energy() / hbar, p.c());
}

MomentumMultivector momentum_from_wave(const WaveMultivector& k, double hbar) {
  require_hbar(hbar);
  return MomentumMultivector(k.k() * hbar, k.w() * hbar, k.c());
}

double dispersion_residual(const WaveMultivector& k, double m, double hbar) {
  require_hbar(hbar);
  if (!std::isfinite(m) || m < 0.0) throw ArgumentError("mass must be non-negative");
  const Multivector km = k.as_multivector();
  const double inv_compton = m * k.c() / hbar;
  return (km * km).scalar_part() + inv_compton * inv_compton;
}

double phase(const WaveMultivector& k, const Event& x) {
  if (k.c() != x.c()) throw UnitError("wave and event carry different speeds of light");
  return dot(k.k(), x.x()) - dot(k.w(), x.t());
}

ComplexLike plane_wave(const WaveMultivector& k, const Vector3& x, const Vector3& t) {
  return ComplexLike::unit(dot(k.k(), x) - dot(k.w(), t));
}

double kg_residual(const WaveMultivector& k, double m, double hbar, const GridSpec& grid) {
  require_hbar(hbar);
  if (!(grid.h > 0.0) || !std::isfinite(grid.h)) throw ArgumentError("grid step must be positive");
  if (!(grid.sample_spacing >= 0.0)) throw ArgumentError("sample spacing must be non-negative");
  if (grid.space_samples < 1 || grid.time_samples < 1) throw ArgumentError("grid needs at least one sample per axis");
  if (grid.space_axis < 0 || grid.space_axis > 2 || grid.time_axis < 0 || grid.time_axis > 2)
    throw ArgumentError("grid axes must be 0, 1 or 2");

  const double c = k.c();
  const double hx = grid.h;
  const double ht = grid.h / c;
  const double mass_term = (m * c / hbar) * (m * c / hbar);
  const Vector3 x_axis = unit_axis(grid.space_axis);
  const Vector3 t_axis = unit_axis(grid.time_axis);

  double worst = 0.0;
  for (int i = 0; i < grid.space_samples; ++i) {
    for (int j = 0; j < grid.time_samples; ++j) {
      const Vector3 x = grid.x0 + x_axis * (i * grid.sample_spacing);
      const Vector3 t = grid.t0 + t_axis * (j * grid.sample_spacing / c);
      const ComplexLike centre = plane_wave(k, x, t);

      ComplexLike lap_x{}, lap_t{};
      for (int a = 0; a < 3; ++a) {
        const Vector3 e = unit_axis(a);
        lap_x = lap_x + (plane_wave(k, x + e * hx, t) - 2.0 * centre + plane_wave(k, x - e * hx, t)) * (1.0 / (hx * hx));
        lap_t = lap_t + (plane_wave(k, x, t + e * ht) - 2.0 * centre + plane_wave(k, x, t - e * ht)) * (1.0 / (ht * ht));
      }
      const ComplexLike r = lap_t * (1.0 / (c * c)) - lap_x + centre * mass_term;
      worst = std::max(worst, r.abs());
    }
  }
  return worst;
}

Multivector dirac_factorization_residual(const MomentumMultivector& p, double m) {
  const Multivector pm = p.as_multivector();
  const Multivector imc = Multivector::pseudoscalar(m * p.c());
  return (pm + imc) * (pm - imc);
}

Multivector dirac_chaining_residual(const Multivector& psi, const MomentumMultivector& p, const Multivector& m,
                                    double hbar) {
  require_hbar(hbar);
  const Multivector k = p.as_multivector() / hbar;
  return k * (k * psi) - (psi * m) * m;
}

Multivector dirac_equation_residual(const Multivector& psi, const MomentumMultivector& p, const Multivector& m,
                                    double hbar, Involution involution) {
  require_hbar(hbar);
  const Multivector m2 = m * m;
  if (!is_grade(m2, 0, kDefaultTolerance * std::max(1.0, m2.max_abs())))
    throw ArgumentError("dirac equation: M^2 must be a scalar");

  const Multivector k = p.as_multivector() / hbar;
  const Multivector chain = dirac_chaining_residual(psi, p, m, hbar);
  const double scale = std::max(1.0, (k * k).max_abs()) * std::max(1.0, psi.max_abs());
  if (chain.max_abs() > 1e-10 * scale)
    throw InvariantError("dirac equation: chaining identity (P/hbar)^2 psi = psi M^2 fails; M^2 does not match P^2");

  return k * psi - involution(psi) * m;
}

Current current(const Multivector& psi) {
  const Multivector j = psi * reverse(psi);
  const double tol = 1e-12 * std::max(1.0, j.max_abs());
  if (grade(j, 2).max_abs() > tol || grade(j, 3).max_abs() > tol)
    throw InvariantError("current: psi reverse(psi) has bivector or trivector content");
  return {j.scalar_part(), j.vector_part()};
}

}  // namespace mvspace
