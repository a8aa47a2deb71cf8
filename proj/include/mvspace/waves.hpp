#pragma once

#include "mvspace/complex_like.hpp"
#include "mvspace/multivector.hpp"
#include "mvspace/spacetime.hpp"

namespace mvspace {

// K = k + i w / c with wave vector k orthogonal to the frequency vector w.
class WaveMultivector {
 public:
  // Throws InvariantError for non-orthogonal k, w.
  WaveMultivector(const Vector3& k, const Vector3& w, double c = 1.0);

  const Vector3& k() const { return k_; }
  const Vector3& w() const { return w_; }
  double c() const { return c_; }

  Multivector as_multivector() const;

 private:
  Vector3 k_;
  Vector3 w_;
  double c_;
};

// k = p / hbar, w = E / hbar. Throws ArgumentError for hbar <= 0.
WaveMultivector wave_from_momentum(const MomentumMultivector& p, double hbar);
MomentumMultivector momentum_from_wave(const WaveMultivector& k, double hbar);

// <K^2> + (m c / hbar)^2, zero on shell. m = 0 checks a null wave.
double dispersion_residual(const WaveMultivector& k, double m, double hbar);

// k . x - w . t. Throws UnitError if K and X carry different c.
double phase(const WaveMultivector& k, const Event& x);

// Plane wave exp(i K . X) at formal coordinates (x, t); the time vector
// need not be orthogonal to x here.
ComplexLike plane_wave(const WaveMultivector& k, const Vector3& x, const Vector3& t);

// Sample layout for the six-coordinate finite-difference check. Samples
// form a 2-D slice: space_samples points along space_axis spaced by
// sample_spacing from x0, crossed with time_samples points along time_axis
// spaced by sample_spacing / c from t0. Derivatives use central second
// differences with step h in every space coordinate and h / c in every
// time coordinate.
struct GridSpec {
  Vector3 x0{};
  Vector3 t0{};
  double h = 1e-2;
  double sample_spacing = 0.37;
  int space_axis = 0;
  int time_axis = 2;
  int space_samples = 5;
  int time_samples = 5;
};

// max over the slice of |(grad_t^2 - grad_x^2) psi + (m c / hbar)^2 psi|
// for psi = exp(i K . X). O(h^2) on shell; approaches
// |dispersion_residual| off shell. Throws ArgumentError for a degenerate grid.
double kg_residual(const WaveMultivector& k, double m, double hbar, const GridSpec& grid);

// (P + i m c)(P - i m c), zero whenever P^2 = -m^2 c^2.
Multivector dirac_factorization_residual(const MomentumMultivector& p, double m);

using Involution = Multivector (*)(const Multivector&);

// (P / hbar) psi - inv(psi) M. M^2 must be a scalar (ArgumentError
// otherwise). Also asserts the chaining identity (P/hbar)^2 psi = psi M^2 and
// throws InvariantError when it fails, i.e. when M^2 != (P/hbar)^2.
Multivector dirac_equation_residual(const Multivector& psi, const MomentumMultivector& p, const Multivector& m,
                                    double hbar = 1.0, Involution involution = &star);

// (P/hbar)((P/hbar) psi) - (psi M) M.
Multivector dirac_chaining_residual(const Multivector& psi, const MomentumMultivector& p, const Multivector& m,
                                    double hbar = 1.0);

struct Current {
  double rho = 0.0;
  Vector3 j{};
};

// psi reverse(psi) = rho + J.
Current current(const Multivector& psi);

}  // namespace mvspace
