#pragma once

#include <vector>

#include "mvspace/complex_like.hpp"
#include "mvspace/quadrature.hpp"

namespace mvspace {

// Free Gaussian wave packet psi = a + iota b, iota = e12.
//
// The momentum amplitude is exp(-(k - k0)^2 / (2 sigma^2)) in wavenumber,
// which is the amplitude whose transform gives the closed form below. The
// closed form carries the prefactor sigma^(3/2) sqrt(m / k0) / pi^(1/4)
// (m^2 + sigma^4 hbar^2 t^2)^(-1/4); the quadrature path is scaled to the
// same overall constant. No unit-norm normalization is applied.
struct WavePacketParams {
  double sigma = 1.0;
  double k0 = 10.0;
  double m = 1.0;
  double hbar = 1.0;

  // Throws ArgumentError unless every field is positive and finite.
  void validate() const;
  double a_ratio() const { return k0 / sigma; }
  // k0 / sigma >= 5
  bool narrow() const { return a_ratio() >= 5.0; }
};

enum class QuadratureRule { automatic, gauss_hermite, simpson };

struct QuadratureSpec {
  int nodes = 128;
  // Half-width of the Simpson window in units of sigma.
  double range_sigmas = 12.0;
  // Simpson panels per radian of the fastest local oscillation.
  double panels_per_radian = 4.0;
  QuadratureRule rule = QuadratureRule::automatic;
};

// Numerical propagation of the packet: int A(k) exp(iota (k x - hbar k^2 t / 2m)) dk.
//
// Gauss-Hermite in k about k0 with scale sqrt(2) sigma is used while the
// integrand's oscillation fits the node count; otherwise composite Simpson
// over k0 +- range_sigmas sigma. Throws AccuracyError for fewer than 64
// nodes, a window narrower than 6 sigma, an estimated tail mass above
// 1e-10, or a forced Gauss-Hermite rule beyond its node capacity.
class QuadraturePropagator {
 public:
  explicit QuadraturePropagator(const WavePacketParams& params, const QuadratureSpec& spec = {});

  ComplexLike operator()(double x, double t) const;

  // Rule that operator() selects at (x, t).
  QuadratureRule rule_at(double x, double t) const;

 private:
  WavePacketParams params_;
  QuadratureSpec spec_;
  quadrature::GaussHermiteRule gh_;
  double scale_;
};

ComplexLike propagate_quadrature(const WavePacketParams& params, double x, double t, const QuadratureSpec& spec = {});

// Closed form with the Gaussian envelope, the iota phase terms and the
// -(iota/2) arctan(hbar sigma^2 t / m) factor.
ComplexLike closed_form(const WavePacketParams& params, double x, double t);

// sqrt(2 (m^2 + sigma^4 hbar^2 t^2)) / (sigma m); |psi| ~ exp(-x_m^2 / s^2).
double spread(const WavePacketParams& params, double t);

// hbar k0 / m
double group_velocity(const WavePacketParams& params);

// hbar k0^2 / (2 m), the expected steady rotation rate of the phase.
double rotation_rate_reference(const WavePacketParams& params);

enum class Evaluator { closed_form, quadrature };

struct TimeWindow {
  double begin = 0.0;
  double end = 0.0;
};

// Slope of a least-squares line through the unwrapped phase of psi at the
// moving centre x = hbar k0 t / m over the window. Requires the narrow
// regime, a window starting at hbar sigma^2 t / m >= 1 (past the arctan
// transient) and spanning at least one rotation at the reference rate;
// throws ArgumentError otherwise.
double phase_rotation_rate(const WavePacketParams& params, const TimeWindow& window, int samples = 256,
                           Evaluator evaluator = Evaluator::closed_form);

// Envelope width from a least-squares parabola through ln|psi| sampled
// over centre +- half_width_spreads * s(t).
double fit_spread(const WavePacketParams& params, double t, int samples = 101, double half_width_spreads = 3.0,
                  Evaluator evaluator = Evaluator::quadrature);

// int x |psi|^2 dx / int |psi|^2 dx over centre +- 10 s(t), trapezoidal.
double envelope_centroid(const WavePacketParams& params, double t, int samples = 2001,
                         Evaluator evaluator = Evaluator::closed_form);

// int |psi|^2 dx over centre +- 10 s(t), trapezoidal.
double packet_norm(const WavePacketParams& params, double t, int samples = 2001,
                   Evaluator evaluator = Evaluator::quadrature);

struct PacketSample {
  double x;
  ComplexLike numeric;
  ComplexLike analytic;
};

// psi at `samples` evenly spaced points of [x_begin, x_end].
std::vector<PacketSample> sample_packet(const WavePacketParams& params, double t, double x_begin, double x_end,
                                        int samples, const QuadratureSpec& spec = {});

}  // namespace mvspace
