#include "mvspace/schrodinger.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "mvspace/errors.hpp"

namespace mvspace {

namespace {

constexpr double kMaxTailMass = 1e-10;
constexpr int kMinNodes = 64;
constexpr double kMinRangeSigmas = 6.0;
constexpr long kMaxSimpsonPanels = 1L << 24;

double scaled_time(const WavePacketParams& p, double t) { return p.hbar * p.sigma * p.sigma * t / p.m; }

double centre(const WavePacketParams& p, double t) { return group_velocity(p) * t; }

// Least-squares parabola y = c0 + c1 u + c2 u^2.
std::array<double, 3> fit_parabola(const std::vector<double>& u, const std::vector<double>& y) {
  std::array<std::array<double, 4>, 3> a{};
  for (std::size_t k = 0; k < u.size(); ++k) {
    const std::array<double, 3> basis = {1.0, u[k], u[k] * u[k]};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) a[i][j] += basis[i] * basis[j];
      a[i][3] += basis[i] * y[k];
    }
  }
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    std::swap(a[col], a[pivot]);
    if (a[col][col] == 0.0) throw ArgumentError("parabola fit is singular");
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return {a[0][3] / a[0][0], a[1][3] / a[1][1], a[2][3] / a[2][2]};
}

ComplexLike evaluate(const WavePacketParams& p, const QuadraturePropagator* q, Evaluator e, double x, double t) {
  return e == Evaluator::closed_form ? closed_form(p, x, t) : (*q)(x, t);
}

template <class F>
double trapezoid(F&& f, double a, double b, int samples) {
  if (samples < 2) throw ArgumentError("need at least two samples");
  const double h = (b - a) / (samples - 1);
  double sum = 0.5 * (f(a) + f(b));
  for (int i = 1; i < samples - 1; ++i) sum += f(a + i * h);
  return sum * h;
}

}  // namespace

void WavePacketParams::validate() const {
  for (double v : {sigma, k0, m, hbar})
    if (!std::isfinite(v) || !(v > 0.0)) throw ArgumentError("wave packet parameters sigma, k0, m, hbar must be positive");
}

QuadraturePropagator::QuadraturePropagator(const WavePacketParams& params, const QuadratureSpec& spec)
    : params_(params), spec_(spec) {
  params_.validate();
  if (spec_.nodes < kMinNodes) throw AccuracyError("quadrature needs at least 64 nodes");
  if (!(spec_.range_sigmas >= kMinRangeSigmas)) throw AccuracyError("quadrature window must cover at least 6 sigma");
  if (std::erfc(spec_.range_sigmas / std::numbers::sqrt2) > kMaxTailMass)
    throw AccuracyError("quadrature window leaves tail mass above 1e-10");
  if (!(spec_.panels_per_radian >= 1.0)) throw AccuracyError("Simpson resolution must be at least one panel per radian");
  if (spec_.rule != QuadratureRule::simpson) gh_ = quadrature::gauss_hermite(spec_.nodes);
  scale_ = std::sqrt(params_.sigma / params_.k0) / (std::pow(std::numbers::pi, 0.25) * std::sqrt(2.0 * std::numbers::pi));
}

QuadratureRule QuadraturePropagator::rule_at(double x, double t) const {
  if (spec_.rule == QuadratureRule::simpson) return QuadratureRule::simpson;
  // With k = k0 + sqrt(2) sigma u the integrand is exp(-u^2) times
  // exp(iota (beta u - a u^2) + const). The node capacity bound was
  // calibrated against the exact Gaussian integral.
  const double beta = std::numbers::sqrt2 * params_.sigma * (x - centre(params_, t));
  const double a = scaled_time(params_, t);
  const double load = std::abs(beta) + 8.0 * std::abs(a);
  const double capacity = 1.1 * std::sqrt(2.0 * spec_.nodes);
  if (load <= capacity) return QuadratureRule::gauss_hermite;
  if (spec_.rule == QuadratureRule::gauss_hermite)
    throw AccuracyError("oscillation exceeds the capacity of " + std::to_string(spec_.nodes) + " Gauss-Hermite nodes");
  return QuadratureRule::simpson;
}

ComplexLike QuadraturePropagator::operator()(double x, double t) const {
  const WavePacketParams& p = params_;
  const auto integrand_phase = [&](double k) { return k * x - p.hbar * k * k * t / (2.0 * p.m); };

  ComplexLike sum{};
  if (rule_at(x, t) == QuadratureRule::gauss_hermite) {
    const double step = std::numbers::sqrt2 * p.sigma;
    for (std::size_t j = 0; j < gh_.nodes.size(); ++j)
      sum = sum + ComplexLike::unit(integrand_phase(p.k0 + step * gh_.nodes[j])) * gh_.weights[j];
    sum = sum * step;
  } else {
    const double half = spec_.range_sigmas * p.sigma;
    const double omega = std::abs(x - centre(p, t)) + p.hbar * std::abs(t) * half / p.m;
    const double panels = std::max(256.0, std::ceil(2.0 * half * omega * spec_.panels_per_radian));
    if (panels > kMaxSimpsonPanels) throw AccuracyError("Simpson fallback would need too many panels");
    sum = quadrature::simpson(
        [&](double k) {
          const double q = (k - p.k0) / p.sigma;
          return ComplexLike::unit(integrand_phase(k)) * std::exp(-0.5 * q * q);
        },
        p.k0 - half, p.k0 + half, static_cast<int>(panels));
  }
  return sum * scale_;
}

ComplexLike propagate_quadrature(const WavePacketParams& params, double x, double t, const QuadratureSpec& spec) {
  return QuadraturePropagator(params, spec)(x, t);
}

ComplexLike closed_form(const WavePacketParams& p, double x, double t) {
  p.validate();
  const double s4 = std::pow(p.sigma, 4);
  const double d = p.m * p.m + s4 * p.hbar * p.hbar * t * t;
  const double xm = x - centre(p, t);
  const double amplitude = std::pow(p.sigma, 1.5) * std::sqrt(p.m / p.k0) / (std::pow(std::numbers::pi, 0.25) * std::pow(d, 0.25)) *
                           std::exp(-p.sigma * p.sigma * p.m * p.m * xm * xm / (2.0 * d));
  const double phase = p.hbar * p.k0 * p.k0 * t / (2.0 * p.m) + p.k0 * xm +
                       p.m * p.hbar * t * s4 * xm * xm / (2.0 * d) - 0.5 * std::atan(scaled_time(p, t));
  return ComplexLike::polar(amplitude, phase);
}

double spread(const WavePacketParams& p, double t) {
  p.validate();
  return std::sqrt(2.0 * (p.m * p.m + std::pow(p.sigma, 4) * p.hbar * p.hbar * t * t)) / (p.sigma * p.m);
}

double group_velocity(const WavePacketParams& p) { return p.hbar * p.k0 / p.m; }

double rotation_rate_reference(const WavePacketParams& p) { return p.hbar * p.k0 * p.k0 / (2.0 * p.m); }

double phase_rotation_rate(const WavePacketParams& p, const TimeWindow& window, int samples, Evaluator evaluator) {
  p.validate();
  if (!p.narrow()) throw ArgumentError("phase rotation fit requires the narrow-packet regime k0 / sigma >= 5");
  if (!(window.end > window.begin)) throw ArgumentError("phase window must have end > begin");
  if (scaled_time(p, window.begin) < 1.0)
    throw ArgumentError("phase window starts inside the arctan transient (hbar sigma^2 t / m < 1)");
  const double w0 = rotation_rate_reference(p);
  const double length = window.end - window.begin;
  if (length * w0 < 2.0 * std::numbers::pi) throw ArgumentError("phase window is shorter than one rotation");
  if (samples < 3) throw ArgumentError("phase fit needs at least three samples");

  // Keep successive phase increments well below pi for unwrapping.
  const int n = std::max(samples, static_cast<int>(std::ceil(4.0 * length * w0 / std::numbers::pi)) + 1);
  std::optional<QuadraturePropagator> q;
  if (evaluator == Evaluator::quadrature) q.emplace(p);

  const double dt = length / (n - 1);
  double sum_t = 0.0, sum_y = 0.0, sum_tt = 0.0, sum_ty = 0.0;
  double previous = 0.0, unwrapped = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = window.begin + i * dt;
    const double raw = evaluate(p, q ? &*q : nullptr, evaluator, centre(p, t), t).arg();
    if (i == 0) {
      unwrapped = raw;
    } else {
      unwrapped += std::remainder(raw - previous, 2.0 * std::numbers::pi);
    }
    previous = raw;
    const double u = t - window.begin;
    sum_t += u;
    sum_y += unwrapped;
    sum_tt += u * u;
    sum_ty += u * unwrapped;
  }
  return (n * sum_ty - sum_t * sum_y) / (n * sum_tt - sum_t * sum_t);
}

double fit_spread(const WavePacketParams& p, double t, int samples, double half_width_spreads, Evaluator evaluator) {
  p.validate();
  if (samples < 5) throw ArgumentError("spread fit needs at least five samples");
  if (!(half_width_spreads > 0.0)) throw ArgumentError("fit window must be positive");
  std::optional<QuadraturePropagator> q;
  if (evaluator == Evaluator::quadrature) q.emplace(p);

  const double xc = centre(p, t);
  const double half = half_width_spreads * spread(p, t);
  std::vector<double> u(samples), y(samples);
  for (int i = 0; i < samples; ++i) {
    u[i] = -half + 2.0 * half * i / (samples - 1);
    y[i] = std::log(evaluate(p, q ? &*q : nullptr, evaluator, xc + u[i], t).abs());
  }
  const auto coeffs = fit_parabola(u, y);
  if (!(coeffs[2] < 0.0)) throw ArgumentError("sampled modulus is not Gaussian-shaped");
  return std::sqrt(-1.0 / coeffs[2]);
}

double envelope_centroid(const WavePacketParams& p, double t, int samples, Evaluator evaluator) {
  p.validate();
  std::optional<QuadraturePropagator> q;
  if (evaluator == Evaluator::quadrature) q.emplace(p);
  const double xc = centre(p, t);
  const double half = 10.0 * spread(p, t);
  const auto density = [&](double x) { return evaluate(p, q ? &*q : nullptr, evaluator, x, t).norm_squared(); };
  const double mass = trapezoid(density, xc - half, xc + half, samples);
  const double moment = trapezoid([&](double x) { return x * density(x); }, xc - half, xc + half, samples);
  return moment / mass;
}

double packet_norm(const WavePacketParams& p, double t, int samples, Evaluator evaluator) {
  p.validate();
  std::optional<QuadraturePropagator> q;
  if (evaluator == Evaluator::quadrature) q.emplace(p);
  const double xc = centre(p, t);
  const double half = 10.0 * spread(p, t);
  return trapezoid([&](double x) { return evaluate(p, q ? &*q : nullptr, evaluator, x, t).norm_squared(); },
                   xc - half, xc + half, samples);
}

std::vector<PacketSample> sample_packet(const WavePacketParams& p, double t, double x_begin, double x_end, int samples,
                                        const QuadratureSpec& spec) {
  if (samples < 1) throw ArgumentError("need at least one sample");
  if (samples > 1 && !(x_end > x_begin)) throw ArgumentError("x range must have end > begin");
  const QuadraturePropagator q(p, spec);
  std::vector<PacketSample> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double x = samples == 1 ? x_begin : x_begin + (x_end - x_begin) * i / (samples - 1);
    out.push_back({x, q(x, t), closed_form(p, x, t)});
  }
  return out;
}

}  // namespace mvspace
