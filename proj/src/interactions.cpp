#include "mvspace/interactions.hpp"

#include <cmath>

#include "mvspace/errors.hpp"

namespace mvspace {

namespace {

void require_positive(double value, const char* what) {
  if (!std::isfinite(value) || !(value > 0.0)) throw ArgumentError(std::string(what) + " must be positive");
}

Multivector sum(const std::vector<MomentumMultivector>& side) {
  Multivector total;
  for (const auto& p : side) total = total + p.as_multivector();
  return total;
}

}  // namespace

Multivector conservation_residual(const InteractionLedger& ledger) {
  if (ledger.initial.empty() || ledger.final.empty())
    throw ArgumentError("interaction ledger needs at least one initial and one final state");
  const double c = ledger.initial.front().c();
  for (const auto* side : {&ledger.initial, &ledger.final})
    for (const auto& p : *side)
      if (p.c() != c) throw UnitError("interaction ledger mixes different speeds of light");
  return sum(ledger.initial) - sum(ledger.final);
}

double compton_wavelength_shift(double lambda_i, double theta, double m, double h, double c) {
  require_positive(lambda_i, "incident wavelength");
  require_positive(m, "mass");
  require_positive(h, "Planck constant");
  require_positive(c, "speed of light");
  if (!std::isfinite(theta)) throw ArgumentError("scattering angle must be finite");
  const double half = std::sin(0.5 * theta);
  return h / (m * c) * 2.0 * half * half;
}

ComptonSolution compton_solve_multivector(double lambda_i, double theta, double m, double h, double c) {
  require_positive(lambda_i, "incident wavelength");
  require_positive(m, "mass");
  require_positive(h, "Planck constant");
  require_positive(c, "speed of light");
  if (!std::isfinite(theta)) throw ArgumentError("scattering angle must be finite");

  const Vector3 e1{1.0, 0.0, 0.0};
  const Vector3 e3{0.0, 0.0, 1.0};
  const Vector3 out_dir{std::cos(theta), std::sin(theta), 0.0};

  const double p_i = h / lambda_i;
  const double mc = m * c;
  const MomentumMultivector photon_i = photon_momentum(e1 * p_i, e3, c);
  const MomentumMultivector electron_i = momentum(m, {}, e3, c);
  const Multivector gi = photon_i.as_multivector();
  const Multivector pi = electron_i.as_multivector();
  // Scattered photon per unit momentum magnitude.
  const Multivector gf_unit = photon_momentum(out_dir, e3, c).as_multivector();

  // (Gi - pf Gu)^2 + Pi (Gi - pf Gu) + (Gi - pf Gu) Pi + Pi^2 = -m^2 c^2
  //   => q pf^2 + b pf + a = 0 with q = <Gu^2> = 0 for a null photon.
  const double scale = mc * mc + p_i * p_i;
  const double q = (gf_unit * gf_unit).scalar_part();
  const double a = (gi * gi + pi * gi + gi * pi + pi * pi).scalar_part() + mc * mc;
  const double b = -(gi * gf_unit + gf_unit * gi + pi * gf_unit + gf_unit * pi).scalar_part();
  if (std::abs(q) > 1e-12 || (gf_unit * gf_unit).max_abs() > 1e-12)
    throw InvariantError("compton: scattered photon multivector is not null");
  if (!(std::abs(b) > 0.0)) throw InvariantError("compton: degenerate conservation relation");
  const double p_f = -a / b;
  if (!(p_f > 0.0) || !std::isfinite(p_f)) throw InvariantError("compton: no positive scattered momentum");

  const MomentumMultivector photon_f = photon_momentum(out_dir * p_f, e3, c);
  const MomentumMultivector electron_f =
      MomentumMultivector::from_multivector(gi + pi - photon_f.as_multivector(), c);

  const Multivector pf = electron_f.as_multivector();
  if (max_abs_diff(pf * pf, Multivector::scalar(-mc * mc)) > 1e-9 * scale)
    throw InvariantError("compton: recoil electron is off shell");

  return {h / p_f, {{photon_i, electron_i}, {photon_f, electron_f}}};
}

}  // namespace mvspace
