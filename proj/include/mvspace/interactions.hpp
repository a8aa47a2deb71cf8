#pragma once

#include <vector>

#include "mvspace/multivector.hpp"
#include "mvspace/spacetime.hpp"

namespace mvspace {

struct InteractionLedger {
  std::vector<MomentumMultivector> initial;
  std::vector<MomentumMultivector> final;
};

// sum(initial) - sum(final); the zero multivector for a conserving
// interaction. Throws ArgumentError for an empty side and UnitError when
// entries carry different speeds of light.
Multivector conservation_residual(const InteractionLedger& ledger);

// (h / m c)(1 - cos theta). Throws ArgumentError unless lambda_i, m, h, c > 0.
double compton_wavelength_shift(double lambda_i, double theta, double m, double h, double c);

struct ComptonSolution {
  double lambda_f = 0.0;
  // photon_i + electron_i -> photon_f + electron_f
  InteractionLedger ledger;
};

// Compton scattering solved from momentum-multivector conservation.
//
// Gauge: incoming photon momentum along e1, scattered photon in the e1-e2
// plane at angle theta, both photon energy directions and the resting
// electron's energy direction along e3. Squaring
//   (Gamma_i - Gamma_f) + P_i = P_f
// and using Gamma^2 = 0, P^2 = -m^2 c^2 leaves a scalar equation linear in
// |p_f|, whose coefficients are read off the algebra. The final electron is
// the ledger balance and is checked to be on shell.
ComptonSolution compton_solve_multivector(double lambda_i, double theta, double m, double h, double c);

}  // namespace mvspace
