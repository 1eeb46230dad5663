// hydrogenic.hpp - Schroedinger-Coulomb bound states and the matrix elements
// that feed the radiative-shift formulas: level energies, contact densities
// <delta^3(r)>, momentum expectations <p^2>, the 1S-2P dipole element, and the
// dipole decay rate.
//
// All values are in natural units (hbar = c = epsilon0 = 1, energies in units
// of the electron mass); see constants.hpp for conversions.

#pragma once

#include <optional>
#include <string>

#include "mollow/constants.hpp"

namespace mollow {

struct BoundState {
    int Z = 1; // nuclear charge number, >= 1
    int n = 1; // principal quantum number, >= 1
    int l = 0; // orbital angular momentum, 0 <= l < n
    std::string label; // e.g. "1S", "2P"
};

// Validates the quantum numbers and builds the spectroscopic label.
BoundState make_bound_state(int Z, int n, int l);

// E_n = -(Z alpha)^2 m / (2 n^2)
double hydrogen_energy(const BoundState& state, const PhysicalConstants& constants);

// <delta^3(r)> = (Z alpha m)^3 / (pi n^3) for l = 0; exactly 0 for l >= 1.
double contact_density(const BoundState& state, const PhysicalConstants& constants);

// <p^2> = (Z alpha m)^2 / n^2 (virial theorem for Coulomb states)
double expectation_p_squared(const BoundState& state, const PhysicalConstants& constants);

// omega_R = E_e - E_g, positive for e above g
double transition_frequency(const BoundState& g, const BoundState& e,
                            const PhysicalConstants& constants);

// |<e|z|g>| for a linearly polarized drive coupling to the m = 0 sublevel.
// Implemented table: hydrogenic 1S-2P, where the radial integral gives
// <2p_z|z|1s> = (128 sqrt(2) / 243) a_0 / Z.  Throws UnsupportedTransition
// for any pair outside the table (including dipole-forbidden pairs).
double dipole_z_element(const BoundState& g, const BoundState& e,
                        const PhysicalConstants& constants);

// |<p>_eg|^2 = m^2 omega_R^2 |<e|z|g>|^2 (position form, exact frequency)
double dipole_p_squared(const BoundState& g, const BoundState& e,
                        const PhysicalConstants& constants);

// Einstein-A coefficient from the m = 0 dipole element z_eg:
//   Gamma = (4/3) alpha omega^3 |z_eg|^2.
// For 2p(m=0) -> 1s the polarization sum collapses onto the z component, so
// this single-sublevel form already is the full rate; the same convention is
// used consistently wherever a dipole moment enters (see required_power).
double einstein_a(double alpha, double omega, double z_element_sq);

// Decay rate of the e -> g transition.  A supplied measured rate overrides
// the computed Einstein-A value.
double decay_rate(const BoundState& g, const BoundState& e,
                  const PhysicalConstants& constants,
                  std::optional<double> measured_gamma = std::nullopt);

} // namespace mollow
