// dressed.hpp - semiclassical dressed states of a driven two-level atom:
// mixing angle, generalized Rabi frequency, dressed-manifold energies and the
// Mollow sideband frequencies.

#pragma once

#include <array>
#include <optional>
#include <utility>

#include "mollow/errors.hpp"

namespace mollow {

// Drive parameters in a fixed frequency unit.  Delta = omega_L - omega_R,
// h = Omega / Gamma (cached when Gamma is known).
struct DriveParameters {
    double omega_L = 0.0;
    double Omega = 0.0; // resonant Rabi frequency, >= 0
    double Delta = 0.0; // signed detuning
    double h = 0.0;     // Omega / Gamma, 0 when Gamma unknown
};

// Builds DriveParameters and enforces the consistency checks:
// Omega >= 0, h = Omega/Gamma for Gamma > 0, and, when omega_R is supplied,
// Delta = omega_L - omega_R.
DriveParameters make_drive(double Omega, double Delta,
                           std::optional<double> Gamma = std::nullopt,
                           std::optional<double> omega_L = std::nullopt,
                           std::optional<double> omega_R = std::nullopt);

// Unique theta in [0, pi/2] with sin(2 theta) = Omega/Omega_R and
// cos(2 theta) = -Delta/Omega_R.  This is the branch of tan(2 theta) =
// -Omega/Delta under which the dressed-level linear corrections collapse to
// the closed-form sideband shift (checked as a cross-module property test).
// Throws DegenerateDrive for Omega = Delta = 0.
double mixing_angle(double Omega, double Delta);

// Omega_R = sqrt(Omega^2 + Delta^2)
double generalized_rabi(double Omega, double Delta);

// Dressed pair of one laser-photon manifold.  The photon index never enters
// the numerics; it is kept as an optional display tag.
struct DressedPair {
    double theta = 0.0;
    double omega_R_gen = 0.0; // generalized Rabi frequency
    double E_plus = 0.0;
    double E_minus = 0.0;
    // rows are the |+> and |-> coefficients over {|e,n>, |g,n+1>}:
    // (cos theta, sin theta) and (-sin theta, cos theta)
    std::array<std::array<double, 2>, 2> amplitudes{};
    std::optional<int> manifold;
};

// E_{+-,n} = (n + 1/2) omega_L + omega_R/2 +- Omega_R/2
std::pair<double, double> dressed_energies(int n, double omega_L, double omega_R,
                                           double Omega_R);

// omega_{+-} = omega_L +- Omega_R (differences of adjacent-manifold energies)
std::pair<double, double> sideband_frequencies(double omega_L, double Omega_R);

DressedPair make_dressed_pair(double Omega, double Delta,
                              std::optional<int> manifold = std::nullopt,
                              double omega_L = 0.0, double omega_R = 0.0);

} // namespace mollow
