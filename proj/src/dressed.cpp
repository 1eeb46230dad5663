#include "mollow/dressed.hpp"

#include <cmath>

namespace mollow {

DriveParameters make_drive(double Omega, double Delta,
                           std::optional<double> Gamma,
                           std::optional<double> omega_L,
                           std::optional<double> omega_R) {
    if (!(Omega >= 0.0))
        throw ValidationError("drive: Omega must be >= 0");
    DriveParameters d;
    d.Omega = Omega;
    d.Delta = Delta;
    if (Gamma) {
        if (!(*Gamma > 0.0))
            throw ValidationError("drive: Gamma must be > 0");
        d.h = Omega / *Gamma;
    }
    if (omega_L)
        d.omega_L = *omega_L;
    if (omega_L && omega_R) {
        const double expect = *omega_L - *omega_R;
        const double scale = std::max({std::abs(Delta), std::abs(expect), 1e-300});
        if (std::abs(Delta - expect) > 1e-9 * scale)
            throw ValidationError("drive: Delta inconsistent with omega_L - omega_R");
    }
    return d;
}

double mixing_angle(double Omega, double Delta) {
    if (Omega == 0.0 && Delta == 0.0)
        throw DegenerateDrive();
    // atan2 picks 2*theta in [0, pi] since Omega >= 0
    return 0.5 * std::atan2(Omega, -Delta);
}

double generalized_rabi(double Omega, double Delta) {
    return std::hypot(Omega, Delta);
}

std::pair<double, double> dressed_energies(int n, double omega_L, double omega_R,
                                           double Omega_R) {
    if (n < 0)
        throw ValidationError("dressed_energies: manifold index must be >= 0");
    const double base = (n + 0.5) * omega_L + 0.5 * omega_R;
    return {base + 0.5 * Omega_R, base - 0.5 * Omega_R};
}

std::pair<double, double> sideband_frequencies(double omega_L, double Omega_R) {
    return {omega_L + Omega_R, omega_L - Omega_R};
}

DressedPair make_dressed_pair(double Omega, double Delta,
                              std::optional<int> manifold,
                              double omega_L, double omega_R) {
    DressedPair p;
    p.theta = mixing_angle(Omega, Delta);
    p.omega_R_gen = generalized_rabi(Omega, Delta);
    const double c = std::cos(p.theta);
    const double s = std::sin(p.theta);
    p.amplitudes = {{{c, s}, {-s, c}}};
    p.manifold = manifold;
    auto [ep, em] = dressed_energies(manifold.value_or(0), omega_L, omega_R, p.omega_R_gen);
    p.E_plus = ep;
    p.E_minus = em;
    return p;
}

} // namespace mollow
