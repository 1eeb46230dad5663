#include "mollow/hydrogenic.hpp"

#include <cmath>
#include <numbers>

#include "mollow/errors.hpp"

namespace mollow {

namespace {

const std::string subshell = "SPDFGHIK";

bool is_pair(const BoundState& a, const BoundState& b, int na, int la, int nb, int lb) {
    return a.n == na && a.l == la && b.n == nb && b.l == lb;
}

} // namespace

BoundState make_bound_state(int Z, int n, int l) {
    if (Z < 1)
        throw ValidationError("bound state: Z must be >= 1, got " + std::to_string(Z));
    if (n < 1)
        throw ValidationError("bound state: n must be >= 1, got " + std::to_string(n));
    if (l < 0 || l >= n)
        throw ValidationError("bound state: need 0 <= l < n, got n=" + std::to_string(n) +
                              " l=" + std::to_string(l));
    std::string label = std::to_string(n);
    label += (l < static_cast<int>(subshell.size())) ? subshell[l] : '?';
    return BoundState{Z, n, l, label};
}

double hydrogen_energy(const BoundState& state, const PhysicalConstants& constants) {
    const double za = state.Z * constants.alpha;
    return -za * za * constants.electron_mass / (2.0 * state.n * state.n);
}

double contact_density(const BoundState& state, const PhysicalConstants& constants) {
    if (state.l >= 1)
        return 0.0; // psi(0) = 0 for any l >= 1
    const double zam = state.Z * constants.alpha * constants.electron_mass;
    const double n = state.n;
    return zam * zam * zam / (std::numbers::pi * n * n * n);
}

double expectation_p_squared(const BoundState& state, const PhysicalConstants& constants) {
    // <p^2> = -2 m E_n
    const double zam = state.Z * constants.alpha * constants.electron_mass;
    return zam * zam / (static_cast<double>(state.n) * state.n);
}

double transition_frequency(const BoundState& g, const BoundState& e,
                            const PhysicalConstants& constants) {
    return hydrogen_energy(e, constants) - hydrogen_energy(g, constants);
}

double dipole_z_element(const BoundState& g, const BoundState& e,
                        const PhysicalConstants& constants) {
    if (g.Z != e.Z)
        throw UnsupportedTransition("dipole element: states have different Z");
    if (std::abs(e.l - g.l) != 1)
        throw UnsupportedTransition("dipole-forbidden pair " + g.label + "-" + e.label +
                                    " (need |l_e - l_g| = 1)");
    if (is_pair(g, e, 1, 0, 2, 1) || is_pair(e, g, 1, 0, 2, 1)) {
        // radial integral 128 sqrt(6)/243 a, angular factor 1/sqrt(3)
        const double a = 1.0 / (g.Z * constants.alpha * constants.electron_mass);
        return 128.0 * std::numbers::sqrt2 / 243.0 * a;
    }
    throw UnsupportedTransition("dipole element for " + g.label + "-" + e.label +
                                " not in the implemented table (1S-2P only)");
}

double dipole_p_squared(const BoundState& g, const BoundState& e,
                        const PhysicalConstants& constants) {
    const double z = dipole_z_element(g, e, constants);
    const double w = std::abs(transition_frequency(g, e, constants));
    const double m = constants.electron_mass;
    return m * m * w * w * z * z;
}

double einstein_a(double alpha, double omega, double z_element_sq) {
    return 4.0 / 3.0 * alpha * omega * omega * omega * z_element_sq;
}

double decay_rate(const BoundState& g, const BoundState& e,
                  const PhysicalConstants& constants,
                  std::optional<double> measured_gamma) {
    if (measured_gamma)
        return *measured_gamma;
    const double z = dipole_z_element(g, e, constants);
    const double w = std::abs(transition_frequency(g, e, constants));
    return einstein_a(constants.alpha, w, z * z);
}

} // namespace mollow
