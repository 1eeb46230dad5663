#include "mollow/radiative.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "mollow/dressed.hpp"
#include "mollow/errors.hpp"

namespace mollow {

AtomicTransition make_transition(const BoundState& g, const BoundState& e,
                                 const PhysicalConstants& constants,
                                 std::optional<double> measured_gamma) {
    if (g.Z != e.Z)
        throw ValidationError("transition: states have different Z");
    AtomicTransition tr;
    tr.g = g;
    tr.e = e;
    tr.Z = g.Z;
    tr.omega_R = transition_frequency(g, e, constants);
    if (!(tr.omega_R > 0))
        throw ValidationError("transition: omega_R must be positive (e above g)");
    tr.Gamma = decay_rate(g, e, constants, measured_gamma);
    tr.p2_g = expectation_p_squared(g, constants);
    tr.p2_e = expectation_p_squared(e, constants);
    tr.p_eg_sq = dipole_p_squared(g, e, constants);
    tr.delta3_g = contact_density(g, constants);
    tr.delta3_e = contact_density(e, constants);
    return tr;
}

void validate_transition(const AtomicTransition& tr, const PhysicalConstants& constants,
                         double rel_tol) {
    auto check = [&](double have, double want, const char* name) {
        const double scale = std::max(std::abs(want), 1e-300);
        if (std::abs(have - want) > rel_tol * scale)
            throw ValidationError(std::string("transition record inconsistent in ") + name);
    };
    if (!(tr.omega_R > 0) || !(tr.Gamma > 0))
        throw ValidationError("transition: omega_R and Gamma must be positive");
    check(tr.omega_R, transition_frequency(tr.g, tr.e, constants), "omega_R");
    check(tr.p2_g, expectation_p_squared(tr.g, constants), "p2_g");
    check(tr.p2_e, expectation_p_squared(tr.e, constants), "p2_e");
    check(tr.p_eg_sq, dipole_p_squared(tr.g, tr.e, constants), "p_eg_sq");
    check(tr.delta3_g, contact_density(tr.g, constants), "delta3_g");
    check(tr.delta3_e, contact_density(tr.e, constants), "delta3_e");
}

double log_zalpha(int Z, double alpha) {
    const double za = Z * alpha;
    return std::log(1.0 / (za * za));
}

double bare_lamb_shift(const AtomicTransition& tr, const PhysicalConstants& constants) {
    const double m = constants.electron_mass;
    const double ell = log_zalpha(tr.Z, constants.alpha);
    const double prefactor =
        4.0 * constants.alpha * (tr.Z * constants.alpha) * ell / (3.0 * m * m);
    return prefactor * (tr.delta3_e - tr.delta3_g);
}

std::pair<double, double> approx_dressed_lamb(double theta, const AtomicTransition& tr,
                                              const PhysicalConstants& constants) {
    const double m = constants.electron_mass;
    const double ell = log_zalpha(tr.Z, constants.alpha);
    const double prefactor =
        4.0 * constants.alpha * (tr.Z * constants.alpha) * ell / (3.0 * m * m);
    const double ve = prefactor * tr.delta3_e;
    const double vg = prefactor * tr.delta3_g;
    const double c2 = std::cos(theta) * std::cos(theta);
    const double s2 = std::sin(theta) * std::sin(theta);
    return {c2 * ve + s2 * vg, s2 * ve + c2 * vg};
}

std::pair<double, double> sideband_shift_bare(double Omega, double Delta, double L_bare) {
    if (Omega == 0.0 && Delta == 0.0)
        throw DegenerateDrive();
    const double dw_plus = -Delta * L_bare / generalized_rabi(Omega, Delta);
    return {dw_plus, -dw_plus};
}

std::pair<double, double> dressed_linear_corrections(double theta, double Omega_R,
                                                     double Delta,
                                                     const AtomicTransition& tr,
                                                     const PhysicalConstants& constants) {
    const double m = constants.electron_mass;
    const double k = constants.alpha / std::numbers::pi * log_zalpha(tr.Z, constants.alpha) /
                     (m * m);
    const double c2 = std::cos(theta) * std::cos(theta);
    const double s2 = std::sin(theta) * std::sin(theta);
    const double cos2t = std::cos(2.0 * theta);
    const double dipole_term = tr.p_eg_sq * (Delta * cos2t + Omega_R * cos2t * cos2t);
    const double plus =
        -k * (c2 * tr.p2_e * (Omega_R + Delta) + s2 * tr.p2_g * (Omega_R - Delta) + dipole_term);
    const double minus =
        +k * (c2 * tr.p2_g * (Omega_R + Delta) + s2 * tr.p2_e * (Omega_R - Delta) + dipole_term);
    return {plus, minus};
}

double radiative_rabi_coefficient(const AtomicTransition& tr,
                                  const PhysicalConstants& constants) {
    const double m = constants.electron_mass;
    return constants.alpha / std::numbers::pi * log_zalpha(tr.Z, constants.alpha) *
           (tr.p2_g + tr.p2_e) / (m * m);
}

RadiativeCoefficients radiative_coefficients(const AtomicTransition& tr,
                                             const PhysicalConstants& constants) {
    RadiativeCoefficients rc;
    rc.ell = log_zalpha(tr.Z, constants.alpha);
    rc.L_bare = bare_lamb_shift(tr, constants);
    rc.C = radiative_rabi_coefficient(tr, constants);
    return rc;
}

std::pair<double, double> sideband_shift_rabi(double Omega, double Delta, double C) {
    if (Omega == 0.0 && Delta == 0.0)
        throw DegenerateDrive();
    const double dw_plus = -C * Omega * Omega / generalized_rabi(Omega, Delta);
    return {dw_plus, -dw_plus};
}

std::pair<double, double> resummed_sideband(double omega_L, double Omega, double Delta,
                                            double C, double L_bare) {
    const double half = std::hypot(Omega * (1.0 - C), Delta - L_bare);
    return {omega_L + half, omega_L - half};
}

std::pair<double, double> fully_dressed_shift(double Omega, double Delta, double C,
                                              double L_bare) {
    const double corrected = std::hypot(Omega * (1.0 - C), Delta - L_bare);
    const double plus = corrected - generalized_rabi(Omega, Delta);
    return {plus, -plus};
}

RadiativeCorrections radiative_corrections(double Omega, double Delta,
                                           const AtomicTransition& tr,
                                           const PhysicalConstants& constants) {
    const auto rc = radiative_coefficients(tr, constants);
    const double theta = mixing_angle(Omega, Delta);
    const double Omega_R = generalized_rabi(Omega, Delta);

    RadiativeCorrections out;
    std::tie(out.dL_app_plus, out.dL_app_minus) = approx_dressed_lamb(theta, tr, constants);
    std::tie(out.dC_plus, out.dC_minus) =
        dressed_linear_corrections(theta, Omega_R, Delta, tr, constants);
    std::tie(out.dw_plus, out.dw_minus) = sideband_shift_bare(Omega, Delta, rc.L_bare);
    std::tie(out.small_dw_plus, out.small_dw_minus) =
        sideband_shift_rabi(Omega, Delta, rc.C);
    std::tie(out.full_plus, out.full_minus) =
        fully_dressed_shift(Omega, Delta, rc.C, rc.L_bare);
    return out;
}

double ratio_r1(double h, double C) {
    return h * C;
}

double ratio_r1_exact(double Omega, double Delta, double C, double Gamma) {
    if (!(Gamma > 0))
        throw ValidationError("ratio_r1_exact: Gamma must be > 0");
    return std::abs(sideband_shift_rabi(Omega, Delta, C).first) / Gamma;
}

double bloch_siegert_estimate(double Omega, double omega_L) {
    if (!(omega_L > 0))
        throw ValidationError("bloch_siegert_estimate: omega_L must be > 0");
    return Omega * Omega * Omega / (omega_L * omega_L);
}

double ratio_r2(int Z, double h, const PhysicalConstants& constants) {
    if (!(h > 0))
        throw ValidationError("ratio_r2: h must be > 0");
    const double za = Z * constants.alpha;
    return log_zalpha(Z, constants.alpha) / (constants.alpha * za * za) / (h * h);
}

ZAlphaScaling zalpha_scaling(int Z, const PhysicalConstants& constants) {
    if (Z < 1)
        throw ValidationError("zalpha_scaling: Z must be >= 1");
    const double za = Z * constants.alpha;
    const double m = constants.electron_mass;
    ZAlphaScaling est;
    est.omega_L_est = za * za * m;
    est.Gamma_est = constants.alpha * za * za * za * za * m;
    est.C_est = constants.alpha * za * za * log_zalpha(Z, constants.alpha);
    return est;
}

double required_power(double h, const AtomicTransition& tr, double beam_waist_m,
                      const PhysicalConstants& constants) {
    if (!(h > 0))
        throw ValidationError("required_power: h must be > 0");
    if (!(beam_waist_m > 0))
        throw ValidationError("required_power: beam waist must be > 0");

    // SI throughout this function
    const double z_natural = dipole_z_element(tr.g, tr.e, constants); // 1/m-mass units
    const double z_si = z_natural * constants.alpha * constants.bohr_radius *
                        constants.electron_mass; // natural length unit is alpha * a0
    const double dipole = constants.elementary_charge * z_si;

    const double gamma_si = tr.Gamma * constants.natural_to_rad_per_s();
    const double omega_rabi = h * gamma_si;
    const double field = constants.hbar * omega_rabi / dipole;
    const double peak_intensity = 0.5 * constants.epsilon0 * constants.c * field * field;
    return peak_intensity * std::numbers::pi * beam_waist_m * beam_waist_m / 2.0;
}

double diffraction_limited_waist(double omega_natural, const PhysicalConstants& constants) {
    if (!(omega_natural > 0))
        throw ValidationError("diffraction_limited_waist: omega must be > 0");
    const double omega_si = omega_natural * constants.natural_to_rad_per_s();
    const double lambda = 2.0 * std::numbers::pi * constants.c / omega_si;
    return lambda / std::numbers::pi;
}

} // namespace mollow
