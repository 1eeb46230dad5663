// radiative.hpp - radiative (self-energy) corrections of the dressed states
// in the leading-logarithm approximation: the bare-transition Lamb shift, the
// dressed-state shifts and their linear-in-(Omega_R, Delta) corrections, the
// closed-form and resummed sideband displacements, and the feasibility
// estimates for measuring them.
//
// Natural units throughout (frequencies in units of the electron mass).

#pragma once

#include <optional>
#include <utility>

#include "mollow/constants.hpp"
#include "mollow/hydrogenic.hpp"

namespace mollow {

// Matrix-element record of the driven transition.  All entries are in
// natural units; p2_* carry m^2, delta3_* carry m^3, omega_R and Gamma m.
struct AtomicTransition {
    BoundState g;
    BoundState e;
    double omega_R = 0.0;
    double Gamma = 0.0;
    double p2_g = 0.0;     // <g|p^2|g>
    double p2_e = 0.0;     // <e|p^2|e>
    double p_eg_sq = 0.0;  // |<e|p|g>|^2, position form
    double delta3_g = 0.0; // <g|delta^3(r)|g>
    double delta3_e = 0.0; // <e|delta^3(r)|e>
    int Z = 1;
};

// Assembles the full record from the hydrogenic closed forms.  A measured
// decay rate, when given, replaces the Einstein-A value.
AtomicTransition make_transition(const BoundState& g, const BoundState& e,
                                 const PhysicalConstants& constants,
                                 std::optional<double> measured_gamma = std::nullopt);

// Recomputes every matrix element and checks the record against it.
// Throws ValidationError if any entry is off by more than rel_tol.
void validate_transition(const AtomicTransition& tr, const PhysicalConstants& constants,
                         double rel_tol = 1e-10);

// ell = ln[(Z alpha)^-2]
double log_zalpha(int Z, double alpha);

struct RadiativeCoefficients {
    double ell = 0.0;    // leading logarithm
    double L_bare = 0.0; // effective Lamb shift of the bare transition
    double C = 0.0;      // dimensionless Rabi-frequency correction coefficient
};

RadiativeCoefficients radiative_coefficients(const AtomicTransition& tr,
                                             const PhysicalConstants& constants);

// L_bare = <e|dV|e> - <g|dV|g> with the effective leading-log potential
// dV = 4 alpha (Z alpha) ell delta^3(r) / (3 m^2).
double bare_lamb_shift(const AtomicTransition& tr, const PhysicalConstants& constants);

// Dressed-state expectations of the effective potential,
//   dL_+ = cos^2(theta) <e|dV|e> + sin^2(theta) <g|dV|g>,
// and dL_- with sin <-> cos swapped.
std::pair<double, double> approx_dressed_lamb(double theta, const AtomicTransition& tr,
                                              const PhysicalConstants& constants);

// dL_+(theta) - dL_-(theta) collapses to
//   dw_+ = -Delta L_bare / sqrt(Omega^2 + Delta^2),  dw_- = -dw_+.
std::pair<double, double> sideband_shift_bare(double Omega, double Delta, double L_bare);

// Linear-in-(Omega_R, Delta) corrections dC_+- of the dressed-state shifts:
//   dC_+ = -(alpha/pi) (ell/m^2) [ cos^2 <p^2>_e (Omega_R + Delta)
//                                + sin^2 <p^2>_g (Omega_R - Delta)
//                                + |<p>_eg|^2 (Delta cos2th + Omega_R cos^2 2th) ],
//   dC_- with the opposite overall sign and <p^2>_e <-> <p^2>_g swapped.
// Both are evaluated at the same semiclassical (Omega, Delta, theta).
std::pair<double, double> dressed_linear_corrections(double theta, double Omega_R,
                                                     double Delta,
                                                     const AtomicTransition& tr,
                                                     const PhysicalConstants& constants);

// C = (alpha/pi) ell (<p^2>_g + <p^2>_e) / m^2
double radiative_rabi_coefficient(const AtomicTransition& tr,
                                  const PhysicalConstants& constants);

// Closed form of dC_+ - dC_-:
//   dw_+- = -+ C Omega^2 / sqrt(Omega^2 + Delta^2)
std::pair<double, double> sideband_shift_rabi(double Omega, double Delta, double C);

// Resummed sideband positions
//   omega_+- = omega_L +- sqrt(Omega^2 (1-C)^2 + (Delta - L_bare)^2)
std::pair<double, double> resummed_sideband(double omega_L, double Omega, double Delta,
                                            double C, double L_bare);

// Fully dressed Lamb shift of the two sidebands: the resummed displacement
// minus the uncorrected one, antisymmetric between + and -.
std::pair<double, double> fully_dressed_shift(double Omega, double Delta, double C,
                                              double L_bare);

// Everything above in one record, evaluated at one (Omega, Delta).
struct RadiativeCorrections {
    double dL_app_plus = 0.0;
    double dL_app_minus = 0.0;
    double dC_plus = 0.0;
    double dC_minus = 0.0;
    double dw_plus = 0.0;
    double dw_minus = 0.0;
    double small_dw_plus = 0.0;
    double small_dw_minus = 0.0;
    double full_plus = 0.0;
    double full_minus = 0.0;
};

RadiativeCorrections radiative_corrections(double Omega, double Delta,
                                           const AtomicTransition& tr,
                                           const PhysicalConstants& constants);

// ---- feasibility estimates ----

// shift-to-width estimate r1 ~ h C
double ratio_r1(double h, double C);

// exact |dw_+| / Gamma
double ratio_r1_exact(double Omega, double Delta, double C, double Gamma);

// Bloch-Siegert order of magnitude at Delta = 0: Omega^3 / omega_L^2
double bloch_siegert_estimate(double Omega, double omega_L);

// r2 = ell / (alpha (Z alpha)^2) / h^2
double ratio_r2(int Z, double h, const PhysicalConstants& constants);

// Z-alpha scaling estimates (no numeric prefactors), natural units
struct ZAlphaScaling {
    double omega_L_est = 0.0; // (Z alpha)^2 m
    double Gamma_est = 0.0;   // alpha (Z alpha)^4 m
    double C_est = 0.0;       // alpha (Z alpha)^2 ell
};

ZAlphaScaling zalpha_scaling(int Z, const PhysicalConstants& constants);

// Optical power (W) needed to drive the transition at Omega = h Gamma with a
// Gaussian beam of waist w0 (m).  Conventions, isolated here on purpose:
//   dipole moment   d  = e |<e|z|g>|  (m = 0 sublevel),
//   field amplitude E0 = hbar Omega / d  (Omega = d E0 / hbar),
//   peak intensity  I0 = epsilon0 c E0^2 / 2,
//   beam power      P  = I0 pi w0^2 / 2.
double required_power(double h, const AtomicTransition& tr, double beam_waist_m,
                      const PhysicalConstants& constants);

// Gaussian-beam waist of a lens focused at numerical aperture 1,
// w0 = lambda / pi.  This tight-focus limit is the default waist of the
// feasibility report.
double diffraction_limited_waist(double omega_natural, const PhysicalConstants& constants);

} // namespace mollow
