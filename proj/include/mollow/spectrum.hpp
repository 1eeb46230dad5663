// spectrum.hpp - secular-limit incoherent Mollow triplet: the five Lorentzian
// parameters, the corrected generalized Rabi frequency, and deterministic
// grid sampling with CSV/JSON export.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace mollow {

// Peak amplitudes and half-widths of the three-Lorentzian spectrum.  The
// effective generalized Rabi frequency is substituted for every occurrence
// of Omega_R; raw Omega and Delta stay untouched in the expressions.
struct MollowParameters {
    double A0_inc = 0.0;
    double A_plus = 0.0;
    double A_minus = 0.0;
    double Gamma0 = 0.0;
    double Gamma_plus = 0.0;
    double Gamma_minus = 0.0;
    double Omega_R_eff = 0.0;
    double omega_L = 0.0;
    double Gamma = 0.0; // bare decay rate
};

//   A0   = Omega^6 / (4 Omega_R^2 (Omega_R^2 + Delta^2)^2)
//   A+-  = Omega^4 / (8 Omega_R^2 (Omega_R^2 + Delta^2))
//   G0   = Gamma (Omega^2 + 2 Delta^2) / (2 Omega_R^2)
//   G+-  = Gamma (3 Omega^2 + 2 Delta^2) / (4 Omega_R^2)
// Throws DegenerateDrive for Omega = 0.
MollowParameters mollow_parameters(double Omega, double Delta, double Gamma,
                                   double Omega_R_eff, double omega_L = 0.0);

// Omega_R -> sqrt(Omega^2 (1-C)^2 + (Delta - L_bare)^2)
double corrected_generalized_rabi(double Omega, double Delta, double C, double L_bare);

// S_inc(omega): central Lorentzian at omega_L, sidebands at omega_L +- Omega_R_eff
double incoherent_spectrum(double omega, const MollowParameters& p);

// Total incoherent weight, the closed form of the full-line integral:
// Gamma (A0 + A+ + A-).
double incoherent_weight(const MollowParameters& p);

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    int count = 0;
};

struct SpectrumSamples {
    std::vector<double> omega; // strictly increasing
    std::vector<double> value; // S_inc, >= 0
    MollowParameters params;
};

// Uniform grid evaluation; per-point, no accumulation across points, so the
// result is independent of any partitioning of the grid.
SpectrumSamples sample_spectrum(const MollowParameters& p, const GridSpec& grid);

enum class CorrectionMode { None, Bare, Full };

const char* correction_mode_name(CorrectionMode mode);
CorrectionMode correction_mode_from_name(const std::string& name);

// Omega_R actually used for a given correction mode
double effective_rabi(CorrectionMode mode, double Omega, double Delta, double C,
                      double L_bare);

// Inputs of one synthesized-spectrum run, in one consistent frequency unit.
struct SpectrumScenario {
    double Omega = 0.0;
    double Delta = 0.0;
    double Gamma = 1.0;
    double C = 0.0;
    double L_bare = 0.0;
    double omega_L = 0.0;
    GridSpec grid; // count = 0 means "derive the default grid"
    // Study option: also replace Delta -> Delta - L_bare inside the
    // amplitude/width expressions (the printed substitution touches only
    // Omega_R; this flag is off by default).
    bool shift_detuning_in_envelope = false;
};

MollowParameters scenario_parameters(const SpectrumScenario& sc, CorrectionMode mode);

// Default grid: omega_L +- (1.5 Omega_R_eff + 10 Gamma), 8001 points.
// Uses the largest Omega_R_eff over the requested modes so one grid covers
// all three spectra.
GridSpec default_grid(const SpectrumScenario& sc);

struct SpectrumTriplet {
    SpectrumSamples uncorrected;
    SpectrumSamples bare;
    SpectrumSamples full;
};

// The three spectra with Omega_R_eff in
//   { sqrt(O^2+D^2), sqrt(O^2+(D-L)^2), sqrt(O^2 (1-C)^2+(D-L)^2) },
// all sampled on the same grid.
SpectrumTriplet spectrum_triplet(const SpectrumScenario& sc);

// Deterministic additive white Gaussian noise (Box-Muller over mt19937_64,
// so the byte stream does not depend on the C++ standard library).
std::vector<double> add_gaussian_noise(const std::vector<double>& values, double sigma,
                                       std::uint64_t seed);

// CSV with header "omega,S_inc", 17 significant digits.
void write_spectrum_csv(std::ostream& out, const SpectrumSamples& samples);

// Parses the CSV format above; errors name the offending row.
void read_spectrum_csv(std::istream& in, std::vector<double>& omega,
                       std::vector<double>& value);

nlohmann::json parameters_to_json(const MollowParameters& p);
MollowParameters parameters_from_json(const nlohmann::json& j);

} // namespace mollow
