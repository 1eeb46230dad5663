// scenario.hpp - one-run configuration: the documented JSON config format,
// strict parsing with key diagnostics, and resolution into numbers in the
// scenario's own frequency unit.
//
// Config format (all keys except "drive" optional):
//   {
//     "config_version": 1,
//     "units": "gamma" | "natural" | "si",
//     "transition": "H-1S2P"
//         | { "Z": 1, "ground": {"n":1,"l":0}, "excited": {"n":2,"l":1},
//             "gamma_rad_per_s": 6.2649e8 },   // optional measured rate
//     "drive": { "omega": 25.0 | "h": 1000.0,  // exactly one of the two
//                "delta": 10.0, "omega_L": 0.0 },
//     "corrections": { "mode": "none"|"bare"|"full",
//                      "C": 0.02, "L_bare": 5.0 },  // optional overrides
//     "grid": { "min": -50.0, "max": 50.0, "count": 8001 },
//     "noise": { "sigma": 1e-3, "seed": 1 },
//     "shift_detuning_in_envelope": false
//   }
// "gamma" units express every frequency as a multiple of the transition's
// decay rate (or of an arbitrary reference when no transition is named, as
// in illustrative runs with explicit C / L_bare overrides).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "mollow/constants.hpp"
#include "mollow/fit.hpp"
#include "mollow/radiative.hpp"
#include "mollow/spectrum.hpp"

namespace mollow {

// Explicit hydrogenic transition levels (alternative to the named preset).
struct TransitionSpec {
    int Z = 1;
    int n_g = 1, l_g = 0;
    int n_e = 2, l_e = 1;
    std::optional<double> gamma_rad_per_s; // measured decay rate, rad/s
};

struct ScenarioConfig {
    int config_version = 1;
    UnitMode units = UnitMode::DimensionlessGamma;
    std::optional<std::string> preset; // named transition ("H-1S2P")
    std::optional<TransitionSpec> transition;
    std::optional<double> Omega; // drive strength, scenario units...
    std::optional<double> h;     // ...or as Omega / Gamma (exactly one given)
    double Delta = 0.0;
    std::optional<double> omega_L; // default 0: spectra as offsets from omega_L
    CorrectionMode mode = CorrectionMode::Full;
    std::optional<double> C_override;      // dimensionless
    std::optional<double> L_bare_override; // scenario units
    std::optional<GridSpec> grid;
    std::optional<NoiseSpec> noise;
    bool shift_detuning_in_envelope = false;
};

// Strict parser: unknown keys, wrong types, and inconsistent drive specs
// raise ValidationError naming the offending key.
ScenarioConfig scenario_from_json(const nlohmann::json& j);
ScenarioConfig scenario_from_file(const std::string& path);

// Normalized form; scenario_from_json(scenario_to_json(c)) reproduces c.
nlohmann::json scenario_to_json(const ScenarioConfig& config);

// A scenario with every number resolved into the scenario's frequency unit.
// In "gamma" units Gamma == 1 exactly.
struct ResolvedScenario {
    ScenarioConfig config; // normalized copy, embedded in output metadata
    PhysicalConstants constants;
    std::optional<AtomicTransition> transition; // natural units
    RadiativeCoefficients coefficients;         // natural units; zeros if no transition
    double gamma_natural = 1.0;                 // reference decay rate
    UnitSystem units{UnitMode::DimensionlessGamma, PhysicalConstants::codata2018()};

    // working values, scenario units
    double Gamma = 1.0;
    double Omega = 0.0;
    double Delta = 0.0;
    double omega_L = 0.0;
    double h = 0.0;      // Omega / Gamma
    double C = 0.0;      // effective (override wins over the computed value)
    double L_bare = 0.0; // effective, scenario units
    bool C_overridden = false;
    bool L_bare_overridden = false;

    std::vector<std::string> warnings; // e.g. marginal secular limit

    // C and L_bare as selected by a correction mode (none zeroes both,
    // bare zeroes C only).
    std::pair<double, double> applied_corrections(CorrectionMode mode) const;

    SpectrumScenario spectrum_scenario() const;
};

// Builds the transition (preset or explicit levels), fixes the reference
// decay rate, converts all drive numbers into scenario units, and applies
// the C / L_bare overrides.  Warns (does not fail) when Omega_R / Gamma < 10,
// where the secular three-Lorentzian form degrades.
ResolvedScenario resolve_scenario(
    const ScenarioConfig& config,
    const PhysicalConstants& constants = PhysicalConstants::codata2018());

} // namespace mollow
