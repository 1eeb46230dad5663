// mollow.cpp - command-line surface over the mollow library.
//
// Subcommands:
//   shifts       radiative-shift table for a scenario
//   spectrum     synthesized Mollow spectra as CSV + JSON metadata
//   fit          three-Lorentzian fit of a CSV file or a full scenario run
//   feasibility  measurement-feasibility report for a hydrogenic transition
//   figure1      the four illustrative spectrum curves (two panels)
//
// Exit codes: 0 success, 2 validation error, 3 I/O error, 4 hard numerical
// failure.  A fit that merely fails to converge exits 0 with
// converged=false in the report.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mollow/dressed.hpp"
#include "mollow/errors.hpp"
#include "mollow/fit.hpp"
#include "mollow/hydrogenic.hpp"
#include "mollow/radiative.hpp"
#include "mollow/scenario.hpp"
#include "mollow/spectrum.hpp"

namespace {

using nlohmann::json;
using namespace mollow;

// ---- small output helpers -------------------------------------------------

// human tables use 6 significant digits; machine formats carry full precision
std::string g6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void print_row(std::ostream& out, const std::string& name, double value,
               const std::string& note = "") {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "  %-28s % -14.6g %s\n", name.c_str(), value,
                  note.c_str());
    out << buf;
}

void emit(const json& j, const std::optional<std::string>& out_path) {
    if (out_path) {
        std::ofstream out(*out_path);
        if (!out)
            throw IoError("cannot open output file: " + *out_path);
        out << j.dump(2) << '\n';
        if (!out)
            throw IoError("write failed: " + *out_path);
    } else {
        std::cout << j.dump(2) << '\n';
    }
}

void print_warnings(const ResolvedScenario& rs) {
    for (const auto& w : rs.warnings)
        std::cerr << "warning: " << w << '\n';
}

json fit_to_json(const ThreeLorentzianFit& fit) {
    json peaks = json::array();
    for (const auto& pk : fit.peaks)
        peaks.push_back({{"center", pk.center},
                         {"half_width", pk.half_width},
                         {"weight", pk.weight}});
    json cov = json::array();
    for (Eigen::Index r = 0; r < fit.covariance.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < fit.covariance.cols(); ++c)
            row.push_back(fit.covariance(r, c));
        cov.push_back(row);
    }
    return {{"peaks", peaks},
            {"overall_scale", fit.overall_scale},
            {"scale_fitted", fit.scale_fitted},
            {"residual_rms", fit.residual_rms},
            {"iterations", fit.iterations},
            {"converged", fit.converged},
            {"covariance", cov}};
}

// ---- shifts ----------------------------------------------------------------

struct ShiftsArgs {
    std::string scenario_path;
    std::optional<std::string> out_path;
    std::string format = "table";
    std::optional<std::string> mode_flag;
};

int cmd_shifts(const ShiftsArgs& args) {
    ScenarioConfig config = scenario_from_file(args.scenario_path);
    if (args.mode_flag)
        config.mode = correction_mode_from_name(*args.mode_flag);
    const ResolvedScenario rs = resolve_scenario(config);
    print_warnings(rs);

    const double theta = mixing_angle(rs.Omega, rs.Delta);
    const double Omega_R = generalized_rabi(rs.Omega, rs.Delta);
    const auto [C_a, L_a] = rs.applied_corrections(config.mode);
    const auto [dw_p, dw_m] = sideband_shift_bare(rs.Omega, rs.Delta, L_a);
    const auto [sw_p, sw_m] = sideband_shift_rabi(rs.Omega, rs.Delta, C_a);
    const auto [full_p, full_m] = fully_dressed_shift(rs.Omega, rs.Delta, C_a, L_a);
    const auto [side_p, side_m] =
        resummed_sideband(rs.omega_L, rs.Omega, rs.Delta, C_a, L_a);

    // per-level rows need matrix elements, so only transition-backed runs
    // carry them; the correction mode zeroes the parts it turns off
    std::optional<std::pair<double, double>> dL_app, dC;
    if (rs.transition) {
        const auto to_unit = [&](double natural) {
            return rs.units.frequency_from_natural(natural);
        };
        if (config.mode != CorrectionMode::None) {
            const auto [p, m] = approx_dressed_lamb(theta, *rs.transition, rs.constants);
            dL_app = std::pair{to_unit(p), to_unit(m)};
        } else {
            dL_app = std::pair{0.0, 0.0};
        }
        if (config.mode == CorrectionMode::Full) {
            const double On = rs.units.frequency_to_natural(rs.Omega);
            const double Dn = rs.units.frequency_to_natural(rs.Delta);
            const auto [p, m] = dressed_linear_corrections(theta, generalized_rabi(On, Dn),
                                                           Dn, *rs.transition, rs.constants);
            dC = std::pair{to_unit(p), to_unit(m)};
        } else {
            dC = std::pair{0.0, 0.0};
        }
    }

    json report;
    report["scenario"] = scenario_to_json(rs.config);
    report["units"] = unit_mode_name(rs.config.units);
    report["mode"] = correction_mode_name(config.mode);
    report["warnings"] = rs.warnings;
    json coeff;
    if (rs.transition)
        coeff["ell"] = rs.coefficients.ell;
    coeff["C"] = rs.C;
    coeff["L_bare"] = rs.L_bare;
    coeff["C_overridden"] = rs.C_overridden;
    coeff["L_bare_overridden"] = rs.L_bare_overridden;
    report["coefficients"] = coeff;
    report["drive"] = {{"Omega", rs.Omega}, {"Delta", rs.Delta},   {"h", rs.h},
                       {"theta", theta},    {"Omega_R", Omega_R},  {"omega_L", rs.omega_L},
                       {"Gamma", rs.Gamma}};
    json corr;
    if (dL_app) {
        corr["dL_app_plus"] = dL_app->first;
        corr["dL_app_minus"] = dL_app->second;
    }
    if (dC) {
        corr["dC_plus"] = dC->first;
        corr["dC_minus"] = dC->second;
    }
    corr["dw_plus"] = dw_p;
    corr["dw_minus"] = dw_m;
    corr["small_dw_plus"] = sw_p;
    corr["small_dw_minus"] = sw_m;
    corr["full_plus"] = full_p;
    corr["full_minus"] = full_m;
    corr["sideband_plus"] = side_p;
    corr["sideband_minus"] = side_m;
    report["corrections"] = corr;

    if (args.format == "json") {
        emit(report, args.out_path);
        return 0;
    }

    std::ostream& out = std::cout;
    out << "radiative shifts (" << unit_mode_name(rs.config.units) << " units, mode "
        << correction_mode_name(config.mode) << ")\n";
    if (rs.transition) {
        out << "transition: " << rs.transition->g.label << " -> " << rs.transition->e.label
            << " (Z=" << rs.transition->Z << ")\n";
        print_row(out, "ell = ln[(Z alpha)^-2]", rs.coefficients.ell);
    }
    print_row(out, "C", rs.C, rs.C_overridden ? "(override)" : "");
    print_row(out, "L_bare", rs.L_bare, rs.L_bare_overridden ? "(override)" : "");
    print_row(out, "theta", theta);
    print_row(out, "Omega_R", Omega_R);
    if (dL_app) {
        print_row(out, "dL_app(+)", dL_app->first);
        print_row(out, "dL_app(-)", dL_app->second);
    }
    if (dC) {
        print_row(out, "dC(+)", dC->first);
        print_row(out, "dC(-)", dC->second);
    }
    print_row(out, "dw(+)  [detuning part]", dw_p);
    print_row(out, "dw(-)", dw_m);
    print_row(out, "delta w(+)  [Rabi part]", sw_p);
    print_row(out, "delta w(-)", sw_m);
    print_row(out, "full shift(+)", full_p);
    print_row(out, "full shift(-)", full_m);
    print_row(out, "sideband(+)", side_p);
    print_row(out, "sideband(-)", side_m);
    if (args.out_path)
        emit(report, args.out_path);
    return 0;
}

// ---- spectrum ---------------------------------------------------------------

struct SpectrumArgs {
    std::string scenario_path;
    std::string out_prefix = "spectrum";
    std::vector<std::string> modes;
    std::optional<std::uint64_t> seed;
};

CorrectionMode to_mode(const std::string& name) { return correction_mode_from_name(name); }

// seed offsets keep the three modes' noise streams independent but reproducible
std::uint64_t mode_seed(std::uint64_t base, CorrectionMode mode) {
    return base + static_cast<std::uint64_t>(mode);
}

int cmd_spectrum(const SpectrumArgs& args) {
    ScenarioConfig config = scenario_from_file(args.scenario_path);
    ResolvedScenario rs = resolve_scenario(config);
    print_warnings(rs);

    std::vector<CorrectionMode> modes;
    if (args.modes.empty())
        modes.push_back(config.mode);
    else
        for (const auto& name : args.modes)
            modes.push_back(to_mode(name));

    SpectrumScenario sc = rs.spectrum_scenario();
    if (sc.grid.count == 0)
        sc.grid = default_grid(sc);

    std::optional<NoiseSpec> noise = config.noise;
    if (noise && args.seed)
        noise->seed = *args.seed;

    json metadata;
    metadata["scenario"] = scenario_to_json(rs.config);
    metadata["units"] = unit_mode_name(rs.config.units);
    metadata["warnings"] = rs.warnings;
    metadata["grid"] = {{"min", sc.grid.min}, {"max", sc.grid.max}, {"count", sc.grid.count}};
    json files = json::object();
    json params = json::object();

    for (CorrectionMode mode : modes) {
        SpectrumSamples samples = sample_spectrum(scenario_parameters(sc, mode), sc.grid);
        if (noise && noise->sigma > 0) {
            const double peak =
                *std::max_element(samples.value.begin(), samples.value.end());
            samples.value = add_gaussian_noise(samples.value, noise->sigma * peak,
                                               mode_seed(noise->seed, mode));
        }
        const std::string path =
            args.out_prefix + "_" + correction_mode_name(mode) + ".csv";
        std::ofstream out(path);
        if (!out)
            throw IoError("cannot open output file: " + path);
        write_spectrum_csv(out, samples);
        if (!out)
            throw IoError("write failed: " + path);
        files[correction_mode_name(mode)] = path;
        params[correction_mode_name(mode)] = parameters_to_json(samples.params);
        std::cerr << "wrote " << path << '\n';
    }

    if (noise)
        metadata["noise"] = {{"sigma", noise->sigma}, {"seed", noise->seed}};
    metadata["files"] = files;
    metadata["parameters"] = params;
    const std::string meta_path = args.out_prefix + "_metadata.json";
    emit(metadata, meta_path);
    std::cerr << "wrote " << meta_path << '\n';
    return 0;
}

// ---- fit ---------------------------------------------------------------------

struct FitArgs {
    std::optional<std::string> csv_path;
    std::optional<std::string> scenario_path;
    std::optional<std::string> out_path;
    std::string format = "json";
    std::optional<std::uint64_t> seed;
};

int fit_csv(const FitArgs& args) {
    std::ifstream in(*args.csv_path);
    if (!in)
        throw IoError("cannot open spectrum file: " + *args.csv_path);
    std::vector<double> omega, value;
    read_spectrum_csv(in, omega, value);

    // a bare CSV carries no separate normalization, so pin the scale and let
    // the weights absorb it (scale x weights is what the data determine)
    FitOptions options;
    options.fixed_scale = 1.0;
    const ThreeLorentzianFit fit = fit_three_lorentzians(omega, value, options);

    if (args.format == "csv") { // residuals on demand
        std::ostringstream csv;
        csv << "omega,residual\n";
        char buf[80];
        for (std::size_t i = 0; i < omega.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", omega[i],
                          three_lorentzian_model(omega[i], fit) - value[i]);
            csv << buf;
        }
        if (args.out_path) {
            std::ofstream out(*args.out_path);
            if (!out)
                throw IoError("cannot open output file: " + *args.out_path);
            out << csv.str();
        } else {
            std::cout << csv.str();
        }
        return 0;
    }

    json report;
    report["input"] = *args.csv_path;
    report["fit"] = fit_to_json(fit);
    emit(report, args.out_path);
    return 0;
}

int fit_scenario(const FitArgs& args) {
    const ScenarioConfig config = scenario_from_file(*args.scenario_path);
    const ResolvedScenario rs = resolve_scenario(config);
    print_warnings(rs);

    std::optional<NoiseSpec> noise = config.noise;
    if (noise && args.seed)
        noise->seed = *args.seed;

    SpectrumScenario sc = rs.spectrum_scenario();
    const SidebandMeasurement m = measure_sideband_shift(sc, noise);

    const auto [full_p, full_m] = fully_dressed_shift(rs.Omega, rs.Delta, rs.C, rs.L_bare);
    const auto [side_p, side_m] =
        resummed_sideband(rs.omega_L, rs.Omega, rs.Delta, rs.C, rs.L_bare);

    json report;
    report["scenario"] = scenario_to_json(rs.config);
    report["units"] = unit_mode_name(rs.config.units);
    report["warnings"] = rs.warnings;
    if (noise)
        report["noise"] = {{"sigma", noise->sigma}, {"seed", noise->seed}};
    report["fits"] = {{"uncorrected", fit_to_json(m.fit_uncorrected)},
                      {"bare", fit_to_json(m.fit_bare)},
                      {"full", fit_to_json(m.fit_full)}};
    report["measured"] = {{"delta_plus", m.delta_plus_measured},
                          {"delta_minus", m.delta_minus_measured},
                          {"r1", m.r1_measured}};
    report["analytic"] = {{"delta_plus", full_p},
                          {"delta_minus", full_m},
                          {"sideband_plus", side_p},
                          {"sideband_minus", side_m},
                          {"r1", ratio_r1_exact(rs.Omega, rs.Delta, rs.C, rs.Gamma)}};
    emit(report, args.out_path);

    const bool all_converged =
        m.fit_uncorrected.converged && m.fit_bare.converged && m.fit_full.converged;
    if (!all_converged)
        std::cerr << "warning: at least one fit did not converge "
                     "(converged=false in the report)\n";
    return 0;
}

int cmd_fit(const FitArgs& args) {
    if (args.csv_path.has_value() == args.scenario_path.has_value())
        throw ValidationError("fit: give either a spectrum CSV or --scenario, not both");
    if (args.scenario_path && args.format == "csv")
        throw ValidationError("fit: residual CSV output needs a spectrum CSV input");
    return args.csv_path ? fit_csv(args) : fit_scenario(args);
}

// ---- feasibility ---------------------------------------------------------------

struct FeasibilityArgs {
    int Z = 1;
    double h = 1000.0;
    std::optional<double> waist_over_lambda; // default: diffraction limit 1/pi
    double available_power_W = 20e-9;
    std::optional<std::string> out_path;
    std::string format = "table";
};

int cmd_feasibility(const FeasibilityArgs& args) {
    if (args.Z < 1)
        throw ValidationError("feasibility: Z must be >= 1");
    if (!(args.h > 0))
        throw ValidationError("feasibility: h must be > 0");

    const PhysicalConstants constants = PhysicalConstants::codata2018();
    const AtomicTransition tr = make_transition(make_bound_state(args.Z, 1, 0),
                                                make_bound_state(args.Z, 2, 1), constants);
    const RadiativeCoefficients coeff = radiative_coefficients(tr, constants);

    const double to_si = constants.natural_to_rad_per_s();
    const double lambda_m = 2.0 * std::numbers::pi * constants.c / (tr.omega_R * to_si);
    const double waist_m = args.waist_over_lambda
                               ? *args.waist_over_lambda * lambda_m
                               : diffraction_limited_waist(tr.omega_R, constants);

    const double Omega = args.h * tr.Gamma; // natural units
    const double r1_est = ratio_r1(args.h, coeff.C);
    const double r1_exact = ratio_r1_exact(Omega, 0.0, coeff.C, tr.Gamma);
    const double r2 = ratio_r2(args.Z, args.h, constants);
    const double bs = bloch_siegert_estimate(Omega, tr.omega_R); // omega_L = omega_R at Delta=0
    const double power_W = required_power(args.h, tr, waist_m, constants);
    const double gap = power_W / args.available_power_W;
    const ZAlphaScaling scaling = zalpha_scaling(args.Z, constants);

    json report;
    report["Z"] = args.Z;
    report["h"] = args.h;
    report["transition"] = {{"omega_R_rad_per_s", tr.omega_R * to_si},
                            {"Gamma_rad_per_s", tr.Gamma * to_si},
                            {"lambda_m", lambda_m}};
    report["coefficients"] = {{"ell", coeff.ell},
                              {"C", coeff.C},
                              {"L_bare_rad_per_s", coeff.L_bare * to_si}};
    report["r1_estimate"] = r1_est;
    report["r1_exact_at_resonance"] = r1_exact;
    report["r2"] = r2;
    report["bloch_siegert"] = {{"shift_rad_per_s", bs * to_si},
                               {"shift_over_Gamma", bs / tr.Gamma}};
    report["power"] = {{"beam_waist_m", waist_m},
                       {"waist_over_lambda", waist_m / lambda_m},
                       {"required_W", power_W},
                       {"available_W", args.available_power_W},
                       {"gap", gap}};
    report["zalpha_scaling"] = {{"omega_L_est_rad_per_s", scaling.omega_L_est * to_si},
                                {"Gamma_est_rad_per_s", scaling.Gamma_est * to_si},
                                {"C_est", scaling.C_est}};

    if (args.format == "json") {
        emit(report, args.out_path);
        return 0;
    }

    std::ostream& out = std::cout;
    out << "measurement feasibility: 1S-2P at Z=" << args.Z << ", h = Omega/Gamma = "
        << g6(args.h) << '\n';
    print_row(out, "omega_R (rad/s)", tr.omega_R * to_si);
    print_row(out, "Gamma (rad/s)", tr.Gamma * to_si);
    print_row(out, "lambda (m)", lambda_m);
    print_row(out, "ell", coeff.ell);
    print_row(out, "C", coeff.C);
    print_row(out, "L_bare (rad/s)", coeff.L_bare * to_si);
    print_row(out, "r1 = h C (estimate)", r1_est);
    print_row(out, "r1 (exact, Delta=0)", r1_exact);
    print_row(out, "r2", r2);
    print_row(out, "Bloch-Siegert (rad/s)", bs * to_si);
    print_row(out, "Bloch-Siegert / Gamma", bs / tr.Gamma);
    print_row(out, "beam waist (m)", waist_m,
              args.waist_over_lambda ? "" : "(diffraction limit lambda/pi)");
    print_row(out, "required power (W)", power_W);
    print_row(out, "available power (W)", args.available_power_W);
    print_row(out, "power gap", gap);
    if (args.out_path)
        emit(report, args.out_path);
    return 0;
}

// ---- figure1 --------------------------------------------------------------------

struct Figure1Args {
    std::string out_dir = "figure1";
};

int cmd_figure1(const Figure1Args& args) {
    // illustrative parameters: Gamma = 1, Omega = 25, Delta = 10, C = 0.02,
    // L_bare = 5, spectra as offsets from omega_L in units of Gamma
    SpectrumScenario sc;
    sc.Omega = 25.0;
    sc.Delta = 10.0;
    sc.Gamma = 1.0;
    sc.C = 0.02;
    sc.L_bare = 5.0;
    sc.omega_L = 0.0;
    sc.grid = default_grid(sc);

    std::error_code ec;
    std::filesystem::create_directories(args.out_dir, ec);
    if (ec)
        throw IoError("cannot create output directory " + args.out_dir + ": " +
                      ec.message());

    const SpectrumTriplet triplet = spectrum_triplet(sc);
    const struct {
        const char* name;
        const SpectrumSamples* samples;
    } curves[] = {
        {"panel_a_uncorrected.csv", &triplet.uncorrected},
        {"panel_a_bare.csv", &triplet.bare},
        {"panel_b_bare.csv", &triplet.bare},
        {"panel_b_full.csv", &triplet.full},
    };

    json manifest;
    manifest["parameters"] = {{"Gamma", sc.Gamma}, {"Omega", sc.Omega},
                              {"Delta", sc.Delta}, {"C", sc.C},
                              {"L_bare", sc.L_bare}};
    manifest["grid"] = {{"min", sc.grid.min}, {"max", sc.grid.max}, {"count", sc.grid.count}};
    manifest["sideband_offsets"] = {
        {"uncorrected", triplet.uncorrected.params.Omega_R_eff},
        {"bare", triplet.bare.params.Omega_R_eff},
        {"full", triplet.full.params.Omega_R_eff}};
    json panels;
    panels["a"] = {"panel_a_uncorrected.csv", "panel_a_bare.csv"};
    panels["b"] = {"panel_b_bare.csv", "panel_b_full.csv"};
    manifest["panels"] = panels;

    for (const auto& curve : curves) {
        const std::string path = args.out_dir + "/" + curve.name;
        std::ofstream out(path);
        if (!out)
            throw IoError("cannot open output file: " + path);
        write_spectrum_csv(out, *curve.samples);
        if (!out)
            throw IoError("write failed: " + path);
        std::cerr << "wrote " << path << '\n';
    }
    emit(manifest, args.out_dir + "/manifest.json");
    std::cerr << "wrote " << args.out_dir << "/manifest.json\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mollow-triplet radiative corrections: dressed-state Lamb shifts, "
                 "corrected fluorescence spectra, sideband fits, feasibility"};
    app.require_subcommand(1);

    ShiftsArgs shifts;
    auto* shifts_cmd = app.add_subcommand("shifts", "radiative-shift table for a scenario");
    shifts_cmd->add_option("--scenario", shifts.scenario_path, "scenario JSON file")
        ->required();
    shifts_cmd->add_option("--out", shifts.out_path, "write the JSON report here");
    shifts_cmd->add_option("--format", shifts.format, "table|json (default table)")
        ->check(CLI::IsMember({"table", "json"}));
    shifts_cmd->add_option("--mode", shifts.mode_flag, "override the correction mode")
        ->check(CLI::IsMember({"none", "bare", "full"}));

    SpectrumArgs spectrum;
    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "synthesize spectra as CSV + JSON metadata");
    spectrum_cmd->add_option("--scenario", spectrum.scenario_path, "scenario JSON file")
        ->required();
    spectrum_cmd->add_option("--out", spectrum.out_prefix,
                             "output path prefix (default 'spectrum')");
    spectrum_cmd
        ->add_option("--mode", spectrum.modes,
                     "correction mode(s) to emit; repeatable (default: scenario's mode)")
        ->check(CLI::IsMember({"none", "bare", "full"}));
    spectrum_cmd->add_option("--seed", spectrum.seed, "override the noise seed");

    FitArgs fit;
    auto* fit_cmd = app.add_subcommand("fit", "fit three Lorentzians to a spectrum");
    fit_cmd->add_option("input", fit.csv_path, "spectrum CSV file (omega,S_inc)");
    fit_cmd->add_option("--scenario", fit.scenario_path,
                        "run the full synthesize-and-fit pipeline on a scenario");
    fit_cmd->add_option("--out", fit.out_path, "write the report here");
    fit_cmd->add_option("--format", fit.format, "json|csv (csv = residuals)")
        ->check(CLI::IsMember({"json", "csv"}));
    fit_cmd->add_option("--seed", fit.seed, "override the noise seed");

    FeasibilityArgs feas;
    auto* feas_cmd =
        app.add_subcommand("feasibility", "measurement-feasibility report (1S-2P)");
    feas_cmd->set_help_flag("--help", "print help"); // frees -h for --h below
    feas_cmd->add_option("--Z", feas.Z, "nuclear charge (default 1)");
    feas_cmd->add_option("--h", feas.h, "drive strength Omega/Gamma (default 1000)");
    feas_cmd->add_option("--waist-over-lambda", feas.waist_over_lambda,
                         "beam waist in wavelengths (default 1/pi, diffraction limit)");
    feas_cmd->add_option("--available-power", feas.available_power_W,
                         "available power in W (default 20e-9)");
    feas_cmd->add_option("--out", feas.out_path, "write the JSON report here");
    feas_cmd->add_option("--format", feas.format, "table|json (default table)")
        ->check(CLI::IsMember({"table", "json"}));

    Figure1Args fig1;
    auto* fig1_cmd =
        app.add_subcommand("figure1", "emit the four illustrative spectrum curves");
    fig1_cmd->add_option("--out", fig1.out_dir, "output directory (default 'figure1')");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help / --version
        app.exit(e);
        return 2; // bad command line = validation error
    }

    try {
        if (shifts_cmd->parsed())
            return cmd_shifts(shifts);
        if (spectrum_cmd->parsed())
            return cmd_spectrum(spectrum);
        if (fit_cmd->parsed())
            return cmd_fit(fit);
        if (feas_cmd->parsed())
            return cmd_feasibility(feas);
        if (fig1_cmd->parsed())
            return cmd_figure1(fig1);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
