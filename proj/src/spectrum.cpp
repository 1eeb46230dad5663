#include "mollow/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "mollow/errors.hpp"

namespace mollow {

MollowParameters mollow_parameters(double Omega, double Delta, double Gamma,
                                   double Omega_R_eff, double omega_L) {
    if (!(Omega > 0))
        throw DegenerateDrive("mollow_parameters: Omega must be > 0");
    if (!(Gamma > 0))
        throw ValidationError("mollow_parameters: Gamma must be > 0");
    if (!(Omega_R_eff > 0))
        throw ValidationError("mollow_parameters: Omega_R_eff must be > 0");

    const double O2 = Omega * Omega;
    const double D2 = Delta * Delta;
    const double R2 = Omega_R_eff * Omega_R_eff;

    MollowParameters p;
    p.A0_inc = O2 * O2 * O2 / (4.0 * R2 * (R2 + D2) * (R2 + D2));
    p.A_plus = O2 * O2 / (8.0 * R2 * (R2 + D2));
    p.A_minus = p.A_plus;
    p.Gamma0 = Gamma * (O2 + 2.0 * D2) / (2.0 * R2);
    p.Gamma_plus = Gamma * (3.0 * O2 + 2.0 * D2) / (4.0 * R2);
    p.Gamma_minus = p.Gamma_plus;
    p.Omega_R_eff = Omega_R_eff;
    p.omega_L = omega_L;
    p.Gamma = Gamma;
    return p;
}

double corrected_generalized_rabi(double Omega, double Delta, double C, double L_bare) {
    return std::hypot(Omega * (1.0 - C), Delta - L_bare);
}

double incoherent_spectrum(double omega, const MollowParameters& p) {
    auto lorentz = [](double x, double gamma, double a) {
        return gamma * a / (x * x + gamma * gamma);
    };
    const double x0 = omega - p.omega_L;
    return p.Gamma / std::numbers::pi *
           (lorentz(x0, p.Gamma0, p.A0_inc) +
            lorentz(x0 - p.Omega_R_eff, p.Gamma_plus, p.A_plus) +
            lorentz(x0 + p.Omega_R_eff, p.Gamma_minus, p.A_minus));
}

double incoherent_weight(const MollowParameters& p) {
    return p.Gamma * (p.A0_inc + p.A_plus + p.A_minus);
}

SpectrumSamples sample_spectrum(const MollowParameters& p, const GridSpec& grid) {
    if (grid.count < 2)
        throw BadGrid("grid needs at least 2 points, got " + std::to_string(grid.count));
    if (!(grid.max > grid.min))
        throw BadGrid("grid needs max > min");
    SpectrumSamples s;
    s.params = p;
    s.omega.resize(grid.count);
    s.value.resize(grid.count);
    const double step = (grid.max - grid.min) / (grid.count - 1);
    for (int i = 0; i < grid.count; ++i) {
        s.omega[i] = grid.min + step * i;
        s.value[i] = incoherent_spectrum(s.omega[i], p);
    }
    return s;
}

const char* correction_mode_name(CorrectionMode mode) {
    switch (mode) {
    case CorrectionMode::None: return "none";
    case CorrectionMode::Bare: return "bare";
    case CorrectionMode::Full: return "full";
    }
    return "?";
}

CorrectionMode correction_mode_from_name(const std::string& name) {
    if (name == "none") return CorrectionMode::None;
    if (name == "bare") return CorrectionMode::Bare;
    if (name == "full") return CorrectionMode::Full;
    throw ValidationError("unknown correction mode '" + name + "' (expected none|bare|full)");
}

double effective_rabi(CorrectionMode mode, double Omega, double Delta, double C,
                      double L_bare) {
    switch (mode) {
    case CorrectionMode::None: return std::hypot(Omega, Delta);
    case CorrectionMode::Bare: return std::hypot(Omega, Delta - L_bare);
    case CorrectionMode::Full: return corrected_generalized_rabi(Omega, Delta, C, L_bare);
    }
    return 0.0;
}

MollowParameters scenario_parameters(const SpectrumScenario& sc, CorrectionMode mode) {
    const double rabi = effective_rabi(mode, sc.Omega, sc.Delta, sc.C, sc.L_bare);
    double delta = sc.Delta;
    if (sc.shift_detuning_in_envelope && mode != CorrectionMode::None)
        delta = sc.Delta - sc.L_bare;
    return mollow_parameters(sc.Omega, delta, sc.Gamma, rabi, sc.omega_L);
}

GridSpec default_grid(const SpectrumScenario& sc) {
    const double span = std::max({effective_rabi(CorrectionMode::None, sc.Omega, sc.Delta,
                                                 sc.C, sc.L_bare),
                                  effective_rabi(CorrectionMode::Bare, sc.Omega, sc.Delta,
                                                 sc.C, sc.L_bare),
                                  effective_rabi(CorrectionMode::Full, sc.Omega, sc.Delta,
                                                 sc.C, sc.L_bare)});
    GridSpec g;
    g.min = sc.omega_L - 1.5 * span - 10.0 * sc.Gamma;
    g.max = sc.omega_L + 1.5 * span + 10.0 * sc.Gamma;
    g.count = 8001;
    return g;
}

SpectrumTriplet spectrum_triplet(const SpectrumScenario& sc) {
    const GridSpec grid = sc.grid.count != 0 ? sc.grid : default_grid(sc);
    SpectrumTriplet t;
    t.uncorrected = sample_spectrum(scenario_parameters(sc, CorrectionMode::None), grid);
    t.bare = sample_spectrum(scenario_parameters(sc, CorrectionMode::Bare), grid);
    t.full = sample_spectrum(scenario_parameters(sc, CorrectionMode::Full), grid);
    return t;
}

std::vector<double> add_gaussian_noise(const std::vector<double>& values, double sigma,
                                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform01 = [&rng]() {
        // 53-bit mantissa in (0, 1]
        return (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
    };
    std::vector<double> out = values;
    // Box-Muller; one pair per two samples, spare cached
    bool have_spare = false;
    double spare = 0.0;
    for (double& v : out) {
        double z;
        if (have_spare) {
            z = spare;
            have_spare = false;
        } else {
            const double u1 = uniform01();
            const double u2 = uniform01();
            const double r = std::sqrt(-2.0 * std::log(u1));
            z = r * std::cos(2.0 * std::numbers::pi * u2);
            spare = r * std::sin(2.0 * std::numbers::pi * u2);
            have_spare = true;
        }
        v += sigma * z;
    }
    return out;
}

void write_spectrum_csv(std::ostream& out, const SpectrumSamples& samples) {
    out << "omega,S_inc\n";
    char buf[64];
    for (std::size_t i = 0; i < samples.omega.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", samples.omega[i], samples.value[i]);
        out << buf;
    }
}

void read_spectrum_csv(std::istream& in, std::vector<double>& omega,
                       std::vector<double>& value) {
    omega.clear();
    value.clear();
    std::string line;
    int row = 0;
    if (!std::getline(in, line))
        throw IoError("spectrum CSV: empty input");
    ++row;
    if (line.rfind("omega,S_inc", 0) != 0)
        throw ValidationError("spectrum CSV row 1: expected header 'omega,S_inc'");
    while (std::getline(in, line)) {
        ++row;
        if (line.empty())
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ValidationError("spectrum CSV row " + std::to_string(row) + ": missing comma");
        try {
            std::size_t used = 0;
            const double w = std::stod(line.substr(0, comma), &used);
            const double v = std::stod(line.substr(comma + 1));
            omega.push_back(w);
            value.push_back(v);
        } catch (const std::exception&) {
            throw ValidationError("spectrum CSV row " + std::to_string(row) +
                                  ": cannot parse '" + line + "'");
        }
    }
    for (std::size_t i = 1; i < omega.size(); ++i)
        if (!(omega[i] > omega[i - 1]))
            throw ValidationError("spectrum CSV: omega not strictly increasing at row " +
                                  std::to_string(i + 2));
}

nlohmann::json parameters_to_json(const MollowParameters& p) {
    return nlohmann::json{
        {"A0_inc", p.A0_inc},       {"A_plus", p.A_plus},
        {"A_minus", p.A_minus},     {"Gamma0", p.Gamma0},
        {"Gamma_plus", p.Gamma_plus}, {"Gamma_minus", p.Gamma_minus},
        {"Omega_R_eff", p.Omega_R_eff}, {"omega_L", p.omega_L},
        {"Gamma", p.Gamma},
    };
}

MollowParameters parameters_from_json(const nlohmann::json& j) {
    MollowParameters p;
    p.A0_inc = j.at("A0_inc").get<double>();
    p.A_plus = j.at("A_plus").get<double>();
    p.A_minus = j.at("A_minus").get<double>();
    p.Gamma0 = j.at("Gamma0").get<double>();
    p.Gamma_plus = j.at("Gamma_plus").get<double>();
    p.Gamma_minus = j.at("Gamma_minus").get<double>();
    p.Omega_R_eff = j.at("Omega_R_eff").get<double>();
    p.omega_L = j.at("omega_L").get<double>();
    p.Gamma = j.at("Gamma").get<double>();
    return p;
}

} // namespace mollow
