#include "mollow/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "mollow/errors.hpp"

namespace mollow {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ValidationError("scenario: " + where + ": " + what);
}

void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* key : allowed)
            if (it.key() == key) {
                known = true;
                break;
            }
        if (!known)
            fail(where, "unknown key \"" + it.key() + "\"");
    }
}

const json& require_object(const json& j, const std::string& where) {
    if (!j.is_object())
        fail(where, "expected a JSON object");
    return j;
}

double get_number(const json& j, const std::string& where, const char* key) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_number())
        fail(where, std::string("key \"") + key + "\" must be a number");
    return it->get<double>();
}

std::optional<double> opt_number(const json& j, const std::string& where, const char* key) {
    const auto it = j.find(key);
    if (it == j.end())
        return std::nullopt;
    if (!it->is_number())
        fail(where, std::string("key \"") + key + "\" must be a number");
    return it->get<double>();
}

int get_int(const json& j, const std::string& where, const char* key) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_number_integer())
        fail(where, std::string("key \"") + key + "\" must be an integer");
    return it->get<int>();
}

std::string get_string(const json& j, const std::string& where, const char* key) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_string())
        fail(where, std::string("key \"") + key + "\" must be a string");
    return it->get<std::string>();
}

// cross-field rules shared by the parser and the resolver
void validate(const ScenarioConfig& c) {
    if (c.config_version != 1)
        fail("config_version",
             "unsupported version " + std::to_string(c.config_version));
    if (c.preset && c.transition)
        fail("transition", "give either a preset name or explicit levels, not both");
    if (c.preset && *c.preset != "H-1S2P")
        fail("transition", "unknown preset \"" + *c.preset + "\" (known: H-1S2P)");
    if (c.Omega.has_value() == c.h.has_value())
        fail("drive", "exactly one of \"omega\" or \"h\" must be given");
    const double strength = c.Omega ? *c.Omega : *c.h;
    if (!(strength >= 0.0) || !std::isfinite(strength))
        fail("drive", "drive strength must be a finite non-negative number");
    if (c.units != UnitMode::DimensionlessGamma && !c.preset && !c.transition)
        fail("units", std::string("\"") + unit_mode_name(c.units) +
                          "\" units need a transition to fix the decay-rate scale");
    if (c.noise && !(c.noise->sigma >= 0.0))
        fail("noise", "\"sigma\" must be non-negative");
}

std::string format_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

ScenarioConfig scenario_from_json(const json& j) {
    require_object(j, "top level");
    check_keys(j, "top level",
               {"config_version", "units", "transition", "drive", "corrections", "grid",
                "noise", "shift_detuning_in_envelope"});

    ScenarioConfig c;
    if (j.contains("config_version"))
        c.config_version = get_int(j, "config_version", "config_version");
    if (j.contains("units"))
        c.units = unit_mode_from_name(get_string(j, "units", "units"));

    if (const auto it = j.find("transition"); it != j.end()) {
        if (it->is_string()) {
            c.preset = it->get<std::string>();
        } else {
            require_object(*it, "transition");
            check_keys(*it, "transition", {"Z", "ground", "excited", "gamma_rad_per_s"});
            TransitionSpec t;
            if (it->contains("Z"))
                t.Z = get_int(*it, "transition", "Z");
            if (const auto g = it->find("ground"); g != it->end()) {
                require_object(*g, "transition.ground");
                check_keys(*g, "transition.ground", {"n", "l"});
                t.n_g = get_int(*g, "transition.ground", "n");
                t.l_g = get_int(*g, "transition.ground", "l");
            }
            if (const auto e = it->find("excited"); e != it->end()) {
                require_object(*e, "transition.excited");
                check_keys(*e, "transition.excited", {"n", "l"});
                t.n_e = get_int(*e, "transition.excited", "n");
                t.l_e = get_int(*e, "transition.excited", "l");
            }
            t.gamma_rad_per_s = opt_number(*it, "transition", "gamma_rad_per_s");
            c.transition = t;
        }
    }

    const auto drive = j.find("drive");
    if (drive == j.end())
        fail("drive", "required key missing");
    require_object(*drive, "drive");
    check_keys(*drive, "drive", {"omega", "h", "delta", "omega_L"});
    c.Omega = opt_number(*drive, "drive", "omega");
    c.h = opt_number(*drive, "drive", "h");
    c.Delta = opt_number(*drive, "drive", "delta").value_or(0.0);
    c.omega_L = opt_number(*drive, "drive", "omega_L");

    if (const auto corr = j.find("corrections"); corr != j.end()) {
        require_object(*corr, "corrections");
        check_keys(*corr, "corrections", {"mode", "C", "L_bare"});
        if (corr->contains("mode"))
            c.mode = correction_mode_from_name(get_string(*corr, "corrections", "mode"));
        c.C_override = opt_number(*corr, "corrections", "C");
        c.L_bare_override = opt_number(*corr, "corrections", "L_bare");
    }

    if (const auto grid = j.find("grid"); grid != j.end()) {
        require_object(*grid, "grid");
        check_keys(*grid, "grid", {"min", "max", "count"});
        GridSpec g;
        g.min = get_number(*grid, "grid", "min");
        g.max = get_number(*grid, "grid", "max");
        g.count = get_int(*grid, "grid", "count");
        c.grid = g;
    }

    if (const auto noise = j.find("noise"); noise != j.end()) {
        require_object(*noise, "noise");
        check_keys(*noise, "noise", {"sigma", "seed"});
        NoiseSpec n;
        n.sigma = get_number(*noise, "noise", "sigma");
        if (noise->contains("seed")) {
            const auto it = noise->find("seed");
            if (!it->is_number_unsigned() && !it->is_number_integer())
                fail("noise", "key \"seed\" must be an unsigned integer");
            n.seed = it->get<std::uint64_t>();
        }
        c.noise = n;
    }

    if (const auto flag = j.find("shift_detuning_in_envelope"); flag != j.end()) {
        if (!flag->is_boolean())
            fail("shift_detuning_in_envelope", "must be a boolean");
        c.shift_detuning_in_envelope = flag->get<bool>();
    }

    validate(c);
    return c;
}

ScenarioConfig scenario_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open scenario file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // convert the byte offset into a line number for the diagnostic
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n')
                ++line;
        throw ValidationError("scenario file " + path + " line " + std::to_string(line) +
                              ": " + e.what());
    }
    try {
        return scenario_from_json(j);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string(e.what()) + " (in " + path + ")");
    }
}

json scenario_to_json(const ScenarioConfig& c) {
    json j;
    j["config_version"] = c.config_version;
    j["units"] = unit_mode_name(c.units);
    if (c.preset) {
        j["transition"] = *c.preset;
    } else if (c.transition) {
        json t;
        t["Z"] = c.transition->Z;
        t["ground"] = {{"n", c.transition->n_g}, {"l", c.transition->l_g}};
        t["excited"] = {{"n", c.transition->n_e}, {"l", c.transition->l_e}};
        if (c.transition->gamma_rad_per_s)
            t["gamma_rad_per_s"] = *c.transition->gamma_rad_per_s;
        j["transition"] = t;
    }
    json drive;
    if (c.Omega)
        drive["omega"] = *c.Omega;
    if (c.h)
        drive["h"] = *c.h;
    drive["delta"] = c.Delta;
    if (c.omega_L)
        drive["omega_L"] = *c.omega_L;
    j["drive"] = drive;
    json corr;
    corr["mode"] = correction_mode_name(c.mode);
    if (c.C_override)
        corr["C"] = *c.C_override;
    if (c.L_bare_override)
        corr["L_bare"] = *c.L_bare_override;
    j["corrections"] = corr;
    if (c.grid)
        j["grid"] = {{"min", c.grid->min}, {"max", c.grid->max}, {"count", c.grid->count}};
    if (c.noise)
        j["noise"] = {{"sigma", c.noise->sigma}, {"seed", c.noise->seed}};
    if (c.shift_detuning_in_envelope)
        j["shift_detuning_in_envelope"] = true;
    return j;
}

std::pair<double, double> ResolvedScenario::applied_corrections(CorrectionMode mode) const {
    switch (mode) {
    case CorrectionMode::None:
        return {0.0, 0.0};
    case CorrectionMode::Bare:
        return {0.0, L_bare};
    case CorrectionMode::Full:
        return {C, L_bare};
    }
    return {0.0, 0.0};
}

SpectrumScenario ResolvedScenario::spectrum_scenario() const {
    SpectrumScenario sc;
    sc.Omega = Omega;
    sc.Delta = Delta;
    sc.Gamma = Gamma;
    sc.C = C;
    sc.L_bare = L_bare;
    sc.omega_L = omega_L;
    if (config.grid)
        sc.grid = *config.grid;
    sc.shift_detuning_in_envelope = config.shift_detuning_in_envelope;
    return sc;
}

ResolvedScenario resolve_scenario(const ScenarioConfig& config,
                                  const PhysicalConstants& constants) {
    validate(config);

    ResolvedScenario rs;
    rs.config = config;
    rs.constants = constants;

    if (config.preset) { // only "H-1S2P" passes validate()
        rs.transition = make_transition(make_bound_state(1, 1, 0),
                                        make_bound_state(1, 2, 1), constants);
    } else if (config.transition) {
        const TransitionSpec& t = *config.transition;
        std::optional<double> gamma_nat;
        if (t.gamma_rad_per_s)
            gamma_nat = *t.gamma_rad_per_s / constants.natural_to_rad_per_s();
        rs.transition = make_transition(make_bound_state(t.Z, t.n_g, t.l_g),
                                        make_bound_state(t.Z, t.n_e, t.l_e), constants,
                                        gamma_nat);
    }

    rs.gamma_natural = rs.transition ? rs.transition->Gamma : 1.0;
    rs.units = UnitSystem(config.units, constants, rs.gamma_natural);
    if (rs.transition)
        rs.coefficients = radiative_coefficients(*rs.transition, constants);

    rs.Gamma = rs.units.frequency_from_natural(rs.gamma_natural);
    rs.Omega = config.Omega ? *config.Omega : *config.h * rs.Gamma;
    rs.h = rs.Omega / rs.Gamma;
    rs.Delta = config.Delta;
    rs.omega_L = config.omega_L.value_or(0.0);

    rs.C_overridden = config.C_override.has_value();
    rs.L_bare_overridden = config.L_bare_override.has_value();
    rs.C = rs.C_overridden ? *config.C_override : rs.coefficients.C;
    rs.L_bare = rs.L_bare_overridden
                    ? *config.L_bare_override
                    : rs.units.frequency_from_natural(rs.coefficients.L_bare);

    const double Omega_R = std::hypot(rs.Omega, rs.Delta);
    if (Omega_R < 10.0 * rs.Gamma)
        rs.warnings.push_back("secular approximation marginal: Omega_R = " +
                              format_g(Omega_R / rs.Gamma) +
                              " Gamma < 10 Gamma; the three-Lorentzian spectrum "
                              "degrades in this regime");
    return rs;
}

} // namespace mollow
