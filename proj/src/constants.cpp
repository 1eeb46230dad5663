#include "mollow/constants.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "mollow/errors.hpp"

namespace mollow {

PhysicalConstants PhysicalConstants::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open constants file: " + path);

    PhysicalConstants out = codata2018();
    std::map<std::string, double*> keys = {
        {"alpha", &out.alpha},
        {"electron_mass_kg", &out.electron_mass_kg},
        {"hbar", &out.hbar},
        {"c", &out.c},
        {"epsilon0", &out.epsilon0},
        {"elementary_charge", &out.elementary_charge},
        {"bohr_radius", &out.bohr_radius},
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::string key;
        std::string eq;
        double value = 0;
        std::istringstream ls(line);
        if (!(ls >> key))
            continue; // blank line
        // accept "key = value" and "key value"
        if (!(ls >> eq))
            throw ValidationError("constants file line " + std::to_string(lineno) + ": missing value");
        if (eq == "=") {
            if (!(ls >> value))
                throw ValidationError("constants file line " + std::to_string(lineno) + ": missing value");
        } else {
            std::istringstream vs(eq);
            if (!(vs >> value))
                throw ValidationError("constants file line " + std::to_string(lineno) + ": bad value '" + eq + "'");
        }
        auto it = keys.find(key);
        if (it == keys.end())
            throw ValidationError("constants file line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        *it->second = value;
    }
    return out;
}

const char* unit_mode_name(UnitMode mode) {
    switch (mode) {
    case UnitMode::DimensionlessGamma: return "gamma";
    case UnitMode::NaturalAtomic: return "natural";
    case UnitMode::SI: return "si";
    }
    return "?";
}

UnitMode unit_mode_from_name(const std::string& name) {
    if (name == "gamma") return UnitMode::DimensionlessGamma;
    if (name == "natural") return UnitMode::NaturalAtomic;
    if (name == "si") return UnitMode::SI;
    throw ValidationError("unknown unit mode '" + name + "' (expected gamma|natural|si)");
}

UnitSystem::UnitSystem(UnitMode mode, const PhysicalConstants& constants,
                       double reference_gamma_natural)
    : mode_(mode),
      reference_gamma_(reference_gamma_natural),
      natural_to_si_(constants.natural_to_rad_per_s()) {
    if (mode_ == UnitMode::DimensionlessGamma && !(reference_gamma_ > 0))
        throw ValidationError("DimensionlessGamma mode needs a positive reference decay rate");
}

double UnitSystem::frequency_to_natural(double value) const {
    switch (mode_) {
    case UnitMode::DimensionlessGamma: return value * reference_gamma_;
    case UnitMode::NaturalAtomic: return value;
    case UnitMode::SI: return value / natural_to_si_;
    }
    return value;
}

double UnitSystem::frequency_from_natural(double natural) const {
    switch (mode_) {
    case UnitMode::DimensionlessGamma: return natural / reference_gamma_;
    case UnitMode::NaturalAtomic: return natural;
    case UnitMode::SI: return natural * natural_to_si_;
    }
    return natural;
}

} // namespace mollow
