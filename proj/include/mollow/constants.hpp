// constants.hpp - frozen CODATA 2018 constants and unit-system conversions
//
// The library computes in natural units (hbar = c = epsilon0 = 1) with all
// energies and angular frequencies expressed in units of the electron mass.
// In these units m = 1, the Bohr radius is 1/alpha, and the Hartree is
// alpha^2.  Conversion to SI angular frequency multiplies by m c^2 / hbar.

#pragma once

#include <string>

namespace mollow {

struct PhysicalConstants {
    // dimensionless
    double alpha = 7.2973525693e-3; // fine-structure constant

    // natural-unit mass scale; everything internal is a multiple of this
    double electron_mass = 1.0;

    // SI values
    double electron_mass_kg = 9.1093837015e-31;
    double hbar = 1.054571817e-34;      // J s
    double c = 299792458.0;             // m/s (exact)
    double epsilon0 = 8.8541878128e-12; // F/m
    double elementary_charge = 1.602176634e-19; // C (exact)
    double bohr_radius = 5.29177210903e-11;     // m

    // m c^2 / hbar: natural angular frequency -> rad/s
    double natural_to_rad_per_s() const { return electron_mass_kg * c * c / hbar; }

    // Hartree = alpha^2 m
    double hartree_to_rad_per_s() const { return alpha * alpha * natural_to_rad_per_s(); }

    // frozen CODATA 2018 set (the defaults above)
    static PhysicalConstants codata2018() { return PhysicalConstants{}; }

    // Defaults with selected values replaced from a key-value file
    // ("key = value" lines, '#' comments).  Recognized keys: alpha,
    // electron_mass_kg, hbar, c, epsilon0, elementary_charge, bohr_radius.
    // Unknown keys raise ValidationError with the offending line number.
    static PhysicalConstants from_file(const std::string& path);
};

// Working unit for frequencies in scenario input and report output.
enum class UnitMode {
    DimensionlessGamma, // frequencies as multiples of a reference decay rate
    NaturalAtomic,      // multiples of the electron mass
    SI,                 // rad/s
};

const char* unit_mode_name(UnitMode mode);
UnitMode unit_mode_from_name(const std::string& name);

// Bijective frequency conversion between the three modes.  The internal
// canonical representation is natural units.
class UnitSystem {
public:
    UnitSystem(UnitMode mode, const PhysicalConstants& constants,
               double reference_gamma_natural = 1.0);

    UnitMode mode() const { return mode_; }
    double reference_gamma() const { return reference_gamma_; }

    double frequency_to_natural(double value) const;
    double frequency_from_natural(double natural) const;

private:
    UnitMode mode_;
    double reference_gamma_; // natural units; only used in DimensionlessGamma mode
    double natural_to_si_;   // m c^2 / hbar
};

} // namespace mollow
