// test_physical_core.cpp - constants, unit conversions, and the hydrogenic
// matrix elements, each closed form cross-checked against the independent
// radial-quadrature oracle.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "mollow/constants.hpp"
#include "mollow/errors.hpp"
#include "mollow/hydrogenic.hpp"
#include "support/radial_oracle.hpp"

using namespace mollow;

namespace {
double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}
} // namespace

TEST_CASE("frozen constants and conversion factors") {
    const PhysicalConstants c = PhysicalConstants::codata2018();
    CHECK(c.alpha == 7.2973525693e-3);
    CHECK(c.electron_mass == 1.0);
    CHECK(c.c == 299792458.0);
    // m c^2 / hbar, the natural-frequency unit in rad/s
    CHECK(rel_diff(c.natural_to_rad_per_s(), 7.763440711e20) < 1e-9);
    // Hartree / hbar
    CHECK(rel_diff(c.hartree_to_rad_per_s(), 4.1341373336e16) < 1e-9);
}

TEST_CASE("constants file parsing") {
    const char* path = "constants_test.txt";
    {
        std::ofstream out(path);
        out << "# test constants override\n"
            << "alpha = 7.5e-3\n"
            << "c 3.0e8\n";
    }
    const PhysicalConstants c = PhysicalConstants::from_file(path);
    CHECK(c.alpha == 7.5e-3);
    CHECK(c.c == 3.0e8);
    CHECK(c.hbar == 1.054571817e-34); // untouched default
    std::remove(path);

    SUBCASE("unknown keys are rejected with a line number") {
        {
            std::ofstream out(path);
            out << "alpha = 7.3e-3\nbogus = 1\n";
        }
        CHECK_THROWS_WITH_AS(PhysicalConstants::from_file(path),
                             doctest::Contains("line 2"), ValidationError);
        std::remove(path);
    }
    SUBCASE("missing file is an IO error") {
        CHECK_THROWS_AS(PhysicalConstants::from_file("no_such_constants_file"), IoError);
    }
}

TEST_CASE("unit-system conversions are bijective") {
    const PhysicalConstants c = PhysicalConstants::codata2018();

    const UnitSystem gamma(UnitMode::DimensionlessGamma, c, 2.5e-13);
    CHECK(gamma.frequency_to_natural(4.0) == doctest::Approx(1.0e-12).epsilon(1e-14));
    CHECK(gamma.frequency_from_natural(gamma.frequency_to_natural(7.0)) ==
          doctest::Approx(7.0).epsilon(1e-14));

    const UnitSystem natural(UnitMode::NaturalAtomic, c);
    CHECK(natural.frequency_to_natural(0.3) == 0.3);

    const UnitSystem si(UnitMode::SI, c);
    CHECK(rel_diff(si.frequency_to_natural(c.natural_to_rad_per_s()), 1.0) < 1e-14);

    CHECK(unit_mode_from_name("gamma") == UnitMode::DimensionlessGamma);
    CHECK(unit_mode_from_name("natural") == UnitMode::NaturalAtomic);
    CHECK(unit_mode_from_name("si") == UnitMode::SI);
    CHECK_THROWS_AS(unit_mode_from_name("parsec"), ValidationError);
}

TEST_CASE("bound-state construction and labels") {
    const BoundState s1 = make_bound_state(1, 1, 0);
    CHECK(s1.label == "1S");
    CHECK(make_bound_state(1, 2, 1).label == "2P");
    CHECK(make_bound_state(2, 3, 2).label == "3D");
    CHECK_THROWS_AS(make_bound_state(0, 1, 0), ValidationError);
    CHECK_THROWS_AS(make_bound_state(1, 0, 0), ValidationError);
    CHECK_THROWS_AS(make_bound_state(1, 2, 2), ValidationError);
    CHECK_THROWS_AS(make_bound_state(1, 1, -1), ValidationError);
}

TEST_CASE("level energies and the Lyman-alpha frequency") {
    const PhysicalConstants c = PhysicalConstants::codata2018();
    const BoundState g = make_bound_state(1, 1, 0);
    const BoundState e = make_bound_state(1, 2, 1);
    const double a2 = c.alpha * c.alpha;

    CHECK(hydrogen_energy(g, c) == doctest::Approx(-a2 / 2).epsilon(1e-15));
    CHECK(hydrogen_energy(e, c) == doctest::Approx(-a2 / 8).epsilon(1e-15));

    const double w = transition_frequency(g, e, c);
    CHECK(w == doctest::Approx(0.375 * a2).epsilon(1e-15));
    // wavelength 121.5 nm
    const double lambda = 2 * std::numbers::pi * c.c / (w * c.natural_to_rad_per_s());
    CHECK(rel_diff(lambda, 121.50e-9) < 2e-4);

    // Z^2 scaling
    const double w_he = transition_frequency(make_bound_state(2, 1, 0),
                                             make_bound_state(2, 2, 1), c);
    CHECK(rel_diff(w_he, 4.0 * w) < 1e-15);
}

TEST_CASE("contact densities match the radial-quadrature oracle") {
    const PhysicalConstants c = PhysicalConstants::codata2018();
    for (const auto& [Z, n, l] : {std::tuple{1, 1, 0}, {1, 2, 0}, {2, 1, 0}, {3, 3, 0}}) {
        CAPTURE(Z);
        CAPTURE(n);
        const double closed = contact_density(make_bound_state(Z, n, l), c);
        const double quad = oracle::contact_density(Z, n, l, c.alpha);
        CHECK(rel_diff(closed, quad) < 1e-8);
    }
    // l >= 1 states vanish at the origin identically
    CHECK(contact_density(make_bound_state(1, 2, 1), c) == 0.0);
    CHECK(oracle::contact_density(1, 2, 1, c.alpha) == 0.0);
    // ground-state value in units of (alpha m)^3: 1/pi
    const double ref = std::pow(c.alpha, 3) / std::numbers::pi;
    CHECK(rel_diff(contact_density(make_bound_state(1, 1, 0), c), ref) < 1e-15);
}

TEST_CASE("momentum expectations match the radial-quadrature oracle") {
    const PhysicalConstants c = PhysicalConstants::codata2018();
    for (const auto& [Z, n, l] :
         {std::tuple{1, 1, 0}, {1, 2, 0}, {1, 2, 1}, {1, 3, 2}, {2, 2, 1}}) {
        CAPTURE(Z);
        CAPTURE(n);
        CAPTURE(l);
        const double closed = expectation_p_squared(make_bound_state(Z, n, l), c);
        const double quad = oracle::expectation_p_squared(Z, n, l, c.alpha);
        CHECK(rel_diff(closed, quad) < 1e-8);
    }
    // virial: <p^2>/2 = -E_n
    const BoundState e = make_bound_state(1, 2, 1);
    CHECK(rel_diff(expectation_p_squared(e, c), -2.0 * hydrogen_energy(e, c)) < 1e-15);
}

TEST_CASE("1S-2P dipole element matches the radial-quadrature oracle") {
    const PhysicalConstants c = PhysicalConstants::codata2018();
    const BoundState g = make_bound_state(1, 1, 0);
    const BoundState e = make_bound_state(1, 2, 1);

    const double z = dipole_z_element(g, e, c);
    CHECK(rel_diff(z, oracle::dipole_z_1s2p(1, c.alpha)) < 1e-8);
    // (128 sqrt(2) / 243) in units of the Bohr radius 1/(alpha m)
    CHECK(rel_diff(z * c.alpha, 128.0 * std::sqrt(2.0) / 243.0) < 1e-15);
    // argument order must not matter
    CHECK(dipole_z_element(e, g, c) == z);
    // Z scaling: 1/Z
    CHECK(rel_diff(dipole_z_element(make_bound_state(2, 1, 0), make_bound_state(2, 2, 1), c),
                   z / 2.0) < 1e-15);

    SUBCASE("pairs outside the table are rejected") {
        CHECK_THROWS_AS(dipole_z_element(g, make_bound_state(1, 2, 0), c),
                        UnsupportedTransition); // dipole-forbidden
        CHECK_THROWS_AS(dipole_z_element(make_bound_state(1, 2, 1), make_bound_state(1, 3, 0), c),
                        UnsupportedTransition); // allowed but not tabulated
    }

    SUBCASE("momentum form of the dipole element") {
        const double w = transition_frequency(g, e, c);
        CHECK(rel_diff(dipole_p_squared(g, e, c), w * w * z * z) < 1e-15);
    }
}

TEST_CASE("Lyman-alpha decay rate") {
    const PhysicalConstants c = PhysicalConstants::codata2018();
    const BoundState g = make_bound_state(1, 1, 0);
    const BoundState e = make_bound_state(1, 2, 1);

    const double gamma_si = decay_rate(g, e, c) * c.natural_to_rad_per_s();
    CHECK(rel_diff(gamma_si, 6.265e8) < 0.02); // leading-order dipole value

    // closed form: (2/3)^8 alpha^5 m
    const double closed = std::pow(2.0 / 3.0, 8) * std::pow(c.alpha, 5);
    CHECK(rel_diff(decay_rate(g, e, c), closed) < 1e-14);

    // a measured value takes precedence
    CHECK(decay_rate(g, e, c, 1.25e-13) == 1.25e-13);

    // determinism across calls (bitwise)
    CHECK(decay_rate(g, e, c) == decay_rate(g, e, c));
}

TEST_CASE("quadrature oracle self-checks") {
    // analytic integrals
    const double s = oracle::integrate([](double x) { return std::sin(x); }, 0.0,
                                       std::numbers::pi, 1e-12);
    CHECK(rel_diff(s, 2.0) < 1e-12);
    const double lor = oracle::integrate(
        [](double x) { return 0.3 / ((x - 1.0) * (x - 1.0) + 0.04); }, -40.0, 42.0, 1e-12);
    const double exact = 0.3 / 0.2 * (std::atan(41.0 / 0.2) - std::atan(-41.0 / 0.2));
    CHECK(rel_diff(lor, exact) < 1e-12);
}
