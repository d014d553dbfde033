#include <doctest.h>

#include <cmath>

#include "molgate/constants.hpp"
#include "molgate/errors.hpp"
#include "molgate/rates.hpp"
#include "test_helpers.hpp"

using namespace molgate;
using namespace molgate::test;

TEST_CASE("debye conversion") {
    CHECK(debye_to_si(1.0) == doctest::Approx(3.33564e-30).epsilon(1e-12));
    CHECK(debye_to_si(0.0) == 0.0);
    CHECK(debye_to_si(10.0) == doctest::Approx(3.33564e-29).epsilon(1e-12));
}

// Independent constants-arithmetic oracle for the lattice rate, written
// out term by term so it cannot share a mistake with the implementation.
static double lattice_rate_oracle(double dA_D, double dB_D, double r, double theta) {
    const double dA = dA_D * 3.33564e-30;
    const double dB = dB_D * 3.33564e-30;
    const double four_pi_eps0 = 1.11265005545e-10;
    const double hbar = 1.054571817e-34;
    return dA * dB * (3.0 * std::cos(theta) * std::cos(theta) - 1.0) /
           (four_pi_eps0 * hbar * r * r * r);
}

static double wire_rate_oracle(double dA_D, double dB_D, double h, double r) {
    return dA_D * dB_D * 3.33564e-30 * 3.33564e-30 /
           (1.11265005545e-10 * 1.054571817e-34 * h * h * r);
}

TEST_CASE("dipole-dipole rate: frozen oracle values") {
    // 1 D, 1 D, lattice r = 1 um, theta = 0
    const double rate = dipole_dipole_rate(1.0, 1.0, lattice(1e-6));
    CHECK(rate == doctest::Approx(1896.5032321716717).epsilon(1e-12));
    CHECK(rate == doctest::Approx(lattice_rate_oracle(1.0, 1.0, 1e-6, 0.0)).epsilon(1e-12));

    // magic angle annihilates the angular factor
    CHECK_THROWS_AS(dipole_dipole_rate(3.7, 5.1, lattice(1e-6, kMagicAngle)), ZeroRate);

    // 10 D, 10 D, wire h = 0.1 um, r = 10 um
    const double w = dipole_dipole_rate(10.0, 10.0, wire(0.1e-6, 10e-6));
    CHECK(w == doctest::Approx(948251.616085836).epsilon(1e-12));
    CHECK(w == doctest::Approx(wire_rate_oracle(10.0, 10.0, 0.1e-6, 10e-6)).epsilon(1e-12));
}

TEST_CASE("dipole-dipole rate: scaling properties") {
    const Geometry g = lattice(1e-6, 0.3);
    const double base = dipole_dipole_rate(1.0, 1.0, g);
    for (double dA : {0.5, 2.0, 7.0}) {
        for (double dB : {1.0, 3.0}) {
            CHECK(dipole_dipole_rate(dA, dB, g) == doctest::Approx(dA * dB * base).epsilon(1e-12));
        }
    }
    // r^-3: halving r multiplies by 8
    Geometry half = g;
    half.r_m = 0.5e-6;
    CHECK(dipole_dipole_rate(1.0, 1.0, half) == doctest::Approx(8.0 * base).epsilon(1e-12));
    // theta = pi/2 negative, theta = 0 positive, magnitude ratio exactly 1:2
    const double perp = dipole_dipole_rate(1.0, 1.0, lattice(1e-6, M_PI / 2.0));
    const double par = dipole_dipole_rate(1.0, 1.0, lattice(1e-6, 0.0));
    CHECK(perp < 0.0);
    CHECK(par > 0.0);
    CHECK(par == doctest::Approx(-2.0 * perp).epsilon(1e-12));
}

TEST_CASE("pi phase time") {
    CHECK(pi_phase_time(M_PI, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pi_phase_time(948251.616085836, 1.0) ==
          doctest::Approx(3.3130369622332554e-6).epsilon(1e-12));
    CHECK(pi_phase_time(4267.132272386261, 1.0) ==
          doctest::Approx(7.362304360518347e-4).epsilon(1e-12));
    CHECK_THROWS_AS(pi_phase_time(0.0, 1.0), ZeroRate);
    // tau * |rate| * rho^2 == pi
    for (double rate : {1.0, -3.7e4, 9.48e5}) {
        for (double rho : {0.1, 0.5, 1.0}) {
            CHECK(pi_phase_time(rate, rho) * std::abs(rate) * rho * rho ==
                  doctest::Approx(M_PI).epsilon(1e-12));
        }
    }
}

TEST_CASE("operations budget") {
    CHECK(operations_budget(1.0, 1e-3) == 1000);
    CHECK(operations_budget(1.0, 7.4e-4) == 1351);
    CHECK(operations_budget(1.0, 3.31e-6) == 302114);
}

// Oracle: diagonalize the 2x2 Stark Hamiltonian numerically and take a
// central finite difference of the ground energy vs E.
static double stark_oracle(double mu_D, double B, double E) {
    auto ground = [&](double field) {
        const double c = mu_D * 3.33564e-30 * field / std::sqrt(3.0);
        // eigenvalues of [[0, -c], [-c, 2B]]
        return B - std::sqrt(B * B + c * c);
    };
    const double dE = std::max(E, 1.0) * 1e-6;
    return -(ground(E + dE) - ground(E - dE)) / (2.0 * dE) / 3.33564e-30;
}

TEST_CASE("stark mixed dipole") {
    const double mu = 7.0;
    const double B = 0.19 * 1.986445857e-23;
    CHECK(stark_mixed_dipole(mu, B, 0.0) == 0.0);

    // weak field: mu^2 E / (3B) within 0.01%
    const double E_small = 0.01 * B / (mu * 3.33564e-30);
    const double expected_small = mu * mu * 3.33564e-30 * E_small / (3.0 * B);
    CHECK(stark_mixed_dipole(mu, B, E_small) ==
          doctest::Approx(expected_small).epsilon(1e-4));
    CHECK(stark_mixed_dipole(mu, B, E_small) ==
          doctest::Approx(stark_oracle(mu, B, E_small)).epsilon(1e-5));

    // strong field asymptote mu/sqrt(3)
    const double E_big = 1e4 * B / (mu * 3.33564e-30);
    CHECK(stark_mixed_dipole(mu, B, E_big) ==
          doctest::Approx(mu / std::sqrt(3.0)).epsilon(1e-3));
    CHECK(stark_mixed_dipole(mu, B, E_big) ==
          doctest::Approx(stark_oracle(mu, B, E_big)).epsilon(1e-5));

    // monotone in E, bounded by mu/sqrt(3)
    double prev = -1.0;
    for (double x = 1e-3; x <= 1e5; x *= 10.0) {
        const double d = stark_mixed_dipole(mu, B, x * B / (mu * 3.33564e-30));
        CHECK(d > prev);
        CHECK(d <= mu / std::sqrt(3.0) + 1e-12);
        prev = d;
    }
}

TEST_CASE("molecule presets validate") {
    for (const auto& name : preset_names()) {
        CHECK_NOTHROW(preset_molecule(name).validate());
    }
    CHECK_THROWS_AS(preset_molecule("Xe2"), ConfigError);
    CHECK(preset_molecule("RbCs").mass_kg ==
          doctest::Approx(221.86 * 1.66053906660e-27).epsilon(1e-12));
}
