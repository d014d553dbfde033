#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "molgate/dynamics.hpp"
#include "molgate/errors.hpp"
#include "molgate/rates.hpp"
#include "test_helpers.hpp"

using namespace molgate;
using namespace molgate::test;

namespace {

std::shared_ptr<const LevelBasis> basis_of(const System& sys) {
    return std::make_shared<const LevelBasis>(LevelBasis::from_system(sys));
}

Schedule single_pulse(double rabi, double duration, double detuning = 0.0, double phase = 0.0) {
    Schedule s;
    s.pulses.push_back({Target::MoleculeA, "1", "e", rabi, detuning, phase, 0.0, duration});
    s.total_time_s = duration;
    return s;
}

RegisterState random_state(std::shared_ptr<const LevelBasis> basis, unsigned seed) {
    std::mt19937 gen(seed);
    std::normal_distribution<double> dist;
    RegisterState s;
    s.basis = basis;
    s.amplitudes = Vector::Zero(basis->dim());
    for (int k = 0; k < basis->dim(); ++k) s.amplitudes(k) = Complex(dist(gen), dist(gen));
    s.amplitudes /= s.amplitudes.norm();
    return s;
}

}  // namespace

TEST_CASE("segment hamiltonian construction") {
    const System sys = co_lattice_system();
    auto basis = basis_of(sys);

    SUBCASE("empty schedule, zero-dipole ground -> only |ee> interaction") {
        Schedule s;
        s.total_time_s = 1.0;
        const auto h = segment_hamiltonian(s, 0.5, sys, basis, false);
        // CO: 1.5 D on |e> both sides, lattice r = 1 um, theta = 0
        const int ee = basis->flat_index(2, 2);
        for (int i = 0; i < basis->dim(); ++i) {
            for (int j = 0; j < basis->dim(); ++j) {
                const double expect = (i == ee && j == ee) ? 4267.132272386261 : 0.0;
                CHECK(std::abs(h.hermitian(i, j) - expect) < 1e-9 * std::max(1.0, expect));
            }
        }
    }

    SUBCASE("resonant pulse term") {
        const Schedule s = single_pulse(2.0e3, 1.0e-3);
        const auto h = segment_hamiltonian(s, 0.5e-3, sys, basis, false);
        const int i1 = basis->flat_index(1, 0);
        const int ie = basis->flat_index(2, 0);
        CHECK(std::abs(h.hermitian(ie, i1) - Complex(1.0e3)) < 1e-9);
        CHECK(std::abs(h.hermitian(i1, ie) - Complex(1.0e3)) < 1e-9);
        // Hermiticity
        CHECK((h.hermitian - h.hermitian.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    }

    SUBCASE("time outside schedule") {
        Schedule s;
        s.total_time_s = 1.0;
        CHECK_THROWS_AS(segment_hamiltonian(s, 2.0, sys, basis, false), InvalidTime);
    }
}

TEST_CASE("rabi solutions") {
    const System sys = co_lattice_system();
    auto basis = basis_of(sys);
    const double rabi = 2.0e4;
    PropagationOptions opts;

    SUBCASE("pi pulse: |1> -> -i|e>") {
        const auto res = propagate(product_state(basis, "1", "0"),
                                   single_pulse(rabi, M_PI / rabi), sys, opts);
        const Complex amp = res.final_state.amplitudes(basis->flat_index(2, 0));
        CHECK(std::abs(amp - Complex(0.0, -1.0)) < 1e-9);
    }

    SUBCASE("2pi pulse: |1> -> -|1>") {
        const auto res = propagate(product_state(basis, "1", "0"),
                                   single_pulse(rabi, 2.0 * M_PI / rabi), sys, opts);
        const Complex amp = res.final_state.amplitudes(basis->flat_index(1, 0));
        CHECK(std::abs(amp - Complex(-1.0)) < 1e-9);
    }

    SUBCASE("free |ee> evolution for t = pi/V -> -|ee>") {
        const double v = dipole_dipole_rate(1.5, 1.5, sys.geometry);
        Schedule s;
        s.total_time_s = M_PI / v;
        const auto res = propagate(product_state(basis, "e", "e"), s, sys, opts);
        const Complex amp = res.final_state.amplitudes(basis->flat_index(2, 2));
        CHECK(std::abs(amp - Complex(-1.0)) < 1e-9);
    }
}

TEST_CASE("unitarity and composition") {
    const System sys = co_lattice_system();
    auto basis = basis_of(sys);
    PropagationOptions opts;

    Schedule s;
    s.pulses.push_back({Target::MoleculeA, "1", "e", 3.0e4, 5.0e3, 0.7, 0.0, 1.1e-4});
    s.pulses.push_back({Target::MoleculeB, "1", "e", 1.7e4, -2.0e3, 0.1, 0.5e-4, 2.0e-4});
    s.total_time_s = 4.0e-4;

    for (unsigned seed : {1u, 2u, 3u}) {
        const auto psi = random_state(basis, seed);
        const auto phi = random_state(basis, seed + 100);
        const auto psi_out = propagate(psi, s, sys, opts).final_state;
        const auto phi_out = propagate(phi, s, sys, opts).final_state;
        CHECK(std::abs(psi_out.norm2() - 1.0) < 1e-10);
        CHECK(std::abs(overlap(psi_out, phi_out) - overlap(psi, phi)) < 1e-10);
    }

    // splitting the schedule in half at an arbitrary point changes nothing
    Schedule first = s, second;
    first.total_time_s = 1.3e-4;
    first.pulses[1].duration_s = first.total_time_s - first.pulses[1].t_start_s;
    second.pulses.push_back({Target::MoleculeB, "1", "e", 1.7e4, -2.0e3, 0.1, 0.0, 1.2e-4});
    second.total_time_s = 2.7e-4;
    const auto psi = random_state(basis, 7);
    const auto whole = propagate(psi, s, sys, opts).final_state;
    const auto split =
        propagate(propagate(psi, first, sys, opts).final_state, second, sys, opts).final_state;
    CHECK((whole.amplitudes - split.amplitudes).norm() < 1e-10);
}

TEST_CASE("decay: norm non-increasing") {
    const System sys = co_lattice_system();  // |e> lifetime 1 s
    auto basis = basis_of(sys);
    PropagationOptions opts;
    opts.include_decay = true;
    opts.trajectory_samples = 40;

    Schedule s = single_pulse(50.0, 0.2);  // slow drive, decay visible
    const auto res = propagate(product_state(basis, "1", "0"), s, sys, opts);
    double prev = 1.0 + 1e-12;
    for (const auto& sample : res.trajectory) {
        const double n = sample.state.norm2();
        CHECK(n <= prev + 1e-12);
        prev = n;
    }
    CHECK(res.final_state.norm2() < 1.0);
}

TEST_CASE("eq1 phase accumulator") {
    SUBCASE("constant rho_e = 1 over t = pi/rate") {
        const double rate = 2.0e3;
        const std::vector<double> times{0.0, M_PI / rate / 2.0, M_PI / rate};
        const std::vector<double> w{1.0, 1.0, 1.0};
        CHECK(eq1_phase(times, w, rate) == doctest::Approx(M_PI).epsilon(1e-12));
        CHECK(eq1_phase(times, {0.0, 0.0, 0.0}, rate) == 0.0);
    }

    SUBCASE("rho_e = sin^2(Omega t / 2) over one Rabi period: phi = rate * 3T/8") {
        const double omega = 2.0 * M_PI;  // period T = 1
        const double rate = 5.0;
        const int n = 20001;
        std::vector<double> times(n), w(n);
        for (int i = 0; i < n; ++i) {
            times[i] = static_cast<double>(i) / (n - 1);
            const double rho = std::sin(omega * times[i] / 2.0) * std::sin(omega * times[i] / 2.0);
            w[i] = rho * rho;
        }
        CHECK(eq1_phase(times, w, rate) == doctest::Approx(rate * 3.0 / 8.0).epsilon(1e-6));
    }

    SUBCASE("empty trajectory") {
        CHECK_THROWS_AS(eq1_phase({}, {}, 1.0), EmptyTrajectory);
    }
}
