#ifndef MOLGATE_ANALYSIS_HPP
#define MOLGATE_ANALYSIS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "molgate/dynamics.hpp"
#include "molgate/protocols.hpp"

namespace molgate {

// Gate characterization from computational-basis round trips.
// Phase order: (phi00, phi01, phi10, phi11), molecule A first.
struct GateResult {
    std::array<double, 4> phases_rad{};
    double entangling_phase_chi_rad = 0.0;
    std::array<double, 4> leakage{};  // 1 - |returning amplitude|^2 per input
    double leakage_max = 0.0;
    double success_probability = 1.0;  // min final norm^2 over basis inputs
    double bell_fidelity = 0.0;        // vs CZ, optimized over local Z phases
    std::vector<std::string> warnings;
};

struct ScanRow {
    double ratio = 0.0;  // V / Omega
    double infidelity = 0.0;
    double leakage = 0.0;
};

struct ScanResult {
    std::vector<ScanRow> rows;
};

struct MonteCarloResult {
    long long samples = 0;
    double phase_mean_rad = 0.0;
    double phase_std_rad = 0.0;
    double relative_spread = 0.0;
    std::uint64_t seed = 0;
};

// Principal value in (-pi, pi].
double wrap_phase(double phi);
// Distance between two angles on the circle, in [0, pi].
double circular_distance(double a, double b);

// Propagates |00>,|01>,|10>,|11| and the balanced superposition through
// the schedule. Throws DegenerateGate when a basis state returns with
// amplitude magnitude < 0.5.
GateResult extract_gate(const Schedule& schedule, const System& sys,
                        const PropagationOptions& opts);
GateResult extract_gate(const BuiltScheme& built, const PropagationOptions& opts);

// |chi - pi| <= tol on the circle.
bool cz_equivalent(const GateResult& result, double tol_rad);

// Blockade quality vs interaction strength: for each ratio V/Omega the
// excited-state dipoles are rescaled to hit that ratio at fixed Omega,
// then the blockade gate is rebuilt and characterized.
ScanResult blockade_scan(const SchemeParams& base, const std::vector<double>& ratios,
                         const PropagationOptions& opts);

// Least-squares slope of log(infidelity) vs log(ratio) over rows with
// ratio in [ratio_min, ratio_max].
double loglog_slope(const ScanResult& scan, double ratio_min, double ratio_max);

// Frozen-position thermal error budget: separation r' = r + delta with
// delta ~ Normal(0, sep_sigma), rejected while r' <= 0; the interaction
// phase is recomputed at fixed hold time. Deterministic per seed
// (SplitMix64 + Box-Muller, see rng.hpp).
MonteCarloResult thermal_phase_spread(const System& sys, const Schedule& schedule,
                                      double sep_sigma_m, long long samples,
                                      std::uint64_t seed);

// Per-molecule rms position spread in a harmonic trap, and the sqrt(2)
// aggregation into a separation spread.
double thermal_sigma_single(double T_K, double mass_kg, double trap_omega_rad_s);
double thermal_sigma_from_temperature(double T_K, double mass_kg, double trap_omega_rad_s);

}  // namespace molgate

#endif
