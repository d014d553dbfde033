#include "molgate/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "molgate/constants.hpp"
#include "molgate/errors.hpp"
#include "molgate/rates.hpp"
#include "molgate/rng.hpp"

namespace molgate {

double wrap_phase(double phi) {
    phi = std::fmod(phi, 2.0 * M_PI);
    if (phi > M_PI) phi -= 2.0 * M_PI;
    if (phi <= -M_PI) phi += 2.0 * M_PI;
    return phi;
}

double circular_distance(double a, double b) {
    return std::abs(wrap_phase(a - b));
}

namespace {

constexpr const char* kComputational[2] = {"0", "1"};

// |<target| Z_A(alpha) Z_B(beta) |psi>|^2 restricted to the four
// computational amplitudes (the target has no support elsewhere).
double local_phase_fidelity(const std::array<Complex, 4>& psi,
                            const std::array<Complex, 4>& target, double alpha, double beta) {
    Complex ov = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const Complex z = std::exp(Complex(0.0, alpha * a + beta * b));
            ov += std::conj(target[2 * a + b]) * z * psi[2 * a + b];
        }
    }
    return std::norm(ov);
}

// Coarse 64x64 grid over the two local Z phases, then grid refinement
// around the best cell down to a step below 1e-5 rad. The global phase
// drops out of the modulus.
double optimize_bell_fidelity(const std::array<Complex, 4>& psi,
                              const std::array<Complex, 4>& target) {
    double best_a = 0.0, best_b = 0.0, best_f = -1.0;
    const int n0 = 64;
    for (int i = 0; i < n0; ++i) {
        for (int j = 0; j < n0; ++j) {
            const double a = 2.0 * M_PI * i / n0;
            const double b = 2.0 * M_PI * j / n0;
            const double f = local_phase_fidelity(psi, target, a, b);
            if (f > best_f) {
                best_f = f;
                best_a = a;
                best_b = b;
            }
        }
    }
    double span = 2.0 * M_PI / n0;
    while (span > 1e-5) {
        const int n = 9;
        double ba = best_a, bb = best_b;
        for (int i = -n; i <= n; ++i) {
            for (int j = -n; j <= n; ++j) {
                const double a = ba + span * i / n;
                const double b = bb + span * j / n;
                const double f = local_phase_fidelity(psi, target, a, b);
                if (f > best_f) {
                    best_f = f;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        span /= n;
    }
    return best_f;
}

}  // namespace

GateResult extract_gate(const Schedule& schedule, const System& sys,
                        const PropagationOptions& opts) {
    const auto basis = std::make_shared<const LevelBasis>(LevelBasis::from_system(sys));
    GateResult result;

    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const int k = 2 * a + b;
            const RegisterState in = product_state(basis, kComputational[a], kComputational[b]);
            const PropagationResult out = propagate(in, schedule, sys, opts);
            const int idx = basis->flat_index(basis->index_a(kComputational[a]),
                                              basis->index_b(kComputational[b]));
            const Complex amp = out.final_state.amplitudes(idx);
            if (std::abs(amp) < 0.5)
                throw DegenerateGate("basis state |" + std::string(kComputational[a]) +
                                     kComputational[b] + "> returned with |amp| = " +
                                     std::to_string(std::abs(amp)));
            result.phases_rad[k] = std::arg(amp);
            result.leakage[k] = std::max(0.0, 1.0 - std::norm(amp));
            result.success_probability =
                std::min(result.success_probability, out.final_state.norm2());
        }
    }
    result.leakage_max = *std::max_element(result.leakage.begin(), result.leakage.end());
    result.entangling_phase_chi_rad =
        wrap_phase(result.phases_rad[0] - result.phases_rad[1] - result.phases_rad[2] +
                   result.phases_rad[3]);

    // Bell-state fidelity vs CZ on the balanced superposition input.
    std::vector<std::pair<Complex, RegisterState>> terms;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            terms.push_back({0.5, product_state(basis, kComputational[a], kComputational[b])});
        }
    }
    const RegisterState bell_in = superpose(terms);
    const PropagationResult bell_out = propagate(bell_in, schedule, sys, opts);
    std::array<Complex, 4> psi{}, target{};
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const int idx = basis->flat_index(basis->index_a(kComputational[a]),
                                              basis->index_b(kComputational[b]));
            psi[2 * a + b] = bell_out.final_state.amplitudes(idx);
            target[2 * a + b] = (a == 1 && b == 1) ? -0.5 : 0.5;  // CZ on the input
        }
    }
    result.bell_fidelity = optimize_bell_fidelity(psi, target);
    return result;
}

GateResult extract_gate(const BuiltScheme& built, const PropagationOptions& opts) {
    GateResult r = extract_gate(built.schedule, built.system, opts);
    r.warnings = built.warnings;
    return r;
}

bool cz_equivalent(const GateResult& result, double tol_rad) {
    return circular_distance(result.entangling_phase_chi_rad, M_PI) <= tol_rad;
}

ScanResult blockade_scan(const SchemeParams& base, const std::vector<double>& ratios,
                         const PropagationOptions& opts) {
    if (!(base.pulse_rabi_rad_s > 0.0)) throw ConfigError("blockade_scan: pulse_rabi must be > 0");
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (!(ratios[i] > 0.0)) throw ConfigError("blockade_scan: ratios must be positive");
        if (i > 0 && !(ratios[i] > ratios[i - 1]))
            throw ConfigError("blockade_scan: ratios must be strictly increasing");
    }
    const double de_a = base.system.molecule_a.find_level("e")->dipole_expectation_debye;
    const double de_b = base.system.molecule_b.find_level("e")->dipole_expectation_debye;
    const double rate0 = dipole_dipole_rate(de_a, de_b, base.system.geometry);
    if (rate0 == 0.0) throw ZeroRate("blockade_scan: base interaction rate is zero");

    ScanResult out;
    for (const double ratio : ratios) {
        // Rescale both excited dipoles to hit |V| = ratio * Omega.
        const double scale = std::sqrt(ratio * base.pulse_rabi_rad_s / std::abs(rate0));
        SchemeParams p = base;
        p.scheme = Scheme::Blockade;
        for (MoleculeSpec* m : {&p.system.molecule_a, &p.system.molecule_b}) {
            for (auto& lv : m->levels) {
                if (lv.label == "e") lv.dipole_expectation_debye *= scale;
            }
        }
        const GateResult g = extract_gate(build_blockade(p), opts);
        out.rows.push_back({ratio, 1.0 - g.bell_fidelity, g.leakage_max});
    }
    return out;
}

double loglog_slope(const ScanResult& scan, double ratio_min, double ratio_max) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& row : scan.rows) {
        if (row.ratio >= ratio_min && row.ratio <= ratio_max && row.infidelity > 0.0)
            pts.push_back({std::log(row.ratio), std::log(row.infidelity)});
    }
    if (pts.size() < 2) throw ConfigError("loglog_slope: need at least two rows in range");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(pts.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

MonteCarloResult thermal_phase_spread(const System& sys, const Schedule& schedule,
                                      double sep_sigma_m, long long samples,
                                      std::uint64_t seed) {
    if (sep_sigma_m < 0.0 || !std::isfinite(sep_sigma_m))
        throw InvalidSigma("thermal_phase_spread: sep_sigma must be finite and >= 0");
    if (samples < 100) throw ConfigError("thermal_phase_spread: need at least 100 samples");
    schedule.validate();

    // Free-interaction (hold) time: total minus the union of pulse
    // intervals. For delta-pulse schedules this is the whole schedule.
    std::vector<std::pair<double, double>> intervals;
    for (const auto& p : schedule.pulses) intervals.push_back({p.t_start_s, p.t_end_s()});
    std::sort(intervals.begin(), intervals.end());
    double covered = 0.0, cursor = 0.0;
    for (const auto& [s, e] : intervals) {
        const double lo = std::max(s, cursor);
        const double hi = std::min(e, schedule.total_time_s);
        if (hi > lo) covered += hi - lo;
        cursor = std::max(cursor, hi);
    }
    const double hold = schedule.total_time_s - covered;

    const double de_a = sys.molecule_a.find_level("e")->dipole_expectation_debye;
    const double de_b = sys.molecule_b.find_level("e")->dipole_expectation_debye;
    if (dipole_dipole_rate(de_a, de_b, sys.geometry) == 0.0)
        throw ZeroRate("thermal_phase_spread: nominal interaction rate is zero");

    SplitMix64 rng(seed);
    RunningStats stats;
    for (long long i = 0; i < samples; ++i) {
        double r;
        do {
            r = sys.geometry.r_m + sep_sigma_m * rng.next_gaussian();
        } while (r <= 0.0);
        Geometry g = sys.geometry;
        g.r_m = r;
        stats.add(dipole_dipole_rate(de_a, de_b, g) * hold);
    }

    MonteCarloResult out;
    out.samples = stats.count();
    out.phase_mean_rad = stats.mean();
    out.phase_std_rad = stats.stddev();
    out.relative_spread =
        stats.mean() != 0.0 ? stats.stddev() / std::abs(stats.mean()) : 0.0;
    out.seed = seed;
    return out;
}

double thermal_sigma_single(double T_K, double mass_kg, double trap_omega_rad_s) {
    if (T_K < 0.0 || !(mass_kg > 0.0) || !(trap_omega_rad_s > 0.0))
        throw ConfigError("thermal_sigma: need T >= 0, mass > 0, omega > 0");
    return std::sqrt(kConst.boltzmann * T_K / (mass_kg * trap_omega_rad_s * trap_omega_rad_s));
}

double thermal_sigma_from_temperature(double T_K, double mass_kg, double trap_omega_rad_s) {
    return std::sqrt(2.0) * thermal_sigma_single(T_K, mass_kg, trap_omega_rad_s);
}

}  // namespace molgate
