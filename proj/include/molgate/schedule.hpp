#ifndef MOLGATE_SCHEDULE_HPP
#define MOLGATE_SCHEDULE_HPP

#include <map>
#include <string>
#include <vector>

namespace molgate {

enum class Target { MoleculeA, MoleculeB };

// Rectangular rotating-frame drive on one molecule's transition.
struct PulseSpec {
    Target molecule = Target::MoleculeA;
    std::string from_label;
    std::string to_label;
    double rabi_rad_s = 0.0;      // Omega
    double detuning_rad_s = 0.0;  // Delta
    double phase_rad = 0.0;
    double t_start_s = 0.0;
    double duration_s = 0.0;

    double t_end_s() const { return t_start_s + duration_s; }
};

struct DCFieldSpec {
    double field_V_per_m = 0.0;
    double t_start_s = 0.0;
    double duration_s = 0.0;

    double t_end_s() const { return t_start_s + duration_s; }
};

// Instantaneous rotation on one molecule: exp(-i (area/2)
// (e^{i phase}|to><from| + h.c.)). Used for the delta-pulse idealization.
struct RotationImpulse {
    Target molecule = Target::MoleculeA;
    std::string from_label;
    std::string to_label;
    double area_rad = 0.0;
    double phase_rad = 0.0;
    double t_s = 0.0;
};

// Instantaneous per-level phase multiplication e^{i phase} on one
// molecule (configured single-molecule phase step).
struct PhaseImpulse {
    Target molecule = Target::MoleculeA;
    std::map<std::string, double> level_phases_rad;
    double t_s = 0.0;
};

struct Schedule {
    std::vector<PulseSpec> pulses;
    std::vector<DCFieldSpec> dc_intervals;
    std::vector<RotationImpulse> rotations;
    std::vector<PhaseImpulse> phase_kicks;
    double total_time_s = 0.0;

    // Sorted unique segment boundaries: 0, total_time, every interval
    // edge and impulse time. Throws ConfigError when an interval leaves
    // [0, total_time].
    std::vector<double> boundaries() const;
    void validate() const;
};

struct PropagationOptions {
    bool include_decay = false;
    int trajectory_samples = 0;   // 0 = no trajectory
    double tolerance = 1e-9;      // must lie in (0, 1e-6]
    // eq1_phase accumulator convention: false = rho_e(A)^2, true =
    // rho_e(A) * rho_e(B).
    bool eq1_product_convention = false;
};

}  // namespace molgate

#endif
