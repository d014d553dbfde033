#ifndef MOLGATE_DYNAMICS_HPP
#define MOLGATE_DYNAMICS_HPP

#include <memory>
#include <vector>

#include "molgate/molecule.hpp"
#include "molgate/schedule.hpp"
#include "molgate/state.hpp"

namespace molgate {

// One sampled point of a propagation trajectory.
struct TrajectorySample {
    double t_s = 0.0;
    RegisterState state;
};

struct PropagationResult {
    RegisterState final_state;
    std::vector<TrajectorySample> trajectory;  // empty unless requested
};

// Rotating-frame Hamiltonian (units rad/s, i.e. H/hbar) for the segment
// containing time t: active pulse terms on each molecule, the diagonal
// dipole-dipole interaction over all level pairs with nonzero effective
// dipoles (intrinsic, or DC-induced while a DC interval is active), and,
// when requested, the -i/2 gamma decay diagonal.
HermitianOperator segment_hamiltonian(const Schedule& schedule, double t, const System& sys,
                                      std::shared_ptr<const LevelBasis> basis,
                                      bool include_decay);

// Piecewise-constant propagation: exact segment exponentials (spectral
// decomposition in the Hermitian case, Pade scaling-and-squaring when a
// decay diagonal is present), with impulses applied at their scheduled
// instants. Trajectory sampled at trajectory_samples+1 uniform times.
PropagationResult propagate(const RegisterState& initial, const Schedule& schedule,
                            const System& sys, const PropagationOptions& opts);

// Interaction-phase accumulator: phi = rate * integral of the excited
// population weight over the sample grid (trapezoid rule). `weights` is
// rho_e^2(t) (or rho_eA*rho_eB under the product convention); `times`
// must be strictly increasing.
double eq1_phase(const std::vector<double>& times, const std::vector<double>& weights,
                 double rate_rad_s);

// Convenience: extract rho_e weights from a trajectory for the given
// excited-level label and accumulate against `rate`.
double eq1_phase_from_trajectory(const std::vector<TrajectorySample>& trajectory,
                                 const std::string& excited_label, double rate_rad_s,
                                 bool product_convention);

}  // namespace molgate

#endif
