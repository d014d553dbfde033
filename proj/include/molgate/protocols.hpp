#ifndef MOLGATE_PROTOCOLS_HPP
#define MOLGATE_PROTOCOLS_HPP

#include <string>
#include <vector>

#include "molgate/molecule.hpp"
#include "molgate/schedule.hpp"

namespace molgate {

enum class Scheme { Direct, Inverted, Rotational, Blockade };

Scheme scheme_from_string(const std::string& s);
std::string to_string(Scheme s);

struct SchemeParams {
    Scheme scheme = Scheme::Direct;
    System system;
    double pulse_rabi_rad_s = 0.0;      // finite-pulse Rabi frequency
    bool instantaneous_pulses = true;
    double rho_e_target = 1.0;
    double pulse_area_scale = 1.0;      // 1.0 = perfect pi pulses
    double dc_field_V_per_m = 0.0;      // inverted scheme only
};

// A built pulse program plus the (possibly rewritten) system it is meant
// to run against and any regime warnings picked up during construction.
struct BuiltScheme {
    Schedule schedule;
    System system;
    std::string excited_label = "e";
    double interaction_rate_rad_s = 0.0;  // V of the phase-accumulating pair
    double hold_time_s = 0.0;             // free-interaction time tau
    std::vector<std::string> warnings;
};

// Direct scheme: pi excitation 1<->e on both molecules, free interaction
// for tau = pi / (V rho_e^2), pi de-excitation. Ideal net gate
// diag(1,1,1,-1).
BuiltScheme build_direct(const SchemeParams& p);

// Inverted scheme (dipolar ground manifold under a DC field): excite
// both 1->e, hold until the ground-ground pair accumulates pi, de-excite,
// then the configured single-molecule DC phase step. Ideal net gate
// diag(1,-1,-1,-1).
BuiltScheme build_inverted(const SchemeParams& p);

// Rotational-superposition scheme: the direct schedule run against an
// effective |e> level whose dipole is the declared e1<->e2 transition
// dipole. Rejects MoleculeSpecs violating the scheme's selection-rule
// restrictions.
BuiltScheme build_rotational(const SchemeParams& p);

// Dipole-blockade scheme: pi pulse on A, 2pi pulse on B, pi pulse on A,
// all resonant with the unshifted 1<->e transition. Ideal (V >> Omega)
// net gate diag(1,-1,-1,-1).
BuiltScheme build_blockade(const SchemeParams& p);

BuiltScheme build_scheme(const SchemeParams& p);

}  // namespace molgate

#endif
