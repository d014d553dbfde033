#include "molgate/rates.hpp"

#include <cmath>

#include "molgate/constants.hpp"
#include "molgate/errors.hpp"

namespace molgate {

double dipole_dipole_rate(double dA_debye, double dB_debye, const Geometry& g) {
    g.validate();
    const double dA = debye_to_si(dA_debye);
    const double dB = debye_to_si(dB_debye);
    const double pref = dA * dB / (kConst.four_pi_eps0 * kConst.hbar);
    switch (g.architecture) {
        case Architecture::Lattice: {
            const double c = std::cos(g.theta_rad);
            const double angular = 3.0 * c * c - 1.0;
            if (std::abs(angular) < 1e-9)
                throw ZeroRate("dipole-dipole coupling vanishes at the magic angle");
            return pref * angular / (g.r_m * g.r_m * g.r_m);
        }
        case Architecture::Wire:
            return pref / (g.h_m * g.h_m * g.r_m);
    }
    throw PhysicsError("unreachable architecture");
}

double pi_phase_time(double rate_rad_s, double rho_e) {
    if (rate_rad_s == 0.0) throw ZeroRate("interaction rate is zero (magic angle or zero dipole)");
    if (!(rho_e > 0.0 && rho_e <= 1.0)) throw PhysicsError("rho_e must lie in (0, 1]");
    return M_PI / (std::abs(rate_rad_s) * rho_e * rho_e);
}

long long operations_budget(double coherence_time_s, double gate_time_s) {
    if (!(coherence_time_s > 0.0) || !(gate_time_s > 0.0))
        throw PhysicsError("operations_budget needs positive times");
    return static_cast<long long>(std::floor(coherence_time_s / gate_time_s));
}

double stark_mixed_dipole(double mu_debye, double B_J, double E_V_per_m) {
    if (!(mu_debye > 0.0)) throw PhysicsError("stark_mixed_dipole: mu must be positive");
    if (!(B_J > 0.0)) throw PhysicsError("stark_mixed_dipole: B must be positive");
    if (E_V_per_m < 0.0) throw PhysicsError("stark_mixed_dipole: E must be >= 0");
    const double mu = debye_to_si(mu_debye);
    // -dE_ground/dE for H = [[0, -muE/sqrt3], [-muE/sqrt3, 2B]]
    const double m2E = mu * mu * E_V_per_m / 3.0;
    const double d_si = m2E / std::sqrt(B_J * B_J + m2E * E_V_per_m);
    return d_si / kConst.debye;
}

}  // namespace molgate
