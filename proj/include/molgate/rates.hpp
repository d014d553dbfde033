#ifndef MOLGATE_RATES_HPP
#define MOLGATE_RATES_HPP

#include "molgate/molecule.hpp"

namespace molgate {

// Dipole-dipole interaction rate V/hbar in rad/s (signed).
//
// Lattice:  dA dB (3 cos^2 theta - 1) / (4 pi eps0 hbar r^3)
// Wire:     dA dB / (4 pi eps0 hbar h^2 r), no angular factor
//           (dipoles assumed aligned by the trap).
double dipole_dipole_rate(double dA_debye, double dB_debye, const Geometry& g);

// Time for a pi phase at the given rate and excited-state fraction:
// tau = pi / (|rate| * rho_e^2). Throws ZeroRate when rate == 0.
double pi_phase_time(double rate_rad_s, double rho_e);

// floor(coherence_time / gate_time)
long long operations_budget(double coherence_time_s, double gate_time_s);

// Effective dipole (Debye) of the dressed rotational ground state under a
// DC field E, from the two-level N=0/N=1 Stark Hamiltonian
//   H = [[0, -mu E / sqrt(3)], [-mu E / sqrt(3), 2B]]
// as -dE_ground/dE. Monotone in E, bounded by mu/sqrt(3).
double stark_mixed_dipole(double mu_debye, double B_J, double E_V_per_m);

}  // namespace molgate

#endif
