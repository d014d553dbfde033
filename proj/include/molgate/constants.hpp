#ifndef MOLGATE_CONSTANTS_HPP
#define MOLGATE_CONSTANTS_HPP

// Physical constants (CODATA 2018). All internal quantities are SI;
// dipole moments cross the API boundary in Debye and are converted here.

namespace molgate {

struct PhysicalConstants {
    double hbar;          // J s
    double four_pi_eps0;  // C^2 N^-1 m^-2
    double debye;         // C m per Debye
    double boltzmann;     // J / K
    double amu;           // kg
};

inline constexpr PhysicalConstants kConst{
    1.054571817e-34,   // hbar
    1.11265005545e-10, // 4*pi*eps0
    3.33564e-30,       // 1 D
    1.380649e-23,      // k_B
    1.66053906660e-27, // atomic mass unit
};

inline constexpr double debye_to_si(double d_debye) {
    return d_debye * kConst.debye;
}

// theta at which 3 cos^2(theta) - 1 vanishes
inline constexpr double kMagicAngle = 0.9553166181245093;

}  // namespace molgate

#endif
