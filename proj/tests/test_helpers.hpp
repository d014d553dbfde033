#ifndef MOLGATE_TEST_HELPERS_HPP
#define MOLGATE_TEST_HELPERS_HPP

#include <cmath>

#include "molgate/molecule.hpp"
#include "molgate/protocols.hpp"

namespace molgate::test {

inline Geometry lattice(double r, double theta = 0.0) {
    Geometry g;
    g.architecture = Architecture::Lattice;
    g.r_m = r;
    g.theta_rad = theta;
    return g;
}

inline Geometry wire(double h, double r) {
    Geometry g;
    g.architecture = Architecture::Wire;
    g.r_m = r;
    g.h_m = h;
    return g;
}

inline System co_lattice_system() {
    System sys;
    sys.molecule_a = preset_molecule("CO");
    sys.molecule_b = preset_molecule("CO");
    sys.geometry = lattice(1e-6);
    return sys;
}

inline System nacl_wire_system() {
    System sys;
    sys.molecule_a = preset_molecule("NaCl");
    sys.molecule_b = preset_molecule("NaCl");
    sys.geometry = wire(0.1e-6, 10e-6);
    return sys;
}

inline System lics_lattice_system() {
    System sys;
    sys.molecule_a = preset_molecule("LiCs-like");
    sys.molecule_b = preset_molecule("LiCs-like");
    sys.geometry = lattice(1e-6);
    return sys;
}

inline SchemeParams direct_co_params(bool instantaneous = true) {
    SchemeParams p;
    p.scheme = Scheme::Direct;
    p.system = co_lattice_system();
    p.instantaneous_pulses = instantaneous;
    return p;
}

}  // namespace molgate::test

#endif
