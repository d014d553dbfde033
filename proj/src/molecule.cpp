#include "molgate/molecule.hpp"

#include <cmath>
#include <set>

#include "molgate/errors.hpp"

namespace molgate {

namespace {

std::pair<std::string, std::string> ordered(const std::string& a, const std::string& b) {
    return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

const LevelSpec* MoleculeSpec::find_level(const std::string& label) const {
    for (const auto& lv : levels) {
        if (lv.label == label) return &lv;
    }
    return nullptr;
}

int MoleculeSpec::level_index(const std::string& label) const {
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i].label == label) return static_cast<int>(i);
    }
    throw UnknownLabel("molecule '" + name + "' has no level '" + label + "'");
}

double MoleculeSpec::transition_dipole(const std::string& a, const std::string& b) const {
    auto it = transition_dipoles_debye.find(ordered(a, b));
    return it == transition_dipoles_debye.end() ? 0.0 : it->second;
}

bool MoleculeSpec::has_transition_dipole(const std::string& a, const std::string& b) const {
    return transition_dipole(a, b) != 0.0;
}

bool MoleculeSpec::has_multiphoton_coupling(const std::string& a, const std::string& b) const {
    return multiphoton_couplings.count(ordered(a, b)) > 0;
}

void MoleculeSpec::validate() const {
    if (levels.empty()) throw ConfigError("molecule '" + name + "': no levels");
    std::set<std::string> seen;
    for (const auto& lv : levels) {
        if (!seen.insert(lv.label).second)
            throw ConfigError("molecule '" + name + "': duplicate level '" + lv.label + "'");
        if (!(lv.lifetime_s > 0.0))
            throw ConfigError("molecule '" + name + "': level '" + lv.label +
                              "' lifetime must be positive");
        if (!std::isfinite(lv.dipole_expectation_debye))
            throw ConfigError("molecule '" + name + "': level '" + lv.label +
                              "' dipole must be finite");
    }
    for (const auto& [key, d] : transition_dipoles_debye) {
        if (!seen.count(key.first) || !seen.count(key.second))
            throw ConfigError("molecule '" + name + "': transition dipole references unknown level");
        if (!std::isfinite(d))
            throw ConfigError("molecule '" + name + "': transition dipole must be finite");
    }
    if (!(mass_kg > 0.0)) throw ConfigError("molecule '" + name + "': mass must be positive");
    if (!(coherence_time_s > 0.0))
        throw ConfigError("molecule '" + name + "': coherence time must be positive");
    if (!std::isfinite(permanent_dipole_debye) || permanent_dipole_debye < 0.0)
        throw ConfigError("molecule '" + name + "': permanent dipole must be finite and >= 0");
    if (rotational_constant_B_J && !(*rotational_constant_B_J > 0.0))
        throw ConfigError("molecule '" + name + "': rotational constant must be positive");
}

void Geometry::validate() const {
    if (!(r_m > 0.0)) throw ConfigError("geometry: r must be positive");
    if (theta_rad < 0.0 || theta_rad > M_PI) throw ConfigError("geometry: theta outside [0, pi]");
    if (architecture == Architecture::Wire && !(h_m > 0.0))
        throw ConfigError("geometry: wire architecture needs h > 0");
}

namespace {

constexpr double kAmu = 1.66053906660e-27;
constexpr double kInvCmJ = 1.986445857e-23;  // 1 cm^-1 in J

MoleculeSpec make_co() {
    MoleculeSpec m;
    m.name = "CO";
    // 13CO: qubit in two hyperfine sublevels of X(v=0, N=0); |e> in the
    // long-lived a3Pi state carrying ~1.5 D.
    m.levels = {
        {"0", 0.0, std::numeric_limits<double>::infinity(), 0},
        {"1", 0.0, std::numeric_limits<double>::infinity(), 0},
        {"e", 1.5, 1.0, std::nullopt},
    };
    m.permanent_dipole_debye = 0.1;
    m.rotational_constant_B_J = 1.846 * kInvCmJ;
    m.mass_kg = 28.998 * kAmu;
    m.coherence_time_s = 1.0;
    return m;
}

MoleculeSpec make_nacl() {
    MoleculeSpec m;
    m.name = "NaCl";
    // Rotational scheme: |e> is built from adjacent rotational states
    // e1/e2 linked by a 10 D transition dipole; the qubit stays in N=0.
    m.levels = {
        {"0", 0.0, std::numeric_limits<double>::infinity(), 0},
        {"1", 0.0, std::numeric_limits<double>::infinity(), 0},
        {"e1", 0.0, std::numeric_limits<double>::infinity(), 1},
        {"e2", 0.0, std::numeric_limits<double>::infinity(), 2},
    };
    m.transition_dipoles_debye[{"e1", "e2"}] = 10.0;
    m.multiphoton_couplings.insert({"1", "e"});
    m.permanent_dipole_debye = 10.0;
    m.rotational_constant_B_J = 0.2181 * kInvCmJ;
    m.mass_kg = 57.959 * kAmu;
    m.coherence_time_s = 1.0;
    return m;
}

MoleculeSpec make_lics_like() {
    MoleculeSpec m;
    m.name = "LiCs-like";
    // Alkali-dimer-style inverted scheme: dipolar ground manifold (via DC
    // Stark mixing of the 7 D body-frame moment), near-zero-dipole |e>.
    m.levels = {
        {"0", 0.0, std::numeric_limits<double>::infinity(), 0},
        {"1", 0.0, std::numeric_limits<double>::infinity(), 0},
        {"e", 0.0, 1.0, std::nullopt},
    };
    m.permanent_dipole_debye = 7.0;
    m.rotational_constant_B_J = 0.19 * kInvCmJ;
    m.mass_kg = 139.96 * kAmu;
    m.coherence_time_s = 1.0;
    return m;
}

MoleculeSpec make_rbcs() {
    MoleculeSpec m;
    m.name = "RbCs";
    // Mass is the load-bearing number (thermal-motion estimates); the
    // excited-state dipole is left at zero and must be configured.
    m.levels = {
        {"0", 0.0, std::numeric_limits<double>::infinity(), 0},
        {"1", 0.0, std::numeric_limits<double>::infinity(), 0},
        {"e", 0.0, std::numeric_limits<double>::infinity(), std::nullopt},
    };
    m.permanent_dipole_debye = 0.0;
    m.rotational_constant_B_J = 0.0166 * kInvCmJ;
    m.mass_kg = 221.86 * kAmu;
    m.coherence_time_s = 1.0;
    return m;
}

}  // namespace

const MoleculeSpec& preset_molecule(const std::string& name) {
    static const MoleculeSpec co = make_co();
    static const MoleculeSpec nacl = make_nacl();
    static const MoleculeSpec lics = make_lics_like();
    static const MoleculeSpec rbcs = make_rbcs();
    if (name == "CO") return co;
    if (name == "NaCl") return nacl;
    if (name == "LiCs-like") return lics;
    if (name == "RbCs") return rbcs;
    throw ConfigError("unknown molecule preset '" + name + "'");
}

std::vector<std::string> preset_names() {
    return {"CO", "NaCl", "LiCs-like", "RbCs"};
}

}  // namespace molgate
