#ifndef MOLGATE_MOLECULE_HPP
#define MOLGATE_MOLECULE_HPP

#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace molgate {

// One internal level of a molecule. Dipole moments in Debye, lifetime in
// seconds (infinity = stable).
struct LevelSpec {
    std::string label;
    double dipole_expectation_debye = 0.0;
    double lifetime_s = std::numeric_limits<double>::infinity();
    std::optional<int> rotational_N;
};

struct MoleculeSpec {
    std::string name;
    std::vector<LevelSpec> levels;
    // Symmetric under label swap; stored with the lexicographically
    // smaller label first.
    std::map<std::pair<std::string, std::string>, double> transition_dipoles_debye;
    // Label pairs declared as coupled by a two-or-more-photon transition
    // (needed by the rotational-superposition scheme checks).
    std::set<std::pair<std::string, std::string>> multiphoton_couplings;
    // Body-frame permanent dipole; feeds DC Stark mixing of N=0/N=1.
    double permanent_dipole_debye = 0.0;
    std::optional<double> rotational_constant_B_J;
    double mass_kg = 0.0;
    double coherence_time_s = 1.0;

    const LevelSpec* find_level(const std::string& label) const;
    int level_index(const std::string& label) const;  // throws UnknownLabel
    double transition_dipole(const std::string& a, const std::string& b) const;
    bool has_transition_dipole(const std::string& a, const std::string& b) const;
    bool has_multiphoton_coupling(const std::string& a, const std::string& b) const;

    // Throws ConfigError on duplicate labels, non-positive mass, etc.
    void validate() const;
};

enum class Architecture { Lattice, Wire };

// Two-molecule geometry. r is the in-plane separation; h (wire only) the
// molecule-to-wire distance; theta the angle between the aligned dipoles
// and the separation axis (lattice only).
struct Geometry {
    Architecture architecture = Architecture::Lattice;
    double r_m = 0.0;
    double theta_rad = 0.0;
    double h_m = 0.0;

    void validate() const;
};

struct System {
    MoleculeSpec molecule_a;
    MoleculeSpec molecule_b;
    Geometry geometry;
};

// Built-in molecule presets: "CO", "NaCl", "LiCs-like", "RbCs".
const MoleculeSpec& preset_molecule(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace molgate

#endif
