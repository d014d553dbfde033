#include "molgate/config.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <set>

#include "molgate/analysis.hpp"
#include "molgate/errors.hpp"

namespace molgate {

using nlohmann::json;

namespace {

// Unknown keys are hard errors: a typo in a physics parameter must never
// silently fall back to a default.
void check_keys(const json& node, const std::set<std::string>& allowed, const char* where) {
    if (!node.is_object()) throw ConfigError(std::string(where) + ": expected an object");
    for (const auto& [key, value] : node.items()) {
        (void)value;
        if (!allowed.count(key))
            throw ConfigError(std::string(where) + ": unknown key '" + key + "'");
    }
}

double get_number(const json& node, const char* key, const char* where) {
    if (!node.at(key).is_number())
        throw ConfigError(std::string(where) + ": '" + key + "' must be a number");
    return node.at(key).get<double>();
}

}  // namespace

MoleculeSpec molecule_from_json(const json& node) {
    if (node.is_string()) return preset_molecule(node.get<std::string>());
    check_keys(node,
               {"name", "preset", "levels", "transition_dipoles", "multiphoton_couplings",
                "permanent_dipole", "rotational_constant_B", "mass", "coherence_time",
                "e_dipole"},
               "molecule");
    MoleculeSpec m;
    if (node.contains("preset")) m = preset_molecule(node.at("preset").get<std::string>());
    if (node.contains("name")) m.name = node.at("name").get<std::string>();
    if (node.contains("levels")) {
        m.levels.clear();
        for (const auto& lv : node.at("levels")) {
            check_keys(lv, {"label", "dipole", "lifetime", "rotational_N"}, "level");
            LevelSpec spec;
            spec.label = lv.at("label").get<std::string>();
            if (lv.contains("dipole")) spec.dipole_expectation_debye = lv.at("dipole").get<double>();
            if (lv.contains("lifetime") && !lv.at("lifetime").is_null())
                spec.lifetime_s = lv.at("lifetime").get<double>();
            if (lv.contains("rotational_N") && !lv.at("rotational_N").is_null())
                spec.rotational_N = lv.at("rotational_N").get<int>();
            m.levels.push_back(std::move(spec));
        }
    }
    if (node.contains("transition_dipoles")) {
        m.transition_dipoles_debye.clear();
        for (const auto& td : node.at("transition_dipoles")) {
            check_keys(td, {"levels", "dipole"}, "transition_dipole");
            const auto pair = td.at("levels").get<std::vector<std::string>>();
            if (pair.size() != 2)
                throw ConfigError("transition_dipole: 'levels' must list two labels");
            auto key = pair[0] <= pair[1] ? std::make_pair(pair[0], pair[1])
                                          : std::make_pair(pair[1], pair[0]);
            m.transition_dipoles_debye[key] = td.at("dipole").get<double>();
        }
    }
    if (node.contains("multiphoton_couplings")) {
        m.multiphoton_couplings.clear();
        for (const auto& mc : node.at("multiphoton_couplings")) {
            const auto pair = mc.get<std::vector<std::string>>();
            if (pair.size() != 2)
                throw ConfigError("multiphoton_coupling entries must list two labels");
            m.multiphoton_couplings.insert(pair[0] <= pair[1]
                                               ? std::make_pair(pair[0], pair[1])
                                               : std::make_pair(pair[1], pair[0]));
        }
    }
    if (node.contains("permanent_dipole"))
        m.permanent_dipole_debye = get_number(node, "permanent_dipole", "molecule");
    if (node.contains("rotational_constant_B"))
        m.rotational_constant_B_J = get_number(node, "rotational_constant_B", "molecule");
    if (node.contains("mass")) m.mass_kg = get_number(node, "mass", "molecule");
    if (node.contains("coherence_time"))
        m.coherence_time_s = get_number(node, "coherence_time", "molecule");
    if (node.contains("e_dipole")) {
        // shortcut for presets (RbCs ships without a configured |e> dipole)
        bool found = false;
        for (auto& lv : m.levels) {
            if (lv.label == "e") {
                lv.dipole_expectation_debye = get_number(node, "e_dipole", "molecule");
                found = true;
            }
        }
        if (!found) throw ConfigError("molecule: 'e_dipole' given but no level 'e'");
    }
    m.validate();
    return m;
}

json molecule_to_json(const MoleculeSpec& m) {
    json levels = json::array();
    for (const auto& lv : m.levels) {
        json l{{"label", lv.label}, {"dipole", lv.dipole_expectation_debye}};
        l["lifetime"] = std::isfinite(lv.lifetime_s) ? json(lv.lifetime_s) : json(nullptr);
        l["rotational_N"] = lv.rotational_N ? json(*lv.rotational_N) : json(nullptr);
        levels.push_back(std::move(l));
    }
    json tds = json::array();
    for (const auto& [key, d] : m.transition_dipoles_debye) {
        tds.push_back({{"levels", {key.first, key.second}}, {"dipole", d}});
    }
    json mcs = json::array();
    for (const auto& [a, b] : m.multiphoton_couplings) mcs.push_back({a, b});
    json out{{"name", m.name},
             {"levels", levels},
             {"transition_dipoles", tds},
             {"multiphoton_couplings", mcs},
             {"permanent_dipole", m.permanent_dipole_debye},
             {"mass", m.mass_kg},
             {"coherence_time", m.coherence_time_s}};
    if (m.rotational_constant_B_J) out["rotational_constant_B"] = *m.rotational_constant_B_J;
    return out;
}

Geometry geometry_from_json(const json& node) {
    check_keys(node, {"architecture", "r", "theta", "h"}, "geometry");
    Geometry g;
    const std::string arch = node.at("architecture").get<std::string>();
    if (arch == "lattice") {
        g.architecture = Architecture::Lattice;
    } else if (arch == "wire") {
        g.architecture = Architecture::Wire;
    } else {
        throw ConfigError("geometry: architecture must be 'lattice' or 'wire'");
    }
    g.r_m = get_number(node, "r", "geometry");
    if (node.contains("theta")) g.theta_rad = get_number(node, "theta", "geometry");
    if (node.contains("h")) g.h_m = get_number(node, "h", "geometry");
    g.validate();
    return g;
}

double ThermalConfig::resolve_sigma(double mass_kg) const {
    if (sep_sigma_m) return *sep_sigma_m;
    if (temperature_K && trap_omega_rad_s)
        return thermal_sigma_from_temperature(*temperature_K, mass_kg, *trap_omega_rad_s);
    throw ConfigError("thermal: give either sep_sigma or temperature + trap_frequency");
}

ScenarioConfig ScenarioConfig::from_json(const json& doc) {
    check_keys(doc,
               {"molecule_a", "molecule_b", "geometry", "scheme", "propagation", "scan",
                "thermal", "seed"},
               "config");
    ScenarioConfig cfg;
    if (!doc.contains("molecule_a")) throw ConfigError("config: 'molecule_a' is required");
    cfg.scheme_params.system.molecule_a = molecule_from_json(doc.at("molecule_a"));
    cfg.scheme_params.system.molecule_b = doc.contains("molecule_b")
                                              ? molecule_from_json(doc.at("molecule_b"))
                                              : cfg.scheme_params.system.molecule_a;
    if (!doc.contains("geometry")) throw ConfigError("config: 'geometry' is required");
    cfg.scheme_params.system.geometry = geometry_from_json(doc.at("geometry"));

    if (!doc.contains("scheme")) throw ConfigError("config: 'scheme' is required");
    const json& sch = doc.at("scheme");
    check_keys(sch,
               {"type", "pulse_rabi", "instantaneous_pulses", "rho_e_target",
                "pulse_area_scale", "dc_field"},
               "scheme");
    cfg.scheme_params.scheme = scheme_from_string(sch.at("type").get<std::string>());
    if (sch.contains("pulse_rabi"))
        cfg.scheme_params.pulse_rabi_rad_s = get_number(sch, "pulse_rabi", "scheme");
    if (sch.contains("instantaneous_pulses"))
        cfg.scheme_params.instantaneous_pulses = sch.at("instantaneous_pulses").get<bool>();
    if (sch.contains("rho_e_target"))
        cfg.scheme_params.rho_e_target = get_number(sch, "rho_e_target", "scheme");
    if (sch.contains("pulse_area_scale"))
        cfg.scheme_params.pulse_area_scale = get_number(sch, "pulse_area_scale", "scheme");
    if (sch.contains("dc_field"))
        cfg.scheme_params.dc_field_V_per_m = get_number(sch, "dc_field", "scheme");
    if (cfg.scheme_params.scheme == Scheme::Blockade && cfg.scheme_params.pulse_rabi_rad_s > 0.0)
        cfg.scheme_params.instantaneous_pulses = false;
    if (!(cfg.scheme_params.rho_e_target > 0.0 && cfg.scheme_params.rho_e_target <= 1.0))
        throw ConfigError("scheme: rho_e_target must lie in (0, 1]");

    if (doc.contains("propagation")) {
        const json& pr = doc.at("propagation");
        check_keys(pr,
                   {"include_decay", "trajectory_samples", "tolerance",
                    "eq1_product_convention"},
                   "propagation");
        if (pr.contains("include_decay"))
            cfg.propagation.include_decay = pr.at("include_decay").get<bool>();
        if (pr.contains("trajectory_samples"))
            cfg.propagation.trajectory_samples = pr.at("trajectory_samples").get<int>();
        if (pr.contains("tolerance"))
            cfg.propagation.tolerance = get_number(pr, "tolerance", "propagation");
        if (pr.contains("eq1_product_convention"))
            cfg.propagation.eq1_product_convention =
                pr.at("eq1_product_convention").get<bool>();
        if (!(cfg.propagation.tolerance > 0.0 && cfg.propagation.tolerance <= 1e-6))
            throw ConfigError("propagation: tolerance must lie in (0, 1e-6]");
        if (cfg.propagation.trajectory_samples < 0)
            throw ConfigError("propagation: trajectory_samples must be >= 0");
    }

    if (doc.contains("scan")) {
        const json& sc = doc.at("scan");
        check_keys(sc, {"ratios"}, "scan");
        cfg.scan_ratios = sc.at("ratios").get<std::vector<double>>();
    }

    if (doc.contains("thermal")) {
        const json& th = doc.at("thermal");
        check_keys(th, {"sep_sigma", "temperature", "trap_frequency", "samples"}, "thermal");
        if (th.contains("sep_sigma")) cfg.thermal.sep_sigma_m = get_number(th, "sep_sigma", "thermal");
        if (th.contains("temperature"))
            cfg.thermal.temperature_K = get_number(th, "temperature", "thermal");
        if (th.contains("trap_frequency"))
            cfg.thermal.trap_omega_rad_s = get_number(th, "trap_frequency", "thermal");
        if (th.contains("samples")) cfg.thermal.samples = th.at("samples").get<long long>();
    }

    if (doc.contains("seed")) cfg.seed = doc.at("seed").get<std::uint64_t>();
    return cfg;
}

ScenarioConfig ScenarioConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ConfigError("config parse error in '" + path + "': " + e.what());
    }
    return from_json(doc);
}

}  // namespace molgate
