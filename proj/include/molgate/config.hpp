#ifndef MOLGATE_CONFIG_HPP
#define MOLGATE_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "molgate/protocols.hpp"
#include "molgate/schedule.hpp"

#include <nlohmann/json_fwd.hpp>

namespace molgate {

// Thermal Monte Carlo inputs: either an explicit separation spread or a
// (temperature, trap frequency) pair it is derived from.
struct ThermalConfig {
    std::optional<double> sep_sigma_m;
    std::optional<double> temperature_K;
    std::optional<double> trap_omega_rad_s;
    long long samples = 100000;

    double resolve_sigma(double mass_kg) const;  // throws ConfigError when underspecified
};

struct ScenarioConfig {
    SchemeParams scheme_params;
    PropagationOptions propagation;
    std::vector<double> scan_ratios;
    ThermalConfig thermal;
    std::uint64_t seed = 1;

    static ScenarioConfig from_json(const nlohmann::json& doc);
    static ScenarioConfig from_file(const std::string& path);
};

// Parse one molecule entry: a preset name, or an object (optionally based
// on a preset) with the same schema the preset data files use. Rejects
// unknown keys.
MoleculeSpec molecule_from_json(const nlohmann::json& node);
nlohmann::json molecule_to_json(const MoleculeSpec& m);

Geometry geometry_from_json(const nlohmann::json& node);

}  // namespace molgate

#endif
