#include "molgate/io.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <sstream>

#include "molgate/errors.hpp"
#include "molgate/rates.hpp"

namespace molgate {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

EstimateRow run_estimate(const ScenarioConfig& cfg) {
    const SchemeParams& p = cfg.scheme_params;
    EstimateRow row;
    if (p.scheme == Scheme::Blockade) {
        // No schedule needed for the closed-form numbers.
        const double de_a = p.system.molecule_a.find_level("e")->dipole_expectation_debye;
        const double de_b = p.system.molecule_b.find_level("e")->dipole_expectation_debye;
        row.rate_rad_s = dipole_dipole_rate(de_a, de_b, p.system.geometry);
    } else {
        SchemeParams ideal = p;
        ideal.instantaneous_pulses = true;
        row.rate_rad_s = build_scheme(ideal).interaction_rate_rad_s;
    }
    row.tau_pi_s = pi_phase_time(row.rate_rad_s, p.rho_e_target);
    const double coherence = std::min(p.system.molecule_a.coherence_time_s,
                                      p.system.molecule_b.coherence_time_s);
    row.ops_budget = operations_budget(coherence, row.tau_pi_s);
    return row;
}

GateResult run_gate(const ScenarioConfig& cfg) {
    return extract_gate(build_scheme(cfg.scheme_params), cfg.propagation);
}

ScanResult run_blockade_scan(const ScenarioConfig& cfg) {
    if (cfg.scan_ratios.empty())
        throw ConfigError("blockade-scan: config needs scan.ratios");
    SchemeParams base = cfg.scheme_params;
    base.scheme = Scheme::Blockade;
    base.instantaneous_pulses = false;
    return blockade_scan(base, cfg.scan_ratios, cfg.propagation);
}

MonteCarloResult run_thermal(const ScenarioConfig& cfg) {
    const BuiltScheme built = build_scheme(cfg.scheme_params);
    const double sigma =
        cfg.thermal.resolve_sigma(cfg.scheme_params.system.molecule_a.mass_kg);
    return thermal_phase_spread(built.system, built.schedule, sigma, cfg.thermal.samples,
                                cfg.seed);
}

std::string estimate_csv(const EstimateRow& row) {
    std::ostringstream os;
    os << "rate_rad_s,tau_pi_s,ops_budget\n"
       << format_double(row.rate_rad_s) << ',' << format_double(row.tau_pi_s) << ','
       << row.ops_budget << '\n';
    return os.str();
}

std::string gate_csv(const GateResult& g) {
    std::ostringstream os;
    os << "phi00,phi01,phi10,phi11,chi,leakage_max,success_prob,bell_fidelity\n";
    for (int k = 0; k < 4; ++k) os << format_double(g.phases_rad[k]) << ',';
    os << format_double(g.entangling_phase_chi_rad) << ',' << format_double(g.leakage_max)
       << ',' << format_double(g.success_probability) << ','
       << format_double(g.bell_fidelity) << '\n';
    return os.str();
}

std::string scan_csv(const ScanResult& s) {
    std::ostringstream os;
    os << "ratio,infidelity,leakage\n";
    for (const auto& row : s.rows) {
        os << format_double(row.ratio) << ',' << format_double(row.infidelity) << ','
           << format_double(row.leakage) << '\n';
    }
    return os.str();
}

std::string thermal_csv(const MonteCarloResult& m) {
    std::ostringstream os;
    os << "samples,phase_mean,phase_std,relative_spread,seed\n"
       << m.samples << ',' << format_double(m.phase_mean_rad) << ','
       << format_double(m.phase_std_rad) << ',' << format_double(m.relative_spread) << ','
       << m.seed << '\n';
    return os.str();
}

json estimate_json(const EstimateRow& row) {
    return json{{"command", "estimate"},
                {"rate_rad_s", row.rate_rad_s},
                {"tau_pi_s", row.tau_pi_s},
                {"ops_budget", row.ops_budget}};
}

json gate_json(const GateResult& g) {
    return json{{"command", "gate"},
                {"phases", {g.phases_rad[0], g.phases_rad[1], g.phases_rad[2], g.phases_rad[3]}},
                {"chi", g.entangling_phase_chi_rad},
                {"leakage", {g.leakage[0], g.leakage[1], g.leakage[2], g.leakage[3]}},
                {"leakage_max", g.leakage_max},
                {"success_probability", g.success_probability},
                {"bell_fidelity", g.bell_fidelity},
                {"cz_equivalent", cz_equivalent(g, 0.05)},
                {"warnings", g.warnings}};
}

json scan_json(const ScanResult& s) {
    json rows = json::array();
    for (const auto& row : s.rows) {
        rows.push_back({{"ratio", row.ratio},
                        {"infidelity", row.infidelity},
                        {"leakage", row.leakage}});
    }
    return json{{"command", "blockade-scan"}, {"rows", rows}};
}

json thermal_json(const MonteCarloResult& m) {
    return json{{"command", "thermal"},
                {"samples", m.samples},
                {"phase_mean", m.phase_mean_rad},
                {"phase_std", m.phase_std_rad},
                {"relative_spread", m.relative_spread},
                {"seed", m.seed}};
}

}  // namespace molgate
