#ifndef MOLGATE_IO_HPP
#define MOLGATE_IO_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "molgate/analysis.hpp"
#include "molgate/config.hpp"

namespace molgate {

// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

struct EstimateRow {
    double rate_rad_s = 0.0;
    double tau_pi_s = 0.0;
    long long ops_budget = 0;
};

// Closed-form numbers for the configured scheme: interaction rate, the
// pi-phase time at the configured rho_e, and the operations budget
// against the shorter of the two coherence times.
EstimateRow run_estimate(const ScenarioConfig& cfg);

GateResult run_gate(const ScenarioConfig& cfg);
ScanResult run_blockade_scan(const ScenarioConfig& cfg);
MonteCarloResult run_thermal(const ScenarioConfig& cfg);

// CSV documents (fixed, versioned headers; one data row per entry).
std::string estimate_csv(const EstimateRow& row);
std::string gate_csv(const GateResult& g);
std::string scan_csv(const ScanResult& s);
std::string thermal_csv(const MonteCarloResult& m);

// JSON result documents.
nlohmann::json estimate_json(const EstimateRow& row);
nlohmann::json gate_json(const GateResult& g);
nlohmann::json scan_json(const ScanResult& s);
nlohmann::json thermal_json(const MonteCarloResult& m);

}  // namespace molgate

#endif
