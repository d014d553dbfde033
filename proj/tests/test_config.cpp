#include <doctest.h>

#include <nlohmann/json.hpp>

#include <fstream>

#include "molgate/config.hpp"
#include "molgate/errors.hpp"
#include "molgate/io.hpp"
#include "test_helpers.hpp"

using namespace molgate;
using nlohmann::json;

namespace {
const std::string kRoot = MOLGATE_SOURCE_DIR;

json load(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    json doc;
    in >> doc;
    return doc;
}
}  // namespace

TEST_CASE("preset data files match the built-in registry") {
    for (const auto& name : preset_names()) {
        const json doc = load(kRoot + "/data/presets/" + name + ".json");
        const MoleculeSpec from_file = molecule_from_json(doc);
        CHECK(molecule_to_json(from_file) == molecule_to_json(preset_molecule(name)));
    }
}

TEST_CASE("scenario configs parse") {
    for (const char* name : {"direct_co", "rotational_wire", "inverted_lics", "blockade_co",
                             "thermal_co"}) {
        CHECK_NOTHROW(
            ScenarioConfig::from_file(kRoot + "/data/scenarios/" + std::string(name) + ".json"));
    }
}

TEST_CASE("unknown keys are rejected, never ignored") {
    json doc = load(kRoot + "/data/scenarios/direct_co.json");
    doc["scheem"] = "typo";
    CHECK_THROWS_WITH_AS(ScenarioConfig::from_json(doc), doctest::Contains("scheem"),
                         ConfigError);

    json doc2 = load(kRoot + "/data/scenarios/direct_co.json");
    doc2["geometry"]["radius"] = 1e-6;
    CHECK_THROWS_AS(ScenarioConfig::from_json(doc2), ConfigError);

    json doc3 = load(kRoot + "/data/scenarios/direct_co.json");
    doc3["scheme"]["rho_target"] = 0.5;
    CHECK_THROWS_AS(ScenarioConfig::from_json(doc3), ConfigError);
}

TEST_CASE("estimate rows: NaCl/wire and CO/lattice") {
    const auto wire_cfg =
        ScenarioConfig::from_file(kRoot + "/data/scenarios/rotational_wire.json");
    const EstimateRow wire_row = run_estimate(wire_cfg);
    CHECK(wire_row.tau_pi_s == doctest::Approx(3.3130369622332554e-6).epsilon(1e-9));
    CHECK(wire_row.ops_budget == 301837);

    const auto co_cfg = ScenarioConfig::from_file(kRoot + "/data/scenarios/direct_co.json");
    const EstimateRow co_row = run_estimate(co_cfg);
    CHECK(co_row.tau_pi_s == doctest::Approx(7.362304360518347e-4).epsilon(1e-9));
    CHECK(co_row.ops_budget == 1358);
}

TEST_CASE("magic angle config raises a physics error") {
    json doc = load(kRoot + "/data/scenarios/direct_co.json");
    doc["geometry"]["theta"] = 0.9553166181245093;
    const auto cfg = ScenarioConfig::from_json(doc);
    CHECK_THROWS_AS(run_estimate(cfg), ZeroRate);
}

TEST_CASE("json result documents round-trip exactly") {
    const auto cfg = ScenarioConfig::from_file(kRoot + "/data/scenarios/direct_co.json");
    const GateResult g = run_gate(cfg);
    const json doc = gate_json(g);
    const json reparsed = json::parse(doc.dump());
    CHECK(reparsed == doc);
    for (int k = 0; k < 4; ++k) {
        CHECK(reparsed.at("phases").at(k).get<double>() == g.phases_rad[k]);
    }
    CHECK(reparsed.at("bell_fidelity").get<double>() == g.bell_fidelity);
    CHECK(reparsed.at("chi").get<double>() == g.entangling_phase_chi_rad);
}

TEST_CASE("csv headers are fixed") {
    CHECK(estimate_csv(EstimateRow{}).rfind("rate_rad_s,tau_pi_s,ops_budget\n", 0) == 0);
    CHECK(gate_csv(GateResult{})
              .rfind("phi00,phi01,phi10,phi11,chi,leakage_max,success_prob,bell_fidelity\n",
                     0) == 0);
    CHECK(scan_csv(ScanResult{}).rfind("ratio,infidelity,leakage\n", 0) == 0);
    CHECK(thermal_csv(MonteCarloResult{}).rfind("samples,phase_mean,phase_std,relative_spread,seed\n",
                                                0) == 0);
}

TEST_CASE("format_double is shortest round-trip") {
    for (double v : {0.1, 1.0 / 3.0, 3.141592653589793, 9.482516160858358e2, -0.0}) {
        CHECK(std::stod(format_double(v)) == v);
    }
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
}

TEST_CASE("molecule override shortcut: e_dipole on a preset") {
    json node{{"preset", "RbCs"}, {"e_dipole", 1.25}};
    const MoleculeSpec m = molecule_from_json(node);
    CHECK(m.find_level("e")->dipole_expectation_debye == 1.25);
    CHECK(m.mass_kg == preset_molecule("RbCs").mass_kg);
}

TEST_CASE("thermal config needs sigma or temperature pair") {
    ThermalConfig t;
    CHECK_THROWS_AS(t.resolve_sigma(1e-25), ConfigError);
    t.temperature_K = 1e-5;
    CHECK_THROWS_AS(t.resolve_sigma(1e-25), ConfigError);
    t.trap_omega_rad_s = 2.0 * M_PI * 1e4;
    CHECK(t.resolve_sigma(preset_molecule("RbCs").mass_kg) ==
          doctest::Approx(std::sqrt(2.0) * 3.081042719157114e-7).epsilon(1e-9));
    t.sep_sigma_m = 5e-9;
    CHECK(t.resolve_sigma(1.0) == 5e-9);
}
