// molgate: pulse-level phase gates between polar molecules.
//
// Subcommands: estimate, gate, blockade-scan, thermal, presets.
// Exit codes: 0 ok, 1 config error, 2 physics error, 3 degenerate gate.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "molgate/config.hpp"
#include "molgate/errors.hpp"
#include "molgate/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct GlobalOpts {
    std::string config_path;
    std::string out_dir;
    std::string format = "csv";
    std::uint64_t seed = 0;
    bool seed_given = false;
};

void write_outputs(const GlobalOpts& g, const std::string& stem, const json& doc,
                   const std::string& csv) {
    if (!g.out_dir.empty()) {
        fs::create_directories(g.out_dir);
        std::ofstream(fs::path(g.out_dir) / (stem + ".json")) << doc.dump(2) << '\n';
        std::ofstream(fs::path(g.out_dir) / (stem + ".csv")) << csv;
    }
    if (g.format == "json") {
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << csv;
    }
}

molgate::ScenarioConfig load_config(const GlobalOpts& g) {
    if (g.config_path.empty()) throw molgate::ConfigError("--config is required");
    auto cfg = molgate::ScenarioConfig::from_file(g.config_path);
    if (g.seed_given) cfg.seed = g.seed;
    return cfg;
}

int dispatch(const std::string& cmd, const GlobalOpts& g) {
    using namespace molgate;
    if (cmd == "presets") {
        json doc = json::array();
        for (const auto& name : preset_names()) doc.push_back(molecule_to_json(preset_molecule(name)));
        std::cout << doc.dump(2) << '\n';
        return 0;
    }
    const ScenarioConfig cfg = load_config(g);
    if (cmd == "estimate") {
        const EstimateRow row = run_estimate(cfg);
        write_outputs(g, "estimate", estimate_json(row), estimate_csv(row));
    } else if (cmd == "gate") {
        const GateResult res = run_gate(cfg);
        write_outputs(g, "gate", gate_json(res), gate_csv(res));
        std::cout << "chi = " << format_double(res.entangling_phase_chi_rad) << " rad; "
                  << (cz_equivalent(res, 0.05) ? "locally CZ-equivalent"
                                               : "NOT locally CZ-equivalent")
                  << " (tol 0.05 rad)\n";
        for (const auto& w : res.warnings) std::cout << w << '\n';
    } else if (cmd == "blockade-scan") {
        const ScanResult res = run_blockade_scan(cfg);
        write_outputs(g, "blockade-scan", scan_json(res), scan_csv(res));
    } else if (cmd == "thermal") {
        const MonteCarloResult res = run_thermal(cfg);
        write_outputs(g, "thermal", thermal_json(res), thermal_csv(res));
    } else {
        throw ConfigError("unknown command '" + cmd + "'");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Phase gates between ultracold polar molecules"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand name
    GlobalOpts g;
    app.add_option("--config", g.config_path, "Scenario config (JSON)");
    app.add_option("--out", g.out_dir, "Directory for result files");
    app.add_option("--format", g.format, "Stdout format")
        ->check(CLI::IsMember({"csv", "json"}));
    auto* seed_opt = app.add_option("--seed", g.seed, "Override the config seed");

    for (const char* name : {"estimate", "gate", "blockade-scan", "thermal", "presets"}) {
        app.add_subcommand(name);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }
    g.seed_given = seed_opt->count() > 0;

    try {
        return dispatch(app.get_subcommands().front()->get_name(), g);
    } catch (const molgate::DegenerateGate& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const molgate::PhysicsError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const molgate::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
