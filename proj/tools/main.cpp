#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "homim/scenario.hpp"

int main(int argc, char** argv) {
    CLI::App app{"homim: spectral/energy-efficiency and BER simulator for "
                 "optical OFDM with index modulation"};

    homim::ScenarioOptions opts;
    std::uint64_t seed_value = 0;
    bool validate_only = false;

    app.add_option("--config", opts.config_path, "scenario config file")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--scenario", opts.only_scenario,
                   "run only sections of this scenario "
                   "(se-sweep | se-ee | ber-curve | selftest)");
    auto* seed_opt =
        app.add_option("--seed", seed_value, "override every section's seed");
    app.add_option("--out", opts.out_dir, "output directory (default .)");
    app.add_option("--jobs", opts.jobs, "worker threads for independent points")
        ->check(CLI::PositiveNumber);
    app.add_flag("--validate", validate_only,
                 "validate the config and list diagnostics without running");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad flags are configuration errors
    }

    if (seed_opt->count() > 0) opts.seed_override = seed_value;

    if (validate_only) {
        const std::vector<std::string> diags =
            homim::validate_config_file(opts.config_path);
        for (const std::string& d : diags) std::cout << "config error: " << d << "\n";
        if (diags.empty()) std::cout << "config ok\n";
        return diags.empty() ? 0 : 2;
    }

    try {
        return homim::run_scenarios(opts, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return 3;
    }
}
