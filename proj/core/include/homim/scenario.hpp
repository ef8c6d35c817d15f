#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "homim/metrics.hpp"

namespace homim {

struct ScenarioOptions {
    std::string config_path;
    std::string out_dir = ".";
    std::string only_scenario;  // run every section when empty
    std::optional<std::uint64_t> seed_override;
    int jobs = 1;
};

/// All problems found in the file, each anchored to a line; empty means
/// runnable.  Does not execute anything.
std::vector<std::string> validate_config_file(const std::string& path);

/// Parses, validates and executes the selected scenario sections, writes
/// results.csv plus plot scripts into out_dir, and prints a summary.
/// Returns 0 on success, 2 on configuration errors, 3 on runtime failures.
int run_scenarios(const ScenarioOptions& opts, std::ostream& log);

/// Fixed CSV schema shared by every scenario.
std::string csv_header();
std::string csv_line(const SweepRecord& rec);

}  // namespace homim
