#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qrcost/cost.hpp"

namespace qrcost {

// One sweep: optimize over a search space at every axis value for a fixed
// (generation, medium, L_tot, eps_G) combination.
struct SweepConfig {
    std::string label;
    FixedParams fixed;
    SearchSpace space;
    SweepAxis axis = SweepAxis::CouplingEfficiency;
    std::vector<double> values;
    long monte_carlo_trials = 0;   // >0: validate each minimizer (G1 only)
};

struct RunConfig {
    std::string name;
    std::string output_prefix;
    std::uint64_t seed = 0;
    std::vector<SweepConfig> sweeps;

    static RunConfig from_json_text(const std::string& text);
    static RunConfig from_file(const std::string& path);
};

// Resolved-parameter dry-run listing; throws on the first invalid field.
std::string validate_config(const RunConfig& config);

struct ScenarioOutput {
    std::vector<std::string> csv_paths;
};

// Executes every sweep and writes one CSV per sweep
// (<output_dir>/<prefix>_<label>.csv); a summary table goes to `log`.
// Partial outputs are removed if any sweep fails.
ScenarioOutput run_scenario(const RunConfig& config,
                            const std::string& output_dir, std::ostream& log);

// Builtin, checked-in scenario configs ("fig3", "fig4", "fig5").
std::vector<std::string> builtin_scenario_names();
const std::string& builtin_scenario_text(const std::string& name);
bool is_builtin_scenario(const std::string& name);

// CSV cell formatting: 9 significant digits, '.' decimal separator,
// scientific notation below 1e-3.
std::string format_csv_value(double value);

}  // namespace qrcost
