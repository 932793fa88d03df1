#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "qrcost/scenario.hpp"

namespace {

qrcost::RunConfig load_config(const std::string& spec) {
    if (qrcost::is_builtin_scenario(spec))
        return qrcost::RunConfig::from_json_text(
            qrcost::builtin_scenario_text(spec));
    return qrcost::RunConfig::from_file(spec);
}

std::string output_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("QRCOST_OUTPUT_DIR")) return env;
    return ".";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Cost-coefficient analysis of quantum repeater architectures over "
        "fiber and vacuum-beam-guide channels"};
    app.require_subcommand(1);

    std::string config_spec;
    std::string out_dir_flag;

    auto* run = app.add_subcommand(
        "run", "Execute a scenario (builtin name or config file path)");
    run->add_option("config", config_spec, "Builtin scenario name or JSON path")
        ->required();
    run->add_option("-o,--output-dir", out_dir_flag,
                    "Output directory (default: $QRCOST_OUTPUT_DIR or .)");

    auto* validate = app.add_subcommand(
        "validate", "Parse a config and list resolved parameters (dry run)");
    validate
        ->add_option("config", config_spec, "Builtin scenario name or JSON path")
        ->required();

    app.add_subcommand("list-scenarios", "List builtin scenario names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("list-scenarios")) {
            for (const auto& name : qrcost::builtin_scenario_names())
                std::cout << name << "\n";
            return 0;
        }
        if (app.got_subcommand("validate")) {
            const auto config = load_config(config_spec);
            std::cout << qrcost::validate_config(config);
            return 0;
        }
        const auto config = load_config(config_spec);
        const auto output = qrcost::run_scenario(
            config, output_dir(out_dir_flag), std::cout);
        for (const auto& path : output.csv_paths)
            std::cout << "wrote " << path << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
