#include "qrcost/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qrcost/monte_carlo.hpp"

namespace qrcost {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::string& context,
                  std::initializer_list<const char*> allowed) {
    if (!j.is_object())
        throw std::invalid_argument(context + ": expected an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) { ok = true; break; }
        if (!ok)
            throw std::invalid_argument(context + ": unknown key '" + key + "'");
    }
}

double get_number(const json& j, const std::string& context,
                  const char* key, double fallback, bool required = false) {
    if (!j.contains(key)) {
        if (required)
            throw std::invalid_argument(context + ": missing required key '" +
                                        std::string(key) + "'");
        return fallback;
    }
    if (!j.at(key).is_number())
        throw std::invalid_argument(context + ": '" + key + "' must be a number");
    return j.at(key).get<double>();
}

ChannelModel parse_channel(const json& sweep, const std::string& context) {
    const std::string medium =
        sweep.contains("medium") ? sweep.at("medium").get<std::string>() : "custom";
    ChannelModel channel;
    if (medium == "fiber") channel = ChannelModel::fiber();
    else if (medium == "vbg") channel = ChannelModel::vacuum_beam_guide();
    else channel.medium = Medium::Custom;

    if (sweep.contains("channel")) {
        const json& c = sweep.at("channel");
        require_keys(c, context + ".channel",
                     {"attenuation_length_km", "coupling_efficiency",
                      "signal_speed_km_per_s"});
        channel.attenuation_length_km = get_number(
            c, context + ".channel", "attenuation_length_km",
            channel.attenuation_length_km);
        channel.coupling_efficiency =
            get_number(c, context + ".channel", "coupling_efficiency",
                       channel.coupling_efficiency);
        channel.signal_speed_km_per_s =
            get_number(c, context + ".channel", "signal_speed_km_per_s",
                       channel.signal_speed_km_per_s);
    }
    channel.validate();
    return channel;
}

CodeParams parse_code(const json& sweep, const std::string& context) {
    CodeParams code;
    if (!sweep.contains("code")) return code;
    const json& c = sweep.at("code");
    require_keys(c, context + ".code",
                 {"block_size", "loss_threshold", "fault_threshold",
                  "suppression_exponent"});
    code.block_size = static_cast<int>(
        get_number(c, context + ".code", "block_size", code.block_size));
    code.loss_threshold =
        get_number(c, context + ".code", "loss_threshold", code.loss_threshold);
    code.fault_threshold = get_number(c, context + ".code", "fault_threshold",
                                      code.fault_threshold);
    code.suppression_exponent =
        get_number(c, context + ".code", "suppression_exponent",
                   code.suppression_exponent);
    code.validate();
    return code;
}

template <typename T>
std::vector<T> parse_array(const json& j, const std::string& context,
                           const char* key, std::vector<T> fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_array())
        throw std::invalid_argument(context + ": '" + key + "' must be an array");
    std::vector<T> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number())
            throw std::invalid_argument(context + ": '" + key +
                                        "' entries must be numbers");
        out.push_back(v.get<T>());
    }
    if (out.empty())
        throw std::invalid_argument(context + ": '" + key + "' must be nonempty");
    return out;
}

SearchSpace parse_search(const json& sweep, const std::string& context,
                         const FixedParams& fixed) {
    SearchSpace space = SearchSpace::defaults(
        fixed.generation, fixed.channel, fixed.total_distance_km);
    if (!sweep.contains("search")) return space;
    const json& s = sweep.at("search");
    require_keys(s, context + ".search",
                 {"nesting_levels", "purification_rounds", "spacing_km",
                  "spacing_points", "memory_qubits", "attempts", "protocol"});
    space.nesting_levels = parse_array<int>(s, context + ".search",
                                            "nesting_levels",
                                            space.nesting_levels);
    space.purification_rounds =
        parse_array<int>(s, context + ".search", "purification_rounds",
                         space.purification_rounds);
    space.memory_qubits = parse_array<int>(s, context + ".search",
                                           "memory_qubits", space.memory_qubits);
    space.attempts =
        parse_array<int>(s, context + ".search", "attempts", space.attempts);
    if (s.contains("spacing_points"))
        space.spacing_grid_km = default_spacing_grid(
            fixed.channel, fixed.total_distance_km,
            static_cast<int>(
                get_number(s, context + ".search", "spacing_points", 20)));
    space.spacing_grid_km = parse_array<double>(
        s, context + ".search", "spacing_km", space.spacing_grid_km);
    if (s.contains("protocol")) {
        const std::string p = s.at("protocol").get<std::string>();
        if (p == "bbpssw") space.protocol = PurificationProtocol::BBPSSW;
        else if (p == "dejmps") space.protocol = PurificationProtocol::DEJMPS;
        else
            throw std::invalid_argument(context +
                                        ".search: protocol must be 'bbpssw' "
                                        "or 'dejmps'");
    }
    return space;
}

SweepConfig parse_sweep(const json& j, int index) {
    const std::string context = "sweeps[" + std::to_string(index) + "]";
    require_keys(j, context,
                 {"label", "generation", "medium", "channel",
                  "total_distance_km", "gate_error", "local_gate_time_s",
                  "code", "axis", "values", "search", "monte_carlo_trials"});
    SweepConfig sweep;
    if (!j.contains("generation"))
        throw std::invalid_argument(context +
                                    ": missing required key 'generation' "
                                    "(expected G1, G2, or G3)");
    sweep.fixed.generation =
        generation_from_string(j.at("generation").get<std::string>());
    sweep.fixed.channel = parse_channel(j, context);
    sweep.fixed.code = parse_code(j, context);
    sweep.fixed.total_distance_km =
        get_number(j, context, "total_distance_km", 0.0, /*required=*/true);
    if (!(sweep.fixed.total_distance_km > 0.0))
        throw std::invalid_argument(context +
                                    ": total_distance_km must be positive");
    sweep.fixed.gate_error = get_number(j, context, "gate_error", 0.0);
    sweep.fixed.local_gate_time_s =
        get_number(j, context, "local_gate_time_s", 1e-6);
    sweep.axis = sweep_axis_from_string(
        j.contains("axis") ? j.at("axis").get<std::string>()
                           : "coupling_efficiency");
    sweep.values = parse_array<double>(j, context, "values", {});
    if (!std::is_sorted(sweep.values.begin(), sweep.values.end()))
        throw std::invalid_argument(context + ": values must be ascending");
    sweep.space = parse_search(j, context, sweep.fixed);
    sweep.monte_carlo_trials = static_cast<long>(
        get_number(j, context, "monte_carlo_trials", 0.0));
    sweep.label = j.contains("label")
                      ? j.at("label").get<std::string>()
                      : to_string(sweep.fixed.generation) + "_" +
                            to_string(sweep.fixed.channel.medium);
    return sweep;
}

}  // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") +
                                    e.what());
    }
    require_keys(j, "config", {"name", "output_prefix", "seed", "sweeps"});
    RunConfig config;
    if (!j.contains("name"))
        throw std::invalid_argument("config: missing required key 'name'");
    config.name = j.at("name").get<std::string>();
    config.output_prefix = j.contains("output_prefix")
                               ? j.at("output_prefix").get<std::string>()
                               : config.name;
    config.seed = static_cast<std::uint64_t>(
        get_number(j, "config", "seed", 0.0));
    if (!j.contains("sweeps") || !j.at("sweeps").is_array() ||
        j.at("sweeps").empty())
        throw std::invalid_argument(
            "config: 'sweeps' must be a nonempty array");
    int index = 0;
    for (const auto& s : j.at("sweeps"))
        config.sweeps.push_back(parse_sweep(s, index++));
    return config;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str());
}

std::string validate_config(const RunConfig& config) {
    std::ostringstream out;
    out << "scenario: " << config.name << "\n";
    out << "output_prefix: " << config.output_prefix << "\n";
    out << "seed: " << config.seed << "\n";
    int index = 0;
    for (const auto& sweep : config.sweeps) {
        out << "sweep[" << index++ << "] " << sweep.label << "\n";
        out << "  generation: " << to_string(sweep.fixed.generation) << "\n";
        out << "  medium: " << to_string(sweep.fixed.channel.medium)
            << " (L_att " << sweep.fixed.channel.attenuation_length_km
            << " km, signal " << sweep.fixed.channel.signal_speed_km_per_s
            << " km/s)\n";
        out << "  total_distance_km: " << sweep.fixed.total_distance_km << "\n";
        out << "  gate_error: " << sweep.fixed.gate_error << "\n";
        out << "  local_gate_time_s: " << sweep.fixed.local_gate_time_s << "\n";
        out << "  code: block " << sweep.fixed.code.block_size
            << ", loss_threshold " << sweep.fixed.code.loss_threshold
            << ", fault_threshold " << sweep.fixed.code.fault_threshold
            << ", exponent " << sweep.fixed.code.suppression_exponent << "\n";
        out << "  axis: " << to_string(sweep.axis) << " ("
            << sweep.values.size() << " values, "
            << sweep.values.front() << " .. " << sweep.values.back() << ")\n";
        out << "  grid points per value: "
            << sweep.space.grid_size(sweep.fixed.generation) << "\n";
        if (sweep.monte_carlo_trials > 0)
            out << "  monte_carlo_trials: " << sweep.monte_carlo_trials << "\n";
    }
    return out.str();
}

std::string format_csv_value(double value) {
    if (value == 0.0) return "0";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    if (std::abs(value) < 1e-3)
        std::snprintf(buf, sizeof buf, "%.9e", value);
    else
        std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

namespace {

std::string schedule_string(const PurificationSchedule& schedule) {
    std::string out;
    for (size_t i = 0; i < schedule.rounds_per_level.size(); ++i) {
        if (i) out += '|';
        out += std::to_string(schedule.rounds_per_level[i]);
    }
    return out;
}

void write_sweep_csv(std::ostream& out, const SweepConfig& sweep,
                     const std::vector<SweepRow>& rows) {
    out << "axis,axis_value,generation,medium,cost_coefficient,eq1_form,"
           "rate_secret_bits_per_s,end_fidelity,secret_fraction,nesting,"
           "purification_schedule,spacing_km,memory_qubits,attempts,"
           "repeater_count\n";
    for (const auto& row : rows) {
        out << to_string(sweep.axis) << ',' << format_csv_value(row.axis_value)
            << ',' << to_string(sweep.fixed.generation) << ','
            << to_string(sweep.fixed.channel.medium) << ',';
        if (!row.result.best) {
            // Explicit no-viable-architecture marker.
            out << "inf,0,0,0,0,,,,,," << "\n";
            continue;
        }
        const CostReport& best = *row.result.best;
        const auto& perf = best.performance;
        out << format_csv_value(best.cost_coefficient) << ','
            << format_csv_value(best.eq1_form) << ','
            << format_csv_value(perf.rate_secret_bits_per_s) << ','
            << format_csv_value(perf.end_state.fidelity()) << ','
            << format_csv_value(perf.secret_fraction_per_pair) << ','
            << best.config.nesting_level << ','
            << schedule_string(best.config.purification_schedule) << ','
            << format_csv_value(best.config.link_length_km()) << ','
            << best.config.memory_qubits_per_half_node << ','
            << best.config.attempts_per_round << ','
            << perf.repeater_count << "\n";
    }
}

}  // namespace

ScenarioOutput run_scenario(const RunConfig& config,
                            const std::string& output_dir, std::ostream& log) {
    namespace fs = std::filesystem;
    const fs::path dir = output_dir.empty() ? fs::path(".") : fs::path(output_dir);
    fs::create_directories(dir);

    ScenarioOutput output;
    std::vector<std::pair<fs::path, fs::path>> staged;  // temp -> final
    try {
        for (const auto& sweep : config.sweeps) {
            const auto rows = qrcost::sweep(sweep.axis, sweep.values,
                                            sweep.fixed, sweep.space);
            const fs::path final_path =
                dir / (config.output_prefix + "_" + sweep.label + ".csv");
            const fs::path temp_path = final_path.string() + ".tmp";
            {
                std::ofstream out(temp_path, std::ios::binary);
                if (!out)
                    throw std::runtime_error("cannot write " +
                                             temp_path.string());
                write_sweep_csv(out, sweep, rows);
            }
            staged.emplace_back(temp_path, final_path);

            log << "== " << sweep.label << " ("
                << to_string(sweep.fixed.generation) << ", "
                << to_string(sweep.fixed.channel.medium) << ", L_tot "
                << sweep.fixed.total_distance_km << " km, eps_G "
                << sweep.fixed.gate_error << ")\n";
            log << "   " << to_string(sweep.axis)
                << "  cost_coefficient  nesting/spacing\n";
            for (const auto& row : rows) {
                log << "   " << std::setw(8) << row.axis_value << "  ";
                if (row.result.best) {
                    const auto& best = *row.result.best;
                    log << std::setw(14)
                        << format_csv_value(best.cost_coefficient) << "  ";
                    if (sweep.fixed.generation == Generation::G1)
                        log << "n=" << best.config.nesting_level << " M=["
                            << schedule_string(best.config.purification_schedule)
                            << "]";
                    else
                        log << format_csv_value(best.config.link_length_km())
                            << " km";
                    if (sweep.monte_carlo_trials > 0 &&
                        sweep.fixed.generation == Generation::G1) {
                        const auto mc = simulate_chain_monte_carlo(
                            best.config, sweep.monte_carlo_trials, config.seed);
                        log << "  mc_time="
                            << format_csv_value(mc.total_time_per_pair_s)
                            << "s vs analytic="
                            << format_csv_value(
                                   best.performance.total_time_per_pair_s)
                            << "s";
                    }
                } else {
                    log << "no viable architecture";
                }
                log << "\n";
            }
        }
        for (const auto& [temp, final_path] : staged) {
            fs::rename(temp, final_path);
            output.csv_paths.push_back(final_path.string());
        }
    } catch (...) {
        for (const auto& [temp, final_path] : staged) {
            (void)final_path;
            std::error_code ec;
            fs::remove(temp, ec);
        }
        throw;
    }
    return output;
}

namespace {

const std::map<std::string, std::string>& builtin_scenarios() {
    static const std::map<std::string, std::string> scenarios = {
        {"fig3", R"JSON({
  "name": "fig3",
  "seed": 20240817,
  "sweeps": [
    {
      "label": "g1_fiber", "generation": "G1", "medium": "fiber",
      "total_distance_km": 10000.0, "gate_error": 0.01,
      "axis": "coupling_efficiency",
      "values": [0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5, 0.55,
                 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95],
      "search": {"nesting_levels": [0, 1, 2, 3, 4, 5, 6],
                 "purification_rounds": [0, 1, 2]}
    },
    {
      "label": "g1_vbg", "generation": "G1", "medium": "vbg",
      "total_distance_km": 10000.0, "gate_error": 0.01,
      "axis": "coupling_efficiency",
      "values": [0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5, 0.55,
                 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95],
      "search": {"nesting_levels": [0, 1, 2, 3, 4, 5, 6],
                 "purification_rounds": [0, 1, 2]}
    },
    {
      "label": "g2_fiber_eg1e3", "generation": "G2", "medium": "fiber",
      "total_distance_km": 10000.0, "gate_error": 0.001,
      "axis": "coupling_efficiency",
      "values": [0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5, 0.55,
                 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95]
    },
    {
      "label": "g2_vbg_eg1e3", "generation": "G2", "medium": "vbg",
      "total_distance_km": 10000.0, "gate_error": 0.001,
      "axis": "coupling_efficiency",
      "values": [0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5, 0.55,
                 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95]
    },
    {
      "label": "g2_fiber_eg1e4", "generation": "G2", "medium": "fiber",
      "total_distance_km": 10000.0, "gate_error": 0.0001,
      "axis": "coupling_efficiency",
      "values": [0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5, 0.55,
                 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95]
    },
    {
      "label": "g2_vbg_eg1e4", "generation": "G2", "medium": "vbg",
      "total_distance_km": 10000.0, "gate_error": 0.0001,
      "axis": "coupling_efficiency",
      "values": [0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5, 0.55,
                 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95]
    },
    {
      "label": "g3_fiber_eg1e3", "generation": "G3", "medium": "fiber",
      "total_distance_km": 10000.0, "gate_error": 0.001,
      "axis": "coupling_efficiency",
      "values": [0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5, 0.55,
                 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95]
    },
    {
      "label": "g3_vbg_eg1e3", "generation": "G3", "medium": "vbg",
      "total_distance_km": 10000.0, "gate_error": 0.001,
      "axis": "coupling_efficiency",
      "values": [0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5, 0.55,
                 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95]
    },
    {
      "label": "g3_fiber_eg1e4", "generation": "G3", "medium": "fiber",
      "total_distance_km": 10000.0, "gate_error": 0.0001,
      "axis": "coupling_efficiency",
      "values": [0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5, 0.55,
                 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95]
    },
    {
      "label": "g3_vbg_eg1e4", "generation": "G3", "medium": "vbg",
      "total_distance_km": 10000.0, "gate_error": 0.0001,
      "axis": "coupling_efficiency",
      "values": [0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5, 0.55,
                 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95]
    }
  ]
})JSON"},
        {"fig4", R"JSON({
  "name": "fig4",
  "seed": 20240817,
  "sweeps": [
    {
      "label": "g1_fiber_10000km", "generation": "G1", "medium": "fiber",
      "total_distance_km": 10000.0, "gate_error": 0.01,
      "axis": "coupling_efficiency",
      "values": [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95],
      "search": {"nesting_levels": [0, 1, 2, 3, 4, 5, 6, 7, 8],
                 "purification_rounds": [0, 1, 2]}
    },
    {
      "label": "g1_vbg_4500000km", "generation": "G1", "medium": "vbg",
      "total_distance_km": 4500000.0, "gate_error": 0.01,
      "axis": "coupling_efficiency",
      "values": [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95],
      "search": {"nesting_levels": [0, 1, 2, 3, 4, 5, 6, 7, 8],
                 "purification_rounds": [0, 1, 2]}
    }
  ]
})JSON"},
        {"fig5", R"JSON({
  "name": "fig5",
  "seed": 20240817,
  "sweeps": [
    {
      "label": "g2_fiber_10000km", "generation": "G2", "medium": "fiber",
      "total_distance_km": 10000.0, "gate_error": 0.001,
      "axis": "coupling_efficiency",
      "values": [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95]
    },
    {
      "label": "g2_vbg_100000km", "generation": "G2", "medium": "vbg",
      "total_distance_km": 100000.0, "gate_error": 0.001,
      "axis": "coupling_efficiency",
      "values": [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95]
    },
    {
      "label": "g2_vbg_80000km", "generation": "G2", "medium": "vbg",
      "total_distance_km": 80000.0, "gate_error": 0.001,
      "axis": "coupling_efficiency",
      "values": [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95]
    }
  ]
})JSON"}};
    return scenarios;
}

}  // namespace

std::vector<std::string> builtin_scenario_names() {
    std::vector<std::string> names;
    for (const auto& [name, text] : builtin_scenarios()) {
        (void)text;
        names.push_back(name);
    }
    return names;
}

bool is_builtin_scenario(const std::string& name) {
    return builtin_scenarios().count(name) != 0;
}

const std::string& builtin_scenario_text(const std::string& name) {
    const auto& scenarios = builtin_scenarios();
    const auto it = scenarios.find(name);
    if (it == scenarios.end())
        throw std::invalid_argument("unknown builtin scenario: " + name);
    return it->second;
}

}  // namespace qrcost
