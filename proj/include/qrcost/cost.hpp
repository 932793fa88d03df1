#pragma once

#include <optional>
#include <vector>

#include "qrcost/generations.hpp"

namespace qrcost {

struct CostReport {
    // Qubit-seconds per secret bit per km:
    //   qubits_per_repeater * (repeater_count + 1) / (rate * L_tot).
    // Infinite when the rate is zero.
    double cost_coefficient = 0.0;
    // Literal Eq.-style form: rate * qubits_per_repeater / spacing_km.
    double eq1_form = 0.0;
    RepeaterConfig config;
    PerformanceReport performance;

    bool viable() const;
};

CostReport cost_coefficient(const RepeaterConfig& config);

// Exhaustive grid over architecture parameters at fixed
// (generation, L_tot, eps_G, channel).
struct SearchSpace {
    std::vector<int> nesting_levels{0, 1, 2, 3, 4};        // G1
    std::vector<int> purification_rounds{0, 1, 2, 3};      // per-level values
    std::vector<double> spacing_grid_km;                   // G2/G3
    std::vector<int> memory_qubits{1, 10, 100};
    std::vector<int> attempts{1};
    PurificationProtocol protocol = PurificationProtocol::DEJMPS;

    long long grid_size(Generation generation) const;
    static SearchSpace defaults(Generation generation,
                                const ChannelModel& channel,
                                double total_distance_km);
};

struct FixedParams {
    Generation generation = Generation::G1;
    double total_distance_km = 10000.0;
    double gate_error = 0.0;
    double local_gate_time_s = 1e-6;
    CodeParams code;
    ChannelModel channel;
};

struct OptimizeResult {
    std::optional<CostReport> best;        // empty: no viable architecture
    std::vector<CostReport> top_k;
    long long evaluated = 0;
};

OptimizeResult optimize(const SearchSpace& space, const FixedParams& fixed,
                        int top_k = 1);

enum class SweepAxis { CouplingEfficiency, TotalDistance, GateError };

std::string to_string(SweepAxis axis);
SweepAxis sweep_axis_from_string(const std::string& name);

struct SweepRow {
    double axis_value = 0.0;
    OptimizeResult result;
};

std::vector<SweepRow> sweep(SweepAxis axis, const std::vector<double>& values,
                            const FixedParams& fixed, const SearchSpace& space);

// Log-spaced spacing grid between 1 km and min(L_att, L_tot).
std::vector<double> default_spacing_grid(const ChannelModel& channel,
                                         double total_distance_km,
                                         int points = 20);

}  // namespace qrcost
