#include "qrcost/cost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace qrcost {

bool CostReport::viable() const { return std::isfinite(cost_coefficient); }

CostReport cost_coefficient(const RepeaterConfig& config) {
    CostReport report;
    report.config = config;
    report.performance = evaluate_performance(config);
    const auto& perf = report.performance;
    const double total_qubits =
        static_cast<double>(perf.qubits_per_repeater) *
        static_cast<double>(perf.repeater_count + 1);
    if (perf.rate_secret_bits_per_s > 0.0) {
        report.cost_coefficient =
            total_qubits /
            (perf.rate_secret_bits_per_s * config.total_distance_km);
        report.eq1_form = perf.rate_secret_bits_per_s *
                          static_cast<double>(perf.qubits_per_repeater) /
                          config.link_length_km();
    } else {
        report.cost_coefficient = std::numeric_limits<double>::infinity();
        report.eq1_form = 0.0;
    }
    return report;
}

long long SearchSpace::grid_size(Generation generation) const {
    const long long mn = static_cast<long long>(memory_qubits.size()) *
                         static_cast<long long>(attempts.size());
    if (generation == Generation::G1) {
        long long total = 0;
        for (int n : nesting_levels) {
            long long schedules = 1;
            for (int k = 0; k <= n; ++k)
                schedules *= static_cast<long long>(purification_rounds.size());
            total += schedules;
        }
        return total * mn;
    }
    return static_cast<long long>(spacing_grid_km.size()) * mn;
}

SearchSpace SearchSpace::defaults(Generation generation,
                                  const ChannelModel& channel,
                                  double total_distance_km) {
    SearchSpace space;
    if (generation != Generation::G1)
        space.spacing_grid_km = default_spacing_grid(channel, total_distance_km);
    return space;
}

std::vector<double> default_spacing_grid(const ChannelModel& channel,
                                         double total_distance_km, int points) {
    if (points < 1) throw std::domain_error("points must be >= 1");
    const double lo = 1.0;
    const double hi =
        std::max(lo, std::min(channel.attenuation_length_km, total_distance_km));
    std::vector<double> grid;
    grid.reserve(points);
    if (points == 1 || hi == lo) {
        grid.push_back(hi);
        return grid;
    }
    const double step = std::log(hi / lo) / (points - 1);
    for (int i = 0; i < points; ++i) grid.push_back(lo * std::exp(step * i));
    return grid;
}

namespace {

RepeaterConfig base_config(const FixedParams& fixed,
                           const SearchSpace& space) {
    RepeaterConfig config;
    config.generation = fixed.generation;
    config.total_distance_km = fixed.total_distance_km;
    config.gate_error = fixed.gate_error;
    config.local_gate_time_s = fixed.local_gate_time_s;
    config.code = fixed.code;
    config.channel = fixed.channel;
    config.protocol = space.protocol;
    return config;
}

// Deterministic preference order: cost, then total qubits, then nesting
// level, then spacing. Independent of grid enumeration order.
bool better(const CostReport& a, const CostReport& b) {
    const double qa = static_cast<double>(a.performance.qubits_per_repeater) *
                      (a.performance.repeater_count + 1);
    const double qb = static_cast<double>(b.performance.qubits_per_repeater) *
                      (b.performance.repeater_count + 1);
    return std::make_tuple(a.cost_coefficient, qa, a.config.nesting_level,
                           a.config.link_length_km()) <
           std::make_tuple(b.cost_coefficient, qb, b.config.nesting_level,
                           b.config.link_length_km());
}

template <typename Fn>
void enumerate_schedules(int levels, const std::vector<int>& choices,
                         std::vector<int>& current, Fn&& fn) {
    if (static_cast<int>(current.size()) == levels) {
        fn(current);
        return;
    }
    for (int c : choices) {
        current.push_back(c);
        enumerate_schedules(levels, choices, current, fn);
        current.pop_back();
    }
}

}  // namespace

OptimizeResult optimize(const SearchSpace& space, const FixedParams& fixed,
                        int top_k) {
    if (space.memory_qubits.empty() || space.attempts.empty())
        throw std::domain_error("search space must be nonempty");
    if (fixed.generation == Generation::G1 && space.nesting_levels.empty())
        throw std::domain_error("G1 search space needs nesting levels");
    if (fixed.generation != Generation::G1 && space.spacing_grid_km.empty())
        throw std::domain_error("G2/G3 search space needs a spacing grid");

    OptimizeResult result;
    std::vector<CostReport> candidates;

    auto consider = [&](const RepeaterConfig& config) {
        ++result.evaluated;
        const CostReport report = cost_coefficient(config);
        if (!report.viable()) return;
        candidates.push_back(report);
    };

    for (int m : space.memory_qubits) {
        for (int att : space.attempts) {
            RepeaterConfig config = base_config(fixed, space);
            config.memory_qubits_per_half_node = m;
            config.attempts_per_round = att;
            if (fixed.generation == Generation::G1) {
                for (int n : space.nesting_levels) {
                    config.nesting_level = n;
                    std::vector<int> current;
                    enumerate_schedules(
                        n + 1, space.purification_rounds, current,
                        [&](const std::vector<int>& schedule) {
                            config.purification_schedule.rounds_per_level =
                                schedule;
                            consider(config);
                        });
                }
            } else {
                config.purification_schedule.rounds_per_level = {0};
                for (double spacing : space.spacing_grid_km) {
                    config.spacing_km = spacing;
                    consider(config);
                }
            }
        }
    }

    std::sort(candidates.begin(), candidates.end(), better);
    if (!candidates.empty()) {
        result.best = candidates.front();
        const int k = std::min<int>(top_k, static_cast<int>(candidates.size()));
        result.top_k.assign(candidates.begin(), candidates.begin() + k);
    }
    return result;
}

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::CouplingEfficiency: return "coupling_efficiency";
        case SweepAxis::TotalDistance: return "total_distance";
        case SweepAxis::GateError: return "gate_error";
    }
    return "coupling_efficiency";
}

SweepAxis sweep_axis_from_string(const std::string& name) {
    if (name == "coupling_efficiency") return SweepAxis::CouplingEfficiency;
    if (name == "total_distance") return SweepAxis::TotalDistance;
    if (name == "gate_error") return SweepAxis::GateError;
    throw std::invalid_argument(
        "unknown sweep axis '" + name +
        "' (expected coupling_efficiency, total_distance, or gate_error)");
}

std::vector<SweepRow> sweep(SweepAxis axis, const std::vector<double>& values,
                            const FixedParams& fixed,
                            const SearchSpace& space) {
    if (values.empty()) throw std::domain_error("sweep values must be nonempty");
    if (!std::is_sorted(values.begin(), values.end()))
        throw std::domain_error("sweep values must be sorted ascending");

    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    for (double v : values) {
        FixedParams point = fixed;
        SearchSpace point_space = space;
        switch (axis) {
            case SweepAxis::CouplingEfficiency:
                point.channel.coupling_efficiency = v;
                break;
            case SweepAxis::TotalDistance:
                point.total_distance_km = v;
                break;
            case SweepAxis::GateError:
                point.gate_error = v;
                break;
        }
        rows.push_back({v, optimize(point_space, point)});
    }
    return rows;
}

}  // namespace qrcost
