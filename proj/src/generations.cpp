#include "qrcost/generations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qrcost {

std::string to_string(Generation g) {
    switch (g) {
        case Generation::G1: return "G1";
        case Generation::G2: return "G2";
        case Generation::G3: return "G3";
    }
    return "G1";
}

Generation generation_from_string(const std::string& name) {
    if (name == "G1" || name == "g1" || name == "1") return Generation::G1;
    if (name == "G2" || name == "g2" || name == "2") return Generation::G2;
    if (name == "G3" || name == "g3" || name == "3") return Generation::G3;
    throw std::invalid_argument("unknown generation '" + name +
                                "' (expected G1, G2, or G3)");
}

void CodeParams::validate() const {
    if (block_size < 1) throw std::domain_error("block_size must be >= 1");
    if (!(loss_threshold > 0.0 && loss_threshold < 1.0))
        throw std::domain_error("loss_threshold must be in (0, 1)");
    if (!(fault_threshold > 0.0 && fault_threshold < 1.0))
        throw std::domain_error("fault_threshold must be in (0, 1)");
    if (!(suppression_exponent > 0.0))
        throw std::domain_error("suppression_exponent must be positive");
}

double CodeParams::logical_error(double gate_error) const {
    const double e = 0.1 * std::pow(gate_error / fault_threshold,
                                    suppression_exponent);
    return e < 1.0 ? e : 1.0;
}

void RepeaterConfig::validate() const {
    channel.validate();
    code.validate();
    if (!(total_distance_km > 0.0))
        throw std::domain_error("total_distance_km must be positive");
    if (nesting_level < 0) throw std::domain_error("nesting_level must be >= 0");
    if (memory_qubits_per_half_node < 1)
        throw std::domain_error("memory_qubits_per_half_node must be >= 1");
    if (attempts_per_round < 1)
        throw std::domain_error("attempts_per_round must be >= 1");
    if (!(gate_error >= 0.0 && gate_error < 1.0))
        throw std::domain_error("gate_error must be in [0, 1)");
    if (!(local_gate_time_s > 0.0))
        throw std::domain_error("local_gate_time_s must be positive");
    if (generation == Generation::G1) {
        purification_schedule.validate(nesting_level);
    } else if (!(spacing_km > 0.0)) {
        throw std::domain_error("spacing_km must be positive for G2/G3");
    }
}

int RepeaterConfig::link_count() const {
    if (generation == Generation::G1) return 1 << nesting_level;
    return static_cast<int>(std::ceil(total_distance_km / spacing_km - 1e-9));
}

double RepeaterConfig::link_length_km() const {
    return total_distance_km / link_count();
}

namespace {

constexpr double kUnderflow = 1e-30;

}  // namespace

PerformanceReport g1_performance(const RepeaterConfig& config) {
    config.validate();
    if (config.generation != Generation::G1)
        throw std::domain_error("g1_performance requires a G1 config");

    const int nesting = config.nesting_level;
    const double l0 = config.link_length_km();
    const double c = config.channel.signal_speed_km_per_s;

    PerformanceReport report;
    report.repeater_count = config.repeater_count();

    const double p = link_success_prob(l0, config.channel);
    const double p_success = multiplexed_success(
        p, config.memory_qubits_per_half_node, config.attempts_per_round);
    if (p_success < kUnderflow) {
        report.degenerate = true;
        report.end_state = BellDiagonalState{{0.25, 0.25, 0.25, 0.25}};
        report.qubits_per_repeater = 2LL * config.memory_qubits_per_half_node;
        report.total_time_per_pair_s =
            std::numeric_limits<double>::infinity();
        return report;
    }

    // Elementary pair: gate noise of the HEG circuit folded in as a twirl.
    BellDiagonalState state =
        depolarize(BellDiagonalState::perfect(), config.gate_error);
    double time_s = (l0 / c) / p_success;

    for (int level = 0; level <= nesting; ++level) {
        const double lk = l0 * static_cast<double>(1 << level);
        const int rounds = config.purification_schedule.rounds_per_level[level];
        for (int r = 0; r < rounds; ++r) {
            if (config.protocol == PurificationProtocol::DEJMPS) {
                // Same descending relabeling as pump_to_schedule.
                auto& w = state.weights;
                std::sort(w.begin(), w.end(), std::greater<double>());
            }
            const auto outcome = purification_round(state, config.protocol);
            // Two input pairs (3/2 waiting factor), outcome comparison over
            // lk, retried until acceptance.
            time_s = 1.5 * (time_s + lk / c) / outcome.success_prob;
            state = outcome.output_state;
        }
        if (level < nesting) {
            time_s = 1.5 * (time_s + lk / c);
            state = swap_links(state, state, config.gate_error);
        }
    }

    report.end_state = state;
    report.secret_fraction_per_pair = secret_fraction(state);
    report.total_time_per_pair_s = time_s;
    report.rate_secret_bits_per_s = report.secret_fraction_per_pair / time_s;
    const double pairs_in_flight =
        std::pow(2.0, config.purification_schedule.total_rounds());
    report.qubits_per_repeater =
        2LL * config.memory_qubits_per_half_node *
        static_cast<long long>(pairs_in_flight);
    return report;
}

PerformanceReport g2_performance(const RepeaterConfig& config) {
    config.validate();
    if (config.generation != Generation::G2)
        throw std::domain_error("g2_performance requires a G2 config");

    PerformanceReport report;
    const int links = config.link_count();
    report.repeater_count = links - 1;
    report.qubits_per_repeater = 2LL * config.code.block_size *
                                 config.memory_qubits_per_half_node;

    if (config.gate_error >= config.code.fault_threshold) {
        report.above_threshold = true;
        report.end_state = BellDiagonalState{{0.25, 0.25, 0.25, 0.25}};
        report.total_time_per_pair_s = config.local_gate_time_s;
        return report;
    }

    const double l0 = config.link_length_km();
    const double c = config.channel.signal_speed_km_per_s;
    const double p = link_success_prob(l0, config.channel);
    const double p_success = multiplexed_success(
        p, config.memory_qubits_per_half_node, config.attempts_per_round);
    if (p_success < kUnderflow) {
        report.degenerate = true;
        report.end_state = BellDiagonalState{{0.25, 0.25, 0.25, 0.25}};
        report.total_time_per_pair_s =
            std::numeric_limits<double>::infinity();
        return report;
    }

    // Two-way heralding over one elementary link only.
    const double link_time = (l0 / c) / p_success;
    const double time_s = std::max(config.local_gate_time_s, link_time);

    // One encoded teleportation per link accumulates logical error.
    const double eps_l = config.code.logical_error(config.gate_error);
    const double q_total = -std::expm1(links * std::log1p(-eps_l));
    const BellDiagonalState state =
        depolarize(BellDiagonalState::perfect(), q_total);

    report.end_state = state;
    report.secret_fraction_per_pair = secret_fraction(state);
    report.total_time_per_pair_s = time_s;
    report.rate_secret_bits_per_s = report.secret_fraction_per_pair / time_s;
    return report;
}

double g3_link_success(double survival, const CodeParams& code) {
    code.validate();
    if (!(survival >= 0.0 && survival <= 1.0))
        throw std::domain_error("survival must be in [0, 1]");
    const int n = code.block_size;
    const int k_min = static_cast<int>(
        std::ceil(n * (1.0 - code.loss_threshold) - 1e-12));
    if (k_min <= 0) return 1.0;
    // Exact binomial upper tail.
    double tail = 0.0;
    for (int k = k_min; k <= n; ++k) {
        double term = 1.0;
        for (int i = 0; i < k; ++i)
            term *= survival * static_cast<double>(n - i) /
                    static_cast<double>(k - i);
        for (int i = 0; i < n - k; ++i) term *= 1.0 - survival;
        tail += term;
    }
    return tail < 1.0 ? tail : 1.0;
}

PerformanceReport g3_performance(const RepeaterConfig& config) {
    config.validate();
    if (config.generation != Generation::G3)
        throw std::domain_error("g3_performance requires a G3 config");

    PerformanceReport report;
    const int links = config.link_count();
    report.repeater_count = links - 1;
    report.qubits_per_repeater = 2LL * config.code.block_size;
    report.total_time_per_pair_s = config.local_gate_time_s;
    report.end_state = BellDiagonalState{{0.25, 0.25, 0.25, 0.25}};

    if (config.gate_error >= config.code.fault_threshold) {
        report.above_threshold = true;
        return report;
    }

    const double l0 = config.link_length_km();
    const double survival = config.channel.coupling_efficiency *
                            transmissivity(l0, config.channel);
    if (1.0 - survival >= config.code.loss_threshold) {
        report.below_loss_tolerance = true;
        return report;
    }

    const double p_link = g3_link_success(survival, config.code);
    const double success = std::pow(p_link, links);
    if (success < kUnderflow) {
        report.degenerate = true;
        return report;
    }

    const double eps_l = config.code.logical_error(config.gate_error);
    const double q_total = -std::expm1(links * std::log1p(-eps_l));
    const BellDiagonalState state =
        depolarize(BellDiagonalState::perfect(), q_total);

    report.end_state = state;
    report.secret_fraction_per_pair = secret_fraction(state);
    // One-way operation: throughput set by the local cycle clock; expected
    // time per delivered pair folds in the end-to-end arrival probability.
    report.total_time_per_pair_s = config.local_gate_time_s / success;
    report.rate_secret_bits_per_s =
        report.secret_fraction_per_pair / report.total_time_per_pair_s;
    return report;
}

PerformanceReport evaluate_performance(const RepeaterConfig& config) {
    switch (config.generation) {
        case Generation::G1: return g1_performance(config);
        case Generation::G2: return g2_performance(config);
        case Generation::G3: return g3_performance(config);
    }
    throw std::logic_error("unreachable");
}

}  // namespace qrcost
