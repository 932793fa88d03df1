#include "qrcost/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace qrcost {

namespace {

struct ChainModel {
    double batch_time_s = 0.0;            // heralding round trip per batch
    double p_success = 0.0;               // multiplexed batch success
    std::vector<double> level_comm_s;     // L_k / c per level
    // Deterministic per-(level, round) purification acceptance, and the
    // per-level state after local purification (input to the next swap).
    std::vector<std::vector<double>> round_success;
};

class ChainSampler {
  public:
    ChainSampler(const ChainModel& model, std::mt19937_64& rng)
        : model_(model), rng_(rng), geo_(model.p_success) {}

    double end_to_end_time(int nesting) { return purified_pair_time(nesting); }

  private:
    double raw_pair_time(int level) {
        if (level == 0) {
            const auto batches = static_cast<double>(geo_(rng_)) + 1.0;
            return batches * model_.batch_time_s;
        }
        const double left = purified_pair_time(level - 1);
        const double right = purified_pair_time(level - 1);
        return std::max(left, right) + model_.level_comm_s[level - 1];
    }

    double purified_pair_time(int level) {
        return pair_with_rounds(
            level, static_cast<int>(model_.round_success[level].size()));
    }

    // Symmetric pumping: a pair with r rounds consumes two pairs with r-1
    // rounds; on rejection both inputs are discarded and regenerated.
    double pair_with_rounds(int level, int rounds) {
        if (rounds == 0) return raw_pair_time(level);
        std::bernoulli_distribution accept(
            model_.round_success[level][rounds - 1]);
        double total = 0.0;
        for (;;) {
            const double left = pair_with_rounds(level, rounds - 1);
            const double right = pair_with_rounds(level, rounds - 1);
            total += std::max(left, right) + model_.level_comm_s[level];
            if (accept(rng_)) return total;
        }
    }

    const ChainModel& model_;
    std::mt19937_64& rng_;
    std::geometric_distribution<long> geo_;
};

}  // namespace

PerformanceReport simulate_chain_monte_carlo(const RepeaterConfig& config,
                                             long trials, std::uint64_t seed) {
    config.validate();
    if (config.generation != Generation::G1)
        throw std::domain_error("simulate_chain_monte_carlo requires a G1 config");
    if (trials < 1000) throw std::domain_error("trials must be >= 1000");

    const int nesting = config.nesting_level;
    const double l0 = config.link_length_km();
    const double c = config.channel.signal_speed_km_per_s;

    ChainModel model;
    model.batch_time_s = l0 / c;
    model.p_success = multiplexed_success(
        link_success_prob(l0, config.channel),
        config.memory_qubits_per_half_node, config.attempts_per_round);
    if (model.p_success < 1e-30)
        throw std::domain_error("link success probability underflow");

    // State evolution is deterministic given acceptance; precompute the
    // per-round acceptance probabilities along the analytic pipeline.
    BellDiagonalState state =
        depolarize(BellDiagonalState::perfect(), config.gate_error);
    model.level_comm_s.resize(nesting + 1);
    model.round_success.resize(nesting + 1);
    for (int level = 0; level <= nesting; ++level) {
        model.level_comm_s[level] = l0 * static_cast<double>(1 << level) / c;
        const int rounds = config.purification_schedule.rounds_per_level[level];
        for (int r = 0; r < rounds; ++r) {
            if (config.protocol == PurificationProtocol::DEJMPS) {
                auto& w = state.weights;
                std::swap(w[0], *std::max_element(w.begin(), w.end()));
            }
            const auto outcome = purification_round(state, config.protocol);
            model.round_success[level].push_back(outcome.success_prob);
            state = outcome.output_state;
        }
        if (level < nesting) state = swap_links(state, state, config.gate_error);
    }
    const double end_fidelity = state.fidelity();

    std::mt19937_64 rng(seed);
    double sum_t = 0.0, sum_t2 = 0.0;
    long fidelity_hits = 0;
    {
        ChainSampler sampler(model, rng);
        std::bernoulli_distribution projects_onto_target(end_fidelity);
        for (long i = 0; i < trials; ++i) {
            const double t = sampler.end_to_end_time(nesting);
            sum_t += t;
            sum_t2 += t * t;
            if (projects_onto_target(rng)) ++fidelity_hits;
        }
    }

    const double n = static_cast<double>(trials);
    const double mean_t = sum_t / n;
    const double var_t = std::max(0.0, (sum_t2 - n * mean_t * mean_t) / (n - 1));
    const double f_hat = static_cast<double>(fidelity_hits) / n;

    PerformanceReport report;
    report.end_state = state;
    report.secret_fraction_per_pair = secret_fraction(state);
    report.total_time_per_pair_s = mean_t;
    report.rate_secret_bits_per_s = report.secret_fraction_per_pair / mean_t;
    report.repeater_count = config.repeater_count();
    report.qubits_per_repeater =
        2LL * config.memory_qubits_per_half_node *
        static_cast<long long>(
            std::pow(2.0, config.purification_schedule.total_rounds()));
    report.time_ci_halfwidth_s = 1.96 * std::sqrt(var_t / n);
    report.fidelity_estimate = f_hat;
    report.fidelity_ci_halfwidth = 1.96 * std::sqrt(f_hat * (1.0 - f_hat) / n);
    return report;
}

}  // namespace qrcost
