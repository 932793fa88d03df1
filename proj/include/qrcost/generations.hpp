#pragma once

#include <cstdint>
#include <string>

#include "qrcost/bell_state.hpp"
#include "qrcost/channel.hpp"
#include "qrcost/protocols.hpp"

namespace qrcost {

enum class Generation { G1, G2, G3 };

std::string to_string(Generation g);
Generation generation_from_string(const std::string& name);

// Error-correcting code knobs for 2G/3G. The logical error per encoded
// operation follows the threshold scaling 0.1 * (eps_G / fault_threshold)^kappa.
struct CodeParams {
    int block_size = 7;
    double loss_threshold = 0.5;
    double fault_threshold = 1e-2;
    double suppression_exponent = 2.0;

    void validate() const;
    double logical_error(double gate_error) const;
};

struct RepeaterConfig {
    Generation generation = Generation::G1;
    double total_distance_km = 1000.0;
    int nesting_level = 0;                   // G1: 2^n links of L0 = L_tot/2^n
    double spacing_km = 0.0;                 // G2/G3: repeater spacing (>0)
    PurificationSchedule purification_schedule{{0}};
    PurificationProtocol protocol = PurificationProtocol::DEJMPS;
    int memory_qubits_per_half_node = 1;     // M
    int attempts_per_round = 1;              // n_EG
    double gate_error = 0.0;                 // eps_G
    double local_gate_time_s = 1e-6;         // t0, 2G/3G cycle time
    CodeParams code;
    ChannelModel channel;

    void validate() const;
    // Number of elementary links and their effective length.
    int link_count() const;
    double link_length_km() const;
    int repeater_count() const { return link_count() - 1; }
};

struct PerformanceReport {
    double rate_secret_bits_per_s = 0.0;
    BellDiagonalState end_state;
    double secret_fraction_per_pair = 0.0;
    long long qubits_per_repeater = 0;
    int repeater_count = 0;
    double total_time_per_pair_s = 0.0;
    bool above_threshold = false;            // 2G/3G: eps_G >= fault threshold
    bool below_loss_tolerance = false;       // 3G: mean loss exceeds budget
    bool degenerate = false;                 // success probability underflow
    // Monte Carlo extras (zero for analytic evaluations).
    double time_ci_halfwidth_s = 0.0;
    double fidelity_estimate = 0.0;
    double fidelity_ci_halfwidth = 0.0;
};

PerformanceReport g1_performance(const RepeaterConfig& config);
PerformanceReport g2_performance(const RepeaterConfig& config);
PerformanceReport g3_performance(const RepeaterConfig& config);
PerformanceReport evaluate_performance(const RepeaterConfig& config);

// Per-link decodable-arrival probability for the 3G loss model:
// Pr[Binomial(block_size, survival) >= ceil(block_size * (1 - loss_threshold))].
double g3_link_success(double survival, const CodeParams& code);

}  // namespace qrcost
