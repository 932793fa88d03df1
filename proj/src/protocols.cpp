#include "qrcost/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qrcost {

int PurificationSchedule::total_rounds() const {
    return std::accumulate(rounds_per_level.begin(), rounds_per_level.end(), 0);
}

void PurificationSchedule::validate(int nesting_level) const {
    if (static_cast<int>(rounds_per_level.size()) != nesting_level + 1)
        throw std::domain_error(
            "purification schedule length must equal nesting_level + 1");
    for (int r : rounds_per_level)
        if (r < 0) throw std::domain_error("purification rounds must be >= 0");
}

PurificationOutcome bbpssw_round(const BellDiagonalState& state) {
    state.validate();
    const double f = state.fidelity();
    if (f < 0.25)
        throw std::domain_error("BBPSSW input fidelity below 1/4");
    const double w = (1.0 - f) / 3.0;
    const double d = f * f + (2.0 / 3.0) * f * (1.0 - f) + 5.0 * w * w;
    const double f_out = (f * f + w * w) / d;
    return {werner_state(f_out), d};
}

PurificationOutcome dejmps_round(const BellDiagonalState& state) {
    state.validate();
    const auto& p = state.weights;
    const double n = (p[0] + p[3]) * (p[0] + p[3]) + (p[1] + p[2]) * (p[1] + p[2]);
    BellDiagonalState out{{(p[0] * p[0] + p[3] * p[3]) / n,
                          (p[1] * p[1] + p[2] * p[2]) / n,
                          2.0 * p[1] * p[2] / n,
                          2.0 * p[0] * p[3] / n}};
    return {out, n};
}

BellDiagonalState swap_links(const BellDiagonalState& left,
                             const BellDiagonalState& right, double gate_error,
                             double measurement_efficiency) {
    left.validate();
    right.validate();
    if (!(gate_error >= 0.0 && gate_error <= 1.0))
        throw std::domain_error("gate_error must be in [0, 1]");
    if (!(measurement_efficiency > 0.0 && measurement_efficiency <= 1.0))
        throw std::domain_error("measurement_efficiency must be in (0, 1]");
    // Bell labels index as 2x + z; composition of Pauli frames is XOR.
    BellDiagonalState out{{0.0, 0.0, 0.0, 0.0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out.weights[i ^ j] += left.weights[i] * right.weights[j];
    return depolarize(out, gate_error);
}

PurificationOutcome purification_round(const BellDiagonalState& state,
                                       PurificationProtocol protocol) {
    return protocol == PurificationProtocol::BBPSSW ? bbpssw_round(state)
                                                    : dejmps_round(state);
}

PumpResult pump_to_schedule(const BellDiagonalState& initial, int rounds,
                            PurificationProtocol protocol) {
    if (rounds < 0) throw std::domain_error("rounds must be >= 0");
    PumpResult result{initial, 1.0};
    double success_product = 1.0;
    for (int r = 0; r < rounds; ++r) {
        if (protocol == PurificationProtocol::DEJMPS) {
            // Local relabeling (bilateral Cliffords permute Bell labels):
            // descending order keeps the dominant weight on Phi+ and the
            // smallest weight on Psi-, whose slot grows linearly under the
            // map. Without it repeated pumping converges to F = 1/2.
            auto& w = result.state.weights;
            std::sort(w.begin(), w.end(), std::greater<double>());
        }
        const auto outcome = purification_round(result.state, protocol);
        result.state = outcome.output_state;
        success_product *= outcome.success_prob;
    }
    result.expected_pairs_consumed =
        std::pow(2.0, rounds) / success_product;
    return result;
}

}  // namespace qrcost
