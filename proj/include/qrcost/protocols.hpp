#pragma once

#include <vector>

#include "qrcost/bell_state.hpp"

namespace qrcost {

enum class PurificationProtocol { BBPSSW, DEJMPS };

struct PurificationOutcome {
    BellDiagonalState output_state;
    double success_prob = 1.0;
};

// Purification rounds per nesting level; entry k applies at level k.
struct PurificationSchedule {
    std::vector<int> rounds_per_level;

    int total_rounds() const;
    void validate(int nesting_level) const;
};

// One BBPSSW round. The input is twirled to Werner form at its current
// fidelity; output is the Werner state at the purified fidelity.
PurificationOutcome bbpssw_round(const BellDiagonalState& state);

// One DEJMPS round on a Bell-diagonal state (p1, p2, p3, p4), p1 largest:
//   out = ((p1^2+p4^2)/N, (p2^2+p3^2)/N, 2 p2 p3/N, 2 p1 p4/N),
//   N = (p1+p4)^2 + (p2+p3)^2 = success probability.
PurificationOutcome dejmps_round(const BellDiagonalState& state);

// Entanglement swap via Bell-state measurement at the shared node. Ideal
// output composes weights under the XOR group law of Bell labels; gate
// imperfection is applied as a depolarizing twirl with q = gate_error.
// The BSM on memory qubits is deterministic; measurement_efficiency is
// carried for rate bookkeeping only.
BellDiagonalState swap_links(const BellDiagonalState& left,
                             const BellDiagonalState& right,
                             double gate_error,
                             double measurement_efficiency = 1.0);

// Symmetric pumping: applies `rounds` purification rounds, each consuming
// two copies of the current state. expected_pairs_consumed follows the
// deterministic-tree accounting 2^rounds / prod(success probs).
struct PumpResult {
    BellDiagonalState state;
    double expected_pairs_consumed = 1.0;
};
PumpResult pump_to_schedule(const BellDiagonalState& initial, int rounds,
                            PurificationProtocol protocol);

PurificationOutcome purification_round(const BellDiagonalState& state,
                                       PurificationProtocol protocol);

}  // namespace qrcost
