#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qrcost/bell_state.hpp"
#include "qrcost/protocols.hpp"

namespace qrcost {

// Density operator of two entangled pairs on qubits (A0, A1, B0, B1);
// pair 0 lives on (A0, B0), pair 1 on (A1, B1). Ground-truth side of the
// purification maps: the circuit is executed by exact matrix algebra.
struct TwoPairState {
    Eigen::Matrix<std::complex<double>, 16, 16> rho;

    void validate() const;

    static TwoPairState product(const BellDiagonalState& pair0,
                                const BellDiagonalState& pair1);
};

// Executes the purification circuit literally: local pre-rotations (DEJMPS
// only), bilateral CNOT, Z measurement of the target pair with acceptance
// on equal outcomes, renormalization, and the protocol's closing local
// rotation/twirl. gate_error is applied as a depolarizing twirl on the
// kept pair, matching the closed-form noise convention.
PurificationOutcome oracle_circuit(const TwoPairState& input,
                                   PurificationProtocol protocol,
                                   double gate_error = 0.0);

// Bell-basis weights of a two-qubit density operator (qubit order A, B).
std::array<double, 4> bell_weights(const Eigen::Matrix4cd& rho);

// Two-pair swap executed by matrix algebra: Bell measurement of the middle
// qubits with Pauli correction, averaged over outcomes.
BellDiagonalState oracle_swap(const BellDiagonalState& left,
                              const BellDiagonalState& right);

}  // namespace qrcost
