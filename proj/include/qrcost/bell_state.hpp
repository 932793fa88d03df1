#pragma once

#include <array>

namespace qrcost {

// Two-qubit state diagonal in the Bell basis, ordered
// (Phi+, Phi-, Psi+, Psi-). Fidelity is the Phi+ weight.
struct BellDiagonalState {
    std::array<double, 4> weights{1.0, 0.0, 0.0, 0.0};

    double fidelity() const { return weights[0]; }
    void validate(double tol = 1e-12) const;

    static BellDiagonalState perfect() { return {}; }
};

// Werner state: (F, (1-F)/3, (1-F)/3, (1-F)/3), F in [0.25, 1].
BellDiagonalState werner_state(double fidelity);

// Bell-twirled depolarization: (1-q) w + q (1/4, 1/4, 1/4, 1/4).
BellDiagonalState depolarize(const BellDiagonalState& state, double error_prob);

// Asymptotic one-way BB84 key fraction: max(0, 1 - h(eZ) - h(eX)) with
// eZ = p_Psi+ + p_Psi-, eX = p_Phi- + p_Psi-. Zero if either rate >= 1/2.
double secret_fraction(const BellDiagonalState& state);

double binary_entropy(double p);

}  // namespace qrcost
