#include "qrcost/bell_state.hpp"

#include <cmath>
#include <stdexcept>

namespace qrcost {

void BellDiagonalState::validate(double tol) const {
    double sum = 0.0;
    for (double w : weights) {
        if (w < -tol || w > 1.0 + tol)
            throw std::domain_error("Bell weight outside [0, 1]");
        sum += w;
    }
    if (std::abs(sum - 1.0) > tol)
        throw std::domain_error("Bell weights must sum to 1");
}

BellDiagonalState werner_state(double fidelity) {
    if (!(fidelity >= 0.25 && fidelity <= 1.0))
        throw std::domain_error("Werner fidelity must be in [0.25, 1]");
    const double w = (1.0 - fidelity) / 3.0;
    return {{fidelity, w, w, w}};
}

BellDiagonalState depolarize(const BellDiagonalState& state, double error_prob) {
    state.validate();
    if (!(error_prob >= 0.0 && error_prob <= 1.0))
        throw std::domain_error("error_prob must be in [0, 1]");
    BellDiagonalState out;
    for (int i = 0; i < 4; ++i)
        out.weights[i] =
            (1.0 - error_prob) * state.weights[i] + error_prob * 0.25;
    return out;
}

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double secret_fraction(const BellDiagonalState& state) {
    state.validate();
    const double ez = state.weights[2] + state.weights[3];
    const double ex = state.weights[1] + state.weights[3];
    if (ez >= 0.5 || ex >= 0.5) return 0.0;
    const double f = 1.0 - binary_entropy(ez) - binary_entropy(ex);
    return f > 0.0 ? f : 0.0;
}

}  // namespace qrcost
