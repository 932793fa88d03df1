#include "qrcost/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace qrcost {

namespace {

using cd = std::complex<double>;
using Mat16 = Eigen::Matrix<cd, 16, 16>;
using Vec16 = Eigen::Matrix<cd, 16, 1>;

const cd kI{0.0, 1.0};

Eigen::Matrix2cd pauli(int label) {
    Eigen::Matrix2cd m;
    switch (label) {
        case 0: m << 1, 0, 0, 1; break;             // I
        case 1: m << 1, 0, 0, -1; break;            // Z
        case 2: m << 0, 1, 1, 0; break;             // X
        default: m << 0, -kI, kI, 0; break;         // Y
    }
    return m;
}

// Bell vector for label 2x + z on qubit pair (A, B), A the high bit.
Eigen::Vector4cd bell_vector(int label) {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    switch (label) {
        case 0: v(0) = s; v(3) = s; break;          // Phi+
        case 1: v(0) = s; v(3) = -s; break;         // Phi-
        case 2: v(1) = s; v(2) = s; break;          // Psi+
        default: v(1) = s; v(2) = -s; break;        // Psi-
    }
    return v;
}

// Embeds a single-qubit operator on qubit k of 4 (qubit 0 = high bit).
Mat16 one_qubit_op(const Eigen::Matrix2cd& u, int k) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = 3; q >= 0; --q) {
        const Eigen::MatrixXcd& f =
            (q == k) ? static_cast<const Eigen::MatrixXcd&>(u.eval())
                     : Eigen::MatrixXcd::Identity(2, 2).eval();
        Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
        next.setZero();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                next.block(i * m.rows(), j * m.cols(), m.rows(), m.cols()) =
                    f(i, j) * m;
        m = next;
    }
    return m;
}

// CNOT with control qubit c, target qubit t (of 4).
Mat16 cnot_op(int c, int t) {
    Mat16 m = Mat16::Zero();
    for (int b = 0; b < 16; ++b) {
        const int cbit = (b >> (3 - c)) & 1;
        const int out = cbit ? b ^ (1 << (3 - t)) : b;
        m(out, b) = 1.0;
    }
    return m;
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return m;
}

Eigen::Matrix2cd rx(double theta) {
    Eigen::Matrix2cd m;
    m << std::cos(theta / 2), -kI * std::sin(theta / 2),
         -kI * std::sin(theta / 2), std::cos(theta / 2);
    return m;
}

// Partial trace over qubits 1 and 3 (A1, B1), keeping (A0, B0).
Eigen::Matrix4cd trace_out_targets(const Mat16& rho) {
    Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
    for (int a0 = 0; a0 < 2; ++a0)
        for (int b0 = 0; b0 < 2; ++b0)
            for (int a0p = 0; a0p < 2; ++a0p)
                for (int b0p = 0; b0p < 2; ++b0p)
                    for (int a1 = 0; a1 < 2; ++a1)
                        for (int b1 = 0; b1 < 2; ++b1) {
                            const int row = a0 * 8 + a1 * 4 + b0 * 2 + b1;
                            const int col = a0p * 8 + a1 * 4 + b0p * 2 + b1;
                            out(a0 * 2 + b0, a0p * 2 + b0p) += rho(row, col);
                        }
    return out;
}

}  // namespace

void TwoPairState::validate() const {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::domain_error("two-pair state is not Hermitian");
    if (std::abs(rho.trace() - cd{1.0, 0.0}) > 1e-12)
        throw std::domain_error("two-pair state trace is not 1");
    Eigen::SelfAdjointEigenSolver<Mat16> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw std::domain_error("two-pair state is not positive semidefinite");
}

TwoPairState TwoPairState::product(const BellDiagonalState& pair0,
                                   const BellDiagonalState& pair1) {
    pair0.validate();
    pair1.validate();
    TwoPairState s;
    s.rho.setZero();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double w = pair0.weights[i] * pair1.weights[j];
            if (w == 0.0) continue;
            const Eigen::Vector4cd bi = bell_vector(i);
            const Eigen::Vector4cd bj = bell_vector(j);
            Vec16 psi;
            // basis index a0 a1 b0 b1; pair0 = (A0, B0), pair1 = (A1, B1)
            for (int a0 = 0; a0 < 2; ++a0)
                for (int a1 = 0; a1 < 2; ++a1)
                    for (int b0 = 0; b0 < 2; ++b0)
                        for (int b1 = 0; b1 < 2; ++b1)
                            psi(a0 * 8 + a1 * 4 + b0 * 2 + b1) =
                                bi(a0 * 2 + b0) * bj(a1 * 2 + b1);
            s.rho += w * (psi * psi.adjoint());
        }
    }
    return s;
}

std::array<double, 4> bell_weights(const Eigen::Matrix4cd& rho) {
    std::array<double, 4> w{};
    for (int k = 0; k < 4; ++k) {
        const Eigen::Vector4cd b = bell_vector(k);
        w[k] = (b.adjoint() * rho * b).value().real();
    }
    return w;
}

PurificationOutcome oracle_circuit(const TwoPairState& input,
                                   PurificationProtocol protocol,
                                   double gate_error) {
    input.validate();
    Mat16 rho = input.rho;

    if (protocol == PurificationProtocol::DEJMPS) {
        // Rx(pi/2) on Alice's qubits, Rx(-pi/2) on Bob's.
        const Mat16 pre = one_qubit_op(rx(M_PI / 2), 0) *
                          one_qubit_op(rx(M_PI / 2), 1) *
                          one_qubit_op(rx(-M_PI / 2), 2) *
                          one_qubit_op(rx(-M_PI / 2), 3);
        rho = pre * rho * pre.adjoint();
    }

    const Mat16 bcnot = cnot_op(0, 1) * cnot_op(2, 3);
    rho = bcnot * rho * bcnot.adjoint();

    // Project targets (A1, B1) onto equal Z outcomes.
    Mat16 kept = Mat16::Zero();
    for (int outcome = 0; outcome < 2; ++outcome) {
        Eigen::Matrix2cd proj = Eigen::Matrix2cd::Zero();
        proj(outcome, outcome) = 1.0;
        const Mat16 p = one_qubit_op(proj, 1) * one_qubit_op(proj, 3);
        kept += p * rho * p.adjoint();
    }
    const double success = kept.trace().real();
    if (success <= 0.0)
        throw std::domain_error("purification acceptance probability is zero");

    Eigen::Matrix4cd pair = trace_out_targets(kept) / success;

    if (protocol == PurificationProtocol::DEJMPS) {
        // Closing relabeling rotation: S*H on Alice, conjugate on Bob.
        Eigen::Matrix2cd h, s;
        h << 1, 1, 1, -1;
        h /= std::sqrt(2.0);
        s << 1, 0, 0, kI;
        const Eigen::Matrix2cd ua = s * h;
        const Eigen::Matrix4cd post = kron2(ua, ua.conjugate());
        pair = post * pair * post.adjoint();
    }

    std::array<double, 4> w = bell_weights(pair);
    BellDiagonalState out{w};
    if (protocol == PurificationProtocol::BBPSSW) {
        // BBPSSW closes with a Werner twirl of the kept pair.
        const double rest = (1.0 - w[0]) / 3.0;
        out.weights = {w[0], rest, rest, rest};
    }
    out = depolarize(out, gate_error);
    return {out, success};
}

BellDiagonalState oracle_swap(const BellDiagonalState& left,
                              const BellDiagonalState& right) {
    left.validate();
    right.validate();
    // Qubits: A, B1, B2, C; pairs (A, B1) and (B2, C). Bell measurement on
    // (B1, B2), Pauli correction on C per outcome, branches summed.
    Mat16 rho = Mat16::Zero();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const double w = left.weights[i] * right.weights[j];
            if (w == 0.0) continue;
            const Eigen::Vector4cd bi = bell_vector(i);
            const Eigen::Vector4cd bj = bell_vector(j);
            Vec16 psi;
            for (int a = 0; a < 2; ++a)
                for (int b1 = 0; b1 < 2; ++b1)
                    for (int b2 = 0; b2 < 2; ++b2)
                        for (int c = 0; c < 2; ++c)
                            psi(a * 8 + b1 * 4 + b2 * 2 + c) =
                                bi(a * 2 + b1) * bj(b2 * 2 + c);
            rho += w * (psi * psi.adjoint());
        }
    }

    Eigen::Matrix4cd result = Eigen::Matrix4cd::Zero();
    for (int k = 0; k < 4; ++k) {
        const Eigen::Vector4cd bk = bell_vector(k);
        // Projector |B_k><B_k| on qubits (B1, B2) = qubits 1, 2.
        Mat16 proj = Mat16::Zero();
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) {
                const cd amp = bk(m) * std::conj(bk(n));
                if (amp == cd{0.0, 0.0}) continue;
                for (int a = 0; a < 2; ++a)
                    for (int c = 0; c < 2; ++c) {
                        const int row = a * 8 + (m >> 1) * 4 + (m & 1) * 2 + c;
                        const int col = a * 8 + (n >> 1) * 4 + (n & 1) * 2 + c;
                        proj(row, col) += amp;
                    }
            }
        const Mat16 branch = proj * rho * proj.adjoint();
        // Reduce to (A, C): trace qubits 1 and 2.
        Eigen::Matrix4cd red = Eigen::Matrix4cd::Zero();
        for (int a = 0; a < 2; ++a)
            for (int c = 0; c < 2; ++c)
                for (int ap = 0; ap < 2; ++ap)
                    for (int cp = 0; cp < 2; ++cp)
                        for (int b1 = 0; b1 < 2; ++b1)
                            for (int b2 = 0; b2 < 2; ++b2)
                                red(a * 2 + c, ap * 2 + cp) +=
                                    branch(a * 8 + b1 * 4 + b2 * 2 + c,
                                           ap * 8 + b1 * 4 + b2 * 2 + cp);
        const Eigen::Matrix2cd corr = pauli(k);
        const Eigen::Matrix4cd fix = kron2(Eigen::Matrix2cd::Identity(), corr);
        result += fix * red * fix.adjoint();
    }
    return BellDiagonalState{bell_weights(result)};
}

}  // namespace qrcost
