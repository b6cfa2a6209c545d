#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls the routines it is used to check.

#include "spinmult/coupling.hpp"
#include "spinmult/operators.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

/// CG coefficients of j1 x j2 built by the lowering-operator method in
/// floating point: stretched top state, J- ladder, Gram-Schmidt for lower J
/// with the Condon-Shortley phase (<j1 j1; j2 J-j1|J J> > 0).
/// Result: (two_J, two_M, two_m1) -> coefficient.
inline std::map<std::tuple<int, int, int>, double> ladder_cg(int tj1, int tj2) {
    const int d1 = tj1 + 1, d2 = tj2 + 1, dim = d1 * d2;
    auto index = [&](int tm1, int tm2) { return ((tj1 - tm1) / 2) * d2 + (tj2 - tm2) / 2; };
    auto lower_coeff = [](int tj, int tm) {  // <m-1| J- |m>
        double j = 0.5 * tj, m = 0.5 * tm;
        return std::sqrt(j * (j + 1) - m * (m - 1));
    };
    auto lower = [&](const Eigen::VectorXd& v) {
        Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
        for (int tm1 = tj1; tm1 >= -tj1; tm1 -= 2)
            for (int tm2 = tj2; tm2 >= -tj2; tm2 -= 2) {
                double a = v[index(tm1, tm2)];
                if (a == 0.0) continue;
                if (tm1 > -tj1) out[index(tm1 - 2, tm2)] += a * lower_coeff(tj1, tm1);
                if (tm2 > -tj2) out[index(tm1, tm2 - 2)] += a * lower_coeff(tj2, tm2);
            }
        return out;
    };

    std::map<std::pair<int, int>, Eigen::VectorXd> states;  // (two_J, two_M)
    for (int tJ = tj1 + tj2; tJ >= std::abs(tj1 - tj2); tJ -= 2) {
        // Top state: vector in the M=J sector orthogonal to all higher J.
        Eigen::VectorXd top = Eigen::VectorXd::Zero(dim);
        bool found = false;
        for (int tm1 = tj1; tm1 >= -tj1 && !found; tm1 -= 2) {
            int tm2 = tJ - tm1;
            if (std::abs(tm2) > tj2) continue;
            Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
            v[index(tm1, tm2)] = 1.0;
            for (const auto& [key, s] : states)
                if (key.second == tJ) v -= s.dot(v) * s;
            if (v.norm() > 1e-8) {
                top = v.normalized();
                found = true;
            }
        }
        if (!found) throw std::logic_error("ladder_cg: no top state");
        // Condon-Shortley: coefficient with m1 = j1 positive.
        int tm2_top = tJ - tj1;
        if (std::abs(tm2_top) <= tj2 && top[index(tj1, tm2_top)] < 0) top = -top;
        Eigen::VectorXd cur = top;
        for (int tM = tJ; tM >= -tJ; tM -= 2) {
            states[{tJ, tM}] = cur;
            if (tM > -tJ) cur = lower(cur) / lower_coeff(tJ, tM);
        }
    }
    std::map<std::tuple<int, int, int>, double> out;
    for (const auto& [key, v] : states)
        for (int tm1 = tj1; tm1 >= -tj1; tm1 -= 2) {
            int tm2 = key.second - tm1;
            if (std::abs(tm2) > tj2) continue;
            out[{key.first, key.second, tm1}] = v[index(tm1, tm2)];
        }
    return out;
}

/// Eigenvector of a generic linear combination of the commuting set whose
/// eigenvalue matches the label's. Dense diagonalization, n <= 4.
inline Eigen::VectorXd diagonalized_state(const std::vector<spinmult::CommutingOperator>& ops,
                                          const spinmult::CoupledLabel& label) {
    const Eigen::Index dim = ops.front().op.matrix().rows();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    double target = 0.0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const double w = std::sqrt(2.0 + static_cast<double>(i)) + 0.1 * std::pow(1.7, static_cast<double>(i));
        Eigen::MatrixXcd dense = Eigen::MatrixXcd(ops[i].op.matrix());
        if (dense.imag().cwiseAbs().maxCoeff() > 1e-14) throw std::logic_error("commuting set not real");
        h += w * dense.real();
        target += w * ops[i].eigenvalue(label);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    Eigen::Index best = 0;
    for (Eigen::Index k = 0; k < dim; ++k)
        if (std::abs(es.eigenvalues()[k] - target) < std::abs(es.eigenvalues()[best] - target)) best = k;
    // Require the eigenvalue to be isolated so the eigenvector is unique.
    for (Eigen::Index k = 0; k < dim; ++k)
        if (k != best && std::abs(es.eigenvalues()[k] - es.eigenvalues()[best]) < 1e-6)
            throw std::logic_error("diagonalized_state: degenerate combination");
    return es.eigenvectors().col(best);
}

/// Cayley hyperdeterminant form of the three-tangle, amplitudes a[ijk] in
/// computational order (index bits i j k for particles 1 2 3).
inline double hyperdeterminant_tangle(const std::array<Complex, 8>& a) {
    auto A = [&](int i, int j, int k) { return a[static_cast<std::size_t>(4 * i + 2 * j + k)]; };
    Complex d1 = A(0, 0, 0) * A(0, 0, 0) * A(1, 1, 1) * A(1, 1, 1) + A(0, 0, 1) * A(0, 0, 1) * A(1, 1, 0) * A(1, 1, 0) +
                 A(0, 1, 0) * A(0, 1, 0) * A(1, 0, 1) * A(1, 0, 1) + A(1, 0, 0) * A(1, 0, 0) * A(0, 1, 1) * A(0, 1, 1);
    Complex d2 = A(0, 0, 0) * A(1, 1, 1) * A(0, 1, 1) * A(1, 0, 0) + A(0, 0, 0) * A(1, 1, 1) * A(1, 0, 1) * A(0, 1, 0) +
                 A(0, 0, 0) * A(1, 1, 1) * A(1, 1, 0) * A(0, 0, 1) + A(0, 1, 1) * A(1, 0, 0) * A(1, 0, 1) * A(0, 1, 0) +
                 A(0, 1, 1) * A(1, 0, 0) * A(1, 1, 0) * A(0, 0, 1) + A(1, 0, 1) * A(0, 1, 0) * A(1, 1, 0) * A(0, 0, 1);
    Complex d3 = A(0, 0, 0) * A(1, 1, 0) * A(1, 0, 1) * A(0, 1, 1) + A(1, 1, 1) * A(0, 0, 1) * A(0, 1, 0) * A(1, 0, 0);
    return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

/// 2|ad - bc| for a pure two-qubit state.
inline double pure_concurrence(Complex a, Complex b, Complex c, Complex d) { return 2.0 * std::abs(a * d - b * c); }

/// Haar-ish random 2x2 unitary.
inline Eigen::Matrix2cd random_unitary(std::mt19937& rng) {
    std::normal_distribution<double> g;
    Eigen::Matrix2cd m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = Complex(g(rng), g(rng));
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(m);
    return qr.householderQ();
}

}  // namespace oracle
