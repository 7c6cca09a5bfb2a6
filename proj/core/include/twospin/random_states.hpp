// random_states.hpp: seeded generators for property checks

#pragma once

#include <random>

#include <Eigen/Dense>

#include "twospin/qmath.hpp"

namespace twospin::random {

using Engine = std::mt19937_64;

inline Eigen::Vector4cd gaussian_vector(Engine& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::Vector4cd v;
    for (int i = 0; i < 4; ++i) v(i) = cplx(n(rng), n(rng));
    return v;
}

// Haar-random pure state.
inline QubitAmplitudes pure_state(Engine& rng) { return QubitAmplitudes::from_vector(gaussian_vector(rng).normalized()); }

// Random state in span{|01>, |10>}.
inline QubitAmplitudes dfs_state(Engine& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::Vector2cd v(cplx(n(rng), n(rng)), cplx(n(rng), n(rng)));
    v.normalize();
    return {0.0, v(0), v(1), 0.0};
}

// Haar-random 2x2 unitary (QR of a Ginibre matrix with phase fix).
inline Eigen::Matrix2cd unitary2(Engine& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::Matrix2cd g;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g(i, j) = cplx(n(rng), n(rng));
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
    Eigen::Matrix2cd q = qr.householderQ();
    const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < 2; ++j) q.col(j) *= std::polar(1.0, std::arg(r(j, j)));
    return q;
}

inline Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

inline Eigen::Matrix4cd local_unitary(Engine& rng) {
    const Eigen::Matrix2cd u1 = unitary2(rng);
    return kron(u1, unitary2(rng));
}

// Ginibre ensemble of the given rank (1..4), trace 1.
inline DensityMatrix4 mixed_state(Engine& rng, int rank = 4) {
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::Matrix<cplx, 4, Eigen::Dynamic> g(4, rank);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < rank; ++j) g(i, j) = cplx(n(rng), n(rng));
    Eigen::Matrix4cd m = g * g.adjoint();
    m = 0.5 * (m + m.adjoint().eval());
    return DensityMatrix4(m / m.trace().real());
}

inline DensityMatrix4 conjugate(const DensityMatrix4& rho, const Eigen::Matrix4cd& u) {
    Eigen::Matrix4cd m = u * rho.matrix() * u.adjoint();
    return DensityMatrix4(0.5 * (m + m.adjoint().eval()));
}

}  // namespace twospin::random
