// Independent reference computations used only by the tests.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;

// Wootters via the non-Hermitian product rho * (sy sy) rho* (sy sy).
inline double concurrence(const Eigen::Matrix4cd& rho) {
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Eigen::Matrix4cd tilde = yy * rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(rho * tilde);
    std::vector<double> r;
    for (int i = 0; i < 4; ++i) r.push_back(std::sqrt(std::abs(es.eigenvalues()(i).real())));
    std::sort(r.rbegin(), r.rend());
    return std::max(0.0, r[0] - r[1] - r[2] - r[3]);
}

inline double entropy_bits(const std::vector<double>& p) {
    double s = 0.0;
    for (double x : p)
        if (x > 0.0) s -= x * std::log2(x);
    return s;
}

inline double trapezoid(const std::function<double(double)>& f, double a, double b, long n) {
    const double h = (b - a) / static_cast<double>(n);
    double s = 0.5 * (f(a) + f(b));
    for (long k = 1; k < n; ++k) s += f(a + h * static_cast<double>(k));
    return s * h;
}

inline Eigen::Matrix4cd werner(double p) {
    Eigen::Vector4cd phi(1.0, 0.0, 0.0, 1.0);
    phi /= std::sqrt(2.0);
    return p * phi * phi.adjoint() + (1.0 - p) * Eigen::Matrix4cd::Identity() / 4.0;
}

}  // namespace oracle
