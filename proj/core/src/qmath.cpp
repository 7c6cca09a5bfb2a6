#include "twospin/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace twospin {

namespace {

Eigen::Matrix4cd hermitian_part(const Eigen::Matrix4cd& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

std::string ValidityReport::describe() const {
    std::ostringstream os;
    os << (valid ? "valid" : "invalid") << " density matrix (hermiticity defect " << hermiticity_defect
       << ", trace defect " << trace_defect << ", min eigenvalue " << min_eigenvalue << ")";
    return os.str();
}

InvalidDensityError::InvalidDensityError(const ValidityReport& report)
    : std::invalid_argument(report.describe()), report_(report) {}

const Eigen::Matrix4cd& sigma_yy() {
    static const Eigen::Matrix4cd yy = [] {
        Eigen::Matrix2cd sy;
        sy << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
        Eigen::Matrix4cd out;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = sy(i, j) * sy(k, l);
        return out;
    }();
    return yy;
}

Eigen::Vector4d density_eigenvalues(const DensityMatrix4& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(hermitian_part(rho.matrix()), Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

ValidityReport validate_density(const DensityMatrix4& rho) {
    const Eigen::Matrix4cd& m = rho.matrix();
    ValidityReport r;
    r.hermiticity_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
    r.trace_defect = std::abs(m.trace() - cplx(1.0, 0.0));
    r.min_eigenvalue = density_eigenvalues(rho).minCoeff();
    const bool finite = m.allFinite();
    r.valid = finite && r.hermiticity_defect <= tol::hermiticity && r.trace_defect <= tol::trace &&
              r.min_eigenvalue >= tol::min_eigenvalue;
    return r;
}

void require_valid(const DensityMatrix4& rho) {
    auto report = validate_density(rho);
    if (!report.valid) throw InvalidDensityError(report);
}

std::array<double, 4> wootters_values(const DensityMatrix4& rho) {
    require_valid(rho);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(hermitian_part(rho.matrix()));
    const Eigen::Vector4d p = es.eigenvalues().cwiseMax(0.0);
    const Eigen::Matrix4cd factor = es.eigenvectors() * p.cwiseSqrt().asDiagonal();
    const Eigen::Matrix4cd tau = factor.transpose() * sigma_yy() * factor;
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(tau);
    const Eigen::Vector4d s = svd.singularValues();  // already descending
    return {s(0), s(1), s(2), s(3)};
}

double concurrence(const DensityMatrix4& rho) {
    const auto r = wootters_values(rho);
    return std::clamp(r[0] - r[1] - r[2] - r[3], 0.0, 1.0);
}

double pure_concurrence(const QubitAmplitudes& psi) {
    if (!psi.normalized(tol::pure_concurrence_norm)) {
        std::ostringstream os;
        os << "pure_concurrence: amplitudes not normalized (|norm^2 - 1| = " << psi.norm_defect() << ")";
        throw std::invalid_argument(os.str());
    }
    return std::min(1.0, 2.0 * std::abs(psi.a * psi.d - psi.b * psi.c));
}

double von_neumann_entropy(const DensityMatrix4& rho) {
    require_valid(rho);
    double s = 0.0;
    for (double p : density_eigenvalues(rho)) {
        if (p < tol::entropy_clamp) continue;
        s -= p * std::log2(p);
    }
    return std::clamp(s, 0.0, 2.0);
}

double purity(const DensityMatrix4& rho) { return (rho.matrix() * rho.matrix()).trace().real(); }

}  // namespace twospin
