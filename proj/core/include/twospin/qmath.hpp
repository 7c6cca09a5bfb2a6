// qmath.hpp: two-qubit state algebra: density-matrix validity, concurrence, entropy

#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace twospin {

using cplx = std::complex<double>;

namespace tol {
inline constexpr double hermiticity = 1e-12;
inline constexpr double trace = 1e-12;
inline constexpr double min_eigenvalue = -1e-10;
inline constexpr double amplitude_norm = 1e-12;
// pure_concurrence is more lenient than the type invariant.
inline constexpr double pure_concurrence_norm = 1e-9;
inline constexpr double entropy_clamp = 1e-14;
}  // namespace tol

// Pure two-qubit state a|00> + b|01> + c|10> + d|11>.
struct QubitAmplitudes {
    cplx a{1.0, 0.0};
    cplx b{};
    cplx c{};
    cplx d{};

    static QubitAmplitudes uniform() { return {0.5, 0.5, 0.5, 0.5}; }
    static QubitAmplitudes from_vector(const Eigen::Vector4cd& v) { return {v(0), v(1), v(2), v(3)}; }

    Eigen::Vector4cd vector() const { return {a, b, c, d}; }
    double squared_norm() const { return std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d); }
    double norm_defect() const { return std::abs(squared_norm() - 1.0); }
    bool normalized(double tolerance = tol::amplitude_norm) const { return norm_defect() <= tolerance; }
};

// 4x4 complex matrix in the ordered basis {|00>, |01>, |10>, |11>}.
// Construction never validates; use validate_density() or let the
// consuming operation reject it.
class DensityMatrix4 {
public:
    DensityMatrix4() : m_(Eigen::Matrix4cd::Zero()) {}
    explicit DensityMatrix4(const Eigen::Matrix4cd& m) : m_(m) {}

    static DensityMatrix4 pure(const Eigen::Vector4cd& psi) { return DensityMatrix4(psi * psi.adjoint()); }
    static DensityMatrix4 pure(const QubitAmplitudes& psi) { return pure(psi.vector()); }
    static DensityMatrix4 maximally_mixed() { return DensityMatrix4(Eigen::Matrix4cd::Identity() / 4.0); }

    const Eigen::Matrix4cd& matrix() const { return m_; }
    cplx operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

private:
    Eigen::Matrix4cd m_;
};

struct ValidityReport {
    double hermiticity_defect = 0.0;  // max |rho_ij - conj(rho_ji)|
    double trace_defect = 0.0;        // |tr rho - 1|
    double min_eigenvalue = 0.0;      // of the Hermitian part
    bool valid = false;

    std::string describe() const;
};

class InvalidDensityError : public std::invalid_argument {
public:
    explicit InvalidDensityError(const ValidityReport& report);
    const ValidityReport& report() const noexcept { return report_; }

private:
    ValidityReport report_;
};

ValidityReport validate_density(const DensityMatrix4& rho);

// Throws InvalidDensityError unless validate_density(rho).valid.
void require_valid(const DensityMatrix4& rho);

// Wootters concurrence max{r1 - r2 - r3 - r4, 0}.
double concurrence(const DensityMatrix4& rho);

// The Wootters values r_i in descending order; r_i^2 are the eigenvalues of
// rho (sy x sy) rho* (sy x sy). Computed as the singular values of the
// symmetric matrix A^T (sy x sy) A with rho = A A^dagger.
std::array<double, 4> wootters_values(const DensityMatrix4& rho);

// 2|ad - bc|. Rejects amplitudes whose squared norm is off by more than 1e-9.
double pure_concurrence(const QubitAmplitudes& psi);

// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityMatrix4& rho);

double purity(const DensityMatrix4& rho);

// Eigenvalues of the Hermitian part, ascending.
Eigen::Vector4d density_eigenvalues(const DensityMatrix4& rho);

// sigma_y x sigma_y in the computational basis (a real matrix).
const Eigen::Matrix4cd& sigma_yy();

}  // namespace twospin
