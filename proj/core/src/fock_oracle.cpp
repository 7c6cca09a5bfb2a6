#include "twospin/fock_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "twospin/parallel.hpp"

namespace twospin {

namespace {

std::string leak_message(double leak, int n_cut, double leak_tol) {
    std::ostringstream os;
    os << "Fock truncation breached: top-level population " << leak << " exceeds " << leak_tol << " at n_cut = "
       << n_cut << "; increase n_cut";
    return os.str();
}

}  // namespace

void FockConfig::validate() const {
    if (n_cut < 8) throw std::invalid_argument("FockConfig: n_cut must be >= 8");
    if (!(leak_tol > 0.0 && leak_tol < 1.0)) throw std::invalid_argument("FockConfig: leak_tol must lie in (0, 1)");
}

TruncationError::TruncationError(double leak, int n_cut, double leak_tol)
    : std::runtime_error(leak_message(leak, n_cut, leak_tol)), leak_(leak), n_cut_(n_cut) {}

Eigen::VectorXcd evolve_block(double omega, double coupling, double t, int n_cut) {
    const Eigen::Index dim = n_cut + 1;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index n = 0; n < dim; ++n) {
        h(n, n) = omega * static_cast<double>(n);
        if (n + 1 < dim) {
            const double offdiag = coupling * std::sqrt(static_cast<double>(n + 1));
            h(n, n + 1) = offdiag;
            h(n + 1, n) = offdiag;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    const Eigen::MatrixXd& v = es.eigenvectors();
    // Components of |0> in the eigenbasis are the first row of V.
    Eigen::VectorXcd weights(dim);
    for (Eigen::Index k = 0; k < dim; ++k) weights(k) = v(0, k) * std::exp(cplx(0.0, -es.eigenvalues()(k) * t));
    return v.cast<cplx>() * weights;
}

OracleResult evolve_truncated(const SingleModeParams& params, const QubitAmplitudes& psi0, double t,
                              const FockConfig& cfg) {
    cfg.validate();
    if (!(t >= 0.0)) throw std::invalid_argument("evolve_truncated: t must be >= 0");
    if (!psi0.normalized()) throw std::invalid_argument("evolve_truncated: initial amplitudes not normalized");

    // sigma_1z + sigma_2z takes the values +2, 0, 0, -2 on |00>, |01>, |10>, |11>;
    // blocks with equal collective spin share one environment state.
    std::array<Eigen::VectorXcd, 3> distinct;  // s = +2, 0, -2
    parallel_for(3, [&](std::size_t k) {
        const double s = 2.0 - 2.0 * static_cast<double>(k);
        distinct[k] = evolve_block(params.omega(), s * params.lambda(), t, cfg.n_cut);
    });
    const std::array<const Eigen::VectorXcd*, 4> env{&distinct[0], &distinct[1], &distinct[1], &distinct[2]};

    OracleResult out;
    out.n_cut = cfg.n_cut;
    for (const auto& e : distinct) {
        const double top = std::norm(e(cfg.n_cut)) + std::norm(e(cfg.n_cut - 1));
        out.leak = std::max(out.leak, top);
    }
    if (out.leak > cfg.leak_tol) throw TruncationError(out.leak, cfg.n_cut, cfg.leak_tol);

    const Eigen::Vector4cd amp = psi0.vector();
    Eigen::Matrix4cd rho;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rho(i, j) = amp(i) * std::conj(amp(j)) * env[j]->dot(*env[i]);
    out.rho = DensityMatrix4(rho);
    out.norm = rho.trace().real();
    return out;
}

int initial_n_cut(const SingleModeParams& params) {
    return std::max(8, static_cast<int>(std::ceil(8.0 * params.displacement_squared() + 16.0)));
}

OracleResult evolve_auto(const SingleModeParams& params, const QubitAmplitudes& psi0, double t, double leak_tol,
                         int max_n_cut) {
    FockConfig cfg{initial_n_cut(params), leak_tol};
    for (;;) {
        try {
            return evolve_truncated(params, psi0, t, cfg);
        } catch (const TruncationError&) {
            if (cfg.n_cut * 2 > max_n_cut) throw;
            cfg.n_cut *= 2;
        }
    }
}

double trace_distance(const DensityMatrix4& rho1, const DensityMatrix4& rho2) {
    require_valid(rho1);
    require_valid(rho2);
    const Eigen::Matrix4cd diff = rho1.matrix() - rho2.matrix();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(0.5 * (diff + diff.adjoint()), Eigen::EigenvaluesOnly);
    return std::min(1.0, 0.5 * es.eigenvalues().cwiseAbs().sum());
}

std::vector<OracleCheck> oracle_equivalence_suite(double tolerance) {
    const std::array<double, 5> ratios{1.0, 4.0, 4.0 * std::numbers::sqrt2, 4.0 * std::sqrt(3.0), 20.0};
    const std::array<double, 4> phases{0.1, std::numbers::pi / 8.0, std::numbers::pi / 4.0, 1.0};
    std::vector<OracleCheck> checks(ratios.size() * phases.size());
    parallel_for(checks.size(), [&](std::size_t idx) {
        const auto params = SingleModeParams::from_ratio(ratios[idx / phases.size()]);
        const double theta_t = phases[idx % phases.size()];
        const double t = theta_t / params.theta();
        const auto psi0 = QubitAmplitudes::uniform();
        const OracleResult brute = evolve_auto(params, psi0, t);
        const DensityMatrix4 closed = reduced_density(psi0, theta_t, gamma_single_mode(params, t));
        OracleCheck& c = checks[idx];
        c.omega_over_lambda = params.omega();
        c.theta_t = theta_t;
        c.distance = trace_distance(brute.rho, closed);
        c.n_cut = brute.n_cut;
        c.passed = c.distance < tolerance;
    });
    return checks;
}

}  // namespace twospin
