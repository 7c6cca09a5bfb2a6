#include "twospin/single_mode.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "twospin/parallel.hpp"

namespace twospin {

SingleModeParams::SingleModeParams(double omega, double lambda) : omega_(omega), lambda_(lambda) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        std::ostringstream os;
        os << "SingleModeParams: invariant omega > 0 violated (omega = " << omega << ")";
        throw std::invalid_argument(os.str());
    }
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        std::ostringstream os;
        os << "SingleModeParams: invariant lambda >= 0 violated (lambda = " << lambda << ")";
        throw std::invalid_argument(os.str());
    }
}

GammaValue gamma_single_mode(const SingleModeParams& params, double t) {
    const double k = params.displacement_squared();
    const double phase = params.omega() * t;
    const double half = std::sin(0.5 * phase);
    // 1 - cos x = 2 sin^2(x/2) avoids cancellation at small x.
    return {k * 2.0 * half * half, k * std::sin(phase)};
}

cplx coherent_amplitude(const SingleModeParams& params, double t) {
    const double r = 2.0 * params.lambda() / params.omega();
    return r * (std::exp(cplx(0.0, -params.omega() * t)) - 1.0);
}

DensityMatrix4 reduced_density(const QubitAmplitudes& psi0, double theta_t, const GammaValue& gamma) {
    if (!(gamma.gamma_r >= 0.0)) {
        std::ostringstream os;
        os << "reduced_density: gamma_r must be >= 0 (got " << gamma.gamma_r << ")";
        throw std::invalid_argument(os.str());
    }
    if (!psi0.normalized()) {
        std::ostringstream os;
        os << "reduced_density: initial amplitudes not normalized (|norm^2 - 1| = " << psi0.norm_defect() << ")";
        throw std::invalid_argument(os.str());
    }

    const cplx branch_phase = std::exp(cplx(0.0, 2.0 * theta_t - gamma.gamma_i));
    const Eigen::Vector4cd coeff{psi0.a * branch_phase, psi0.b, psi0.c, psi0.d * branch_phase};

    // Gram matrix of the environment states {|alpha>, |0>, |0>, |-alpha>}.
    const double g = std::exp(-gamma.gamma_r);
    const double g4 = std::exp(-4.0 * gamma.gamma_r);
    Eigen::Matrix4d overlap;
    overlap << 1.0, g, g, g4,
               g, 1.0, 1.0, g,
               g, 1.0, 1.0, g,
               g4, g, g, 1.0;

    Eigen::Matrix4cd rho = (coeff * coeff.adjoint()).cwiseProduct(overlap.cast<cplx>());
    return DensityMatrix4(rho);
}

double ideal_concurrence(const QubitAmplitudes& psi0, double theta_t) {
    const cplx phase = std::exp(cplx(0.0, -2.0 * theta_t));
    return pure_concurrence({psi0.a, phase * psi0.b, phase * psi0.c, psi0.d});
}

std::vector<TimePoint> time_series(const SingleModeParams& params, const QubitAmplitudes& psi0,
                                   std::span<const double> t_grid) {
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] >= 0.0)) throw std::invalid_argument("time_series: times must be nonnegative");
        if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
            throw std::invalid_argument("time_series: time grid must be strictly increasing");
    }
    std::vector<TimePoint> out(t_grid.size());
    parallel_for(t_grid.size(), [&](std::size_t i) {
        const double t = t_grid[i];
        const double theta_t = params.theta() * t;
        const GammaValue gamma = gamma_single_mode(params, t);
        const DensityMatrix4 rho = reduced_density(psi0, theta_t, gamma);
        out[i] = {t, theta_t, concurrence(rho), ideal_concurrence(psi0, theta_t), von_neumann_entropy(rho),
                  std::exp(-gamma.gamma_r)};
    });
    return out;
}

PeriodStats period_stats(const SingleModeParams& params, const QubitAmplitudes& psi0, int samples_per_period) {
    if (samples_per_period < kMinSamplesPerPeriod) {
        std::ostringstream os;
        os << "period_stats: samples_per_period must be >= " << kMinSamplesPerPeriod << " (got "
           << samples_per_period << ")";
        throw std::invalid_argument(os.str());
    }
    if (params.lambda() == 0.0) return {0.0, 0.0, 0.0, 0.0, true};

    const auto n = static_cast<std::size_t>(samples_per_period);
    const double step = 0.5 * std::numbers::pi / static_cast<double>(n);
    std::vector<double> conc(n + 1), ent(n + 1);
    parallel_for(n + 1, [&](std::size_t k) {
        const double theta_t = step * static_cast<double>(k);
        const double t = theta_t / params.theta();
        const DensityMatrix4 rho = reduced_density(psi0, theta_t, gamma_single_mode(params, t));
        conc[k] = concurrence(rho);
        ent[k] = von_neumann_entropy(rho);
    });

    auto trapezoid_mean = [n](const std::vector<double>& v) {
        double sum = 0.5 * (v.front() + v.back());
        for (std::size_t k = 1; k < n; ++k) sum += v[k];
        return sum / static_cast<double>(n);
    };
    PeriodStats s;
    s.c_max = *std::max_element(conc.begin(), conc.end() - 1);
    s.s_max = *std::max_element(ent.begin(), ent.end() - 1);
    s.c_avg = trapezoid_mean(conc);
    s.s_avg = trapezoid_mean(ent);
    return s;
}

}  // namespace twospin
