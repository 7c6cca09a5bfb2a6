#include "twospin/bath.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "twospin/parallel.hpp"

namespace twospin {

namespace {

void require_time(double t, const char* who) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        std::ostringstream os;
        os << who << ": t must be finite and >= 0 (got " << t << ")";
        throw std::invalid_argument(os.str());
    }
}

// Panels resolve the oscillation of cos(wt) in the scaled variable u = (w - w0)/wc.
quad::Options oscillatory_options(const OhmicGapSpectrum& spec, double t, double abs_tol) {
    quad::Options opt;
    opt.abs_tol = abs_tol;
    const double scaled_t = spec.omega_c * t;
    opt.max_panel_width = scaled_t > 0.0 ? std::min(0.05, std::numbers::pi / (10.0 * scaled_t)) : 0.05;
    return opt;
}

// J(w)/w^2 at w = w0 + wc u, times the Jacobian wc.
double weight_over_omega_squared(const OhmicGapSpectrum& spec, double u, double& omega) {
    omega = spec.omega0 + spec.omega_c * u;
    return spec.alpha * spec.omega_c * u * std::exp(-u) / (omega * omega) * spec.omega_c;
}

}  // namespace

void OhmicGapSpectrum::validate() const {
    auto fail = [](const char* what, double v) {
        std::ostringstream os;
        os << "OhmicGapSpectrum: invariant " << what << " violated (got " << v << ")";
        throw std::invalid_argument(os.str());
    };
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) fail("alpha >= 0", alpha);
    if (!(omega0 >= 0.0) || !std::isfinite(omega0)) fail("omega0 >= 0", omega0);
    if (!(omega_c > 0.0) || !std::isfinite(omega_c)) fail("omega_c > 0", omega_c);
    if (!(temperature >= 0.0) || !std::isfinite(temperature)) fail("temperature >= 0", temperature);
}

double spectral_density(const OhmicGapSpectrum& spec, double omega) {
    if (omega <= spec.omega0) return 0.0;
    const double x = omega - spec.omega0;
    return spec.alpha * x * std::exp(-x / spec.omega_c);
}

double thermal_factor(double omega, double temperature) {
    if (temperature == 0.0) return 1.0;
    const double y = omega / (2.0 * temperature);
    if (y > 30.0) return 1.0;
    if (y < 1e-8) return 1.0 / y + y / 3.0;
    return 1.0 / std::tanh(y);
}

double effective_coupling(const OhmicGapSpectrum& spec, double abs_tol) {
    spec.validate();
    if (spec.alpha == 0.0) return 0.0;
    quad::Options opt;
    opt.abs_tol = abs_tol;
    auto f = [&](double u) {
        const double omega = spec.omega0 + spec.omega_c * u;
        return 2.0 * spec.alpha * spec.omega_c * u * std::exp(-u) / omega * spec.omega_c;
    };
    return quad::integrate(f, 0.0, kEnvelopeCutoff, opt).value;
}

quad::Result decoherence_real(const OhmicGapSpectrum& spec, double t, double abs_tol) {
    spec.validate();
    require_time(t, "gamma_R");
    if (t == 0.0 || spec.alpha == 0.0) return {};
    auto f = [&](double u) {
        double omega = 0.0;
        const double w = weight_over_omega_squared(spec, u, omega);
        const double s = std::sin(0.5 * omega * t);
        return 4.0 * w * thermal_factor(omega, spec.temperature) * 2.0 * s * s;
    };
    return quad::integrate(f, 0.0, kEnvelopeCutoff, oscillatory_options(spec, t, abs_tol));
}

quad::Result decoherence_imag(const OhmicGapSpectrum& spec, double t, double abs_tol) {
    spec.validate();
    require_time(t, "gamma_I");
    if (t == 0.0 || spec.alpha == 0.0) return {};
    auto f = [&](double u) {
        double omega = 0.0;
        const double w = weight_over_omega_squared(spec, u, omega);
        return 4.0 * w * std::sin(omega * t);
    };
    return quad::integrate(f, 0.0, kEnvelopeCutoff, oscillatory_options(spec, t, abs_tol));
}

double gamma_R(const OhmicGapSpectrum& spec, double t) { return decoherence_real(spec, t).value; }

double gamma_I(const OhmicGapSpectrum& spec, double t) { return decoherence_imag(spec, t).value; }

BathGammaResult bath_gamma(const OhmicGapSpectrum& spec, double t, double abs_tol) {
    const quad::Result re = decoherence_real(spec, t, abs_tol);
    const quad::Result im = decoherence_imag(spec, t, abs_tol);
    return {std::max(0.0, re.value), im.value, re.error_estimate + im.error_estimate};
}

std::optional<double> gamma_R_infinity(const OhmicGapSpectrum& spec) {
    spec.validate();
    if (spec.alpha == 0.0) return 0.0;
    if (spec.gapless()) return std::nullopt;
    auto f = [&](double u) {
        double omega = 0.0;
        const double w = weight_over_omega_squared(spec, u, omega);
        return 4.0 * w * thermal_factor(omega, spec.temperature);
    };
    return quad::integrate(f, 0.0, kEnvelopeCutoff).value;
}

DensityMatrix4 bath_reduced_density(const OhmicGapSpectrum& spec, const QubitAmplitudes& psi0, double t) {
    const double theta = effective_coupling(spec);
    return reduced_density(psi0, theta * t, bath_gamma(spec, t).gamma());
}

std::vector<BathTimePoint> bath_time_series(const OhmicGapSpectrum& spec, const QubitAmplitudes& psi0,
                                            std::span<const double> t_grid) {
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        require_time(t_grid[i], "bath_time_series");
        if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
            throw std::invalid_argument("bath_time_series: time grid must be strictly increasing");
    }
    const double theta = effective_coupling(spec);
    std::vector<BathTimePoint> out(t_grid.size());
    parallel_for(t_grid.size(), [&](std::size_t i) {
        const double t = t_grid[i];
        const BathGammaResult g = bath_gamma(spec, t);
        const DensityMatrix4 rho = reduced_density(psi0, theta * t, g.gamma());
        out[i] = {t, theta * t, g.gamma_r, g.gamma_i, std::exp(-g.gamma_r), concurrence(rho), von_neumann_entropy(rho)};
    });
    return out;
}

std::optional<SteadyStateStats> steady_state_stats(const OhmicGapSpectrum& spec, const QubitAmplitudes& psi0,
                                                   int phase_samples) {
    if (phase_samples < 16) throw std::invalid_argument("steady_state_stats: phase_samples must be >= 16");
    const std::optional<double> g_inf = gamma_R_infinity(spec);
    if (!g_inf) return std::nullopt;

    // gamma_i(t) -> 0 at long times; only the residual phase theta t varies.
    const GammaValue gamma{*g_inf, 0.0};
    auto conc_at = [&](double phase) { return concurrence(reduced_density(psi0, phase, gamma)); };

    const auto n = static_cast<std::size_t>(phase_samples);
    const double step = 0.5 * std::numbers::pi / static_cast<double>(n);
    std::vector<double> conc(n), ent(n);
    for (std::size_t k = 0; k < n; ++k) {
        const DensityMatrix4 rho = reduced_density(psi0, step * static_cast<double>(k), gamma);
        conc[k] = concurrence(rho);
        ent[k] = von_neumann_entropy(rho);
    }

    SteadyStateStats out;
    out.gamma_r_inf = *g_inf;
    const auto [s_lo, s_hi] = std::minmax_element(ent.begin(), ent.end());
    out.s_steady = ent.front();
    out.entropy_variation = *s_hi - *s_lo;
    if (out.entropy_variation >= kSteadyEntropyTolerance) {
        std::ostringstream os;
        os << "steady_state_stats: entropy varies by " << out.entropy_variation << " over the residual phase";
        throw std::runtime_error(os.str());
    }

    // Golden-section polish around the best grid point.
    const auto best = static_cast<std::size_t>(std::max_element(conc.begin(), conc.end()) - conc.begin());
    out.c_max_steady = conc[best];
    if (out.c_max_steady > 0.0) {
        const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double lo = step * (static_cast<double>(best) - 1.0);
        double hi = step * (static_cast<double>(best) + 1.0);
        double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
        double f1 = conc_at(x1), f2 = conc_at(x2);
        for (int it = 0; it < 60; ++it) {
            if (f1 < f2) {
                lo = x1; x1 = x2; f1 = f2;
                x2 = lo + inv_phi * (hi - lo); f2 = conc_at(x2);
            } else {
                hi = x2; x2 = x1; f2 = f1;
                x1 = hi - inv_phi * (hi - lo); f1 = conc_at(x1);
            }
        }
        out.c_max_steady = std::max({out.c_max_steady, f1, f2});
    }
    return out;
}

std::optional<double> plateau_time(const OhmicGapSpectrum& spec, double t_start, double t_max, double tolerance) {
    if (!(t_start > 0.0)) throw std::invalid_argument("plateau_time: t_start must be > 0");
    double t = t_start;
    double current = gamma_R(spec, t);
    while (2.0 * t <= t_max) {
        const double next = gamma_R(spec, 2.0 * t);
        if (std::abs(next - current) < tolerance) return t;
        current = next;
        t *= 2.0;
    }
    return std::nullopt;
}

std::vector<BathMode> discretize_bath(const OhmicGapSpectrum& spec, int modes) {
    spec.validate();
    if (modes < 1) throw std::invalid_argument("discretize_bath: modes must be >= 1");
    // Legendre nodes by Newton iteration from the Chebyshev-like initial guess.
    const int n = modes;
    std::vector<BathMode> out(static_cast<std::size_t>(n));
    const double half = 0.5 * kEnvelopeCutoff;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double weight = 2.0 / ((1.0 - x * x) * dp * dp) * half;
        const double u = half * (1.0 + x);
        const double omega = spec.omega0 + spec.omega_c * u;
        out[static_cast<std::size_t>(i)] = {omega, std::sqrt(spectral_density(spec, omega) * spec.omega_c * weight)};
    }
    return out;
}

double gamma_I_discrete(std::span<const BathMode> modes, double t) {
    double sum = 0.0;
    for (const auto& m : modes) {
        const double r = 2.0 * m.coupling / m.omega;
        sum += r * r * std::sin(m.omega * t);
    }
    return sum;
}

}  // namespace twospin
