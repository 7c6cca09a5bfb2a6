// single_mode.hpp: two qubits coupled to one harmonic oscillator, exact dynamics
//
// Units: hbar = 1. Frequencies and couplings share one inverse-time unit; the
// CLI fixes lambda = 1 so that only omega/lambda matters.

#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "twospin/qmath.hpp"

namespace twospin {

class SingleModeParams {
public:
    // Throws std::invalid_argument unless omega > 0 and lambda >= 0.
    SingleModeParams(double omega, double lambda);

    // omega = ratio, lambda = 1.
    static SingleModeParams from_ratio(double omega_over_lambda) { return {omega_over_lambda, 1.0}; }

    double omega() const { return omega_; }
    double lambda() const { return lambda_; }
    // Induced qubit-qubit coupling frequency 2 lambda^2 / omega.
    double theta() const { return 2.0 * lambda_ * lambda_ / omega_; }
    // (2 lambda / omega)^2, the prefactor of the decoherence exponent.
    double displacement_squared() const {
        const double r = 2.0 * lambda_ / omega_;
        return r * r;
    }

private:
    double omega_;
    double lambda_;
};

// Complex decoherence exponent Gamma = gamma_r + i gamma_i. gamma_i is the
// phase that enters the joint state as exp(-i gamma_i) on the |00>, |11> branches.
struct GammaValue {
    double gamma_r = 0.0;
    double gamma_i = 0.0;

    cplx value() const { return {gamma_r, gamma_i}; }
};

// gamma_r = (2l/w)^2 (1 - cos wt), gamma_i = (2l/w)^2 sin wt.
GammaValue gamma_single_mode(const SingleModeParams& params, double t);

// (2l/w)(e^{-iwt} - 1); |alpha|^2 = 2 gamma_r.
cplx coherent_amplitude(const SingleModeParams& params, double t);

// Partial trace of the three-branch joint state
//   e^{i phi} a|00>|alpha> + b|01>|0> + c|10>|0> + e^{i phi} d|11>|-alpha>
// with phi = 2 theta t - gamma_i, <0|+-alpha> = e^{-gamma_r}, <-alpha|alpha> = e^{-4 gamma_r}.
// The same structure holds for the multimode bath.
DensityMatrix4 reduced_density(const QubitAmplitudes& psi0, double theta_t, const GammaValue& gamma);

// Concurrence of the decoupled-oscillator state a|00> + d|11> + e^{-2i theta t}(b|01> + c|10>).
double ideal_concurrence(const QubitAmplitudes& psi0, double theta_t);

struct TimePoint {
    double t = 0.0;
    double theta_t = 0.0;
    double concurrence = 0.0;
    double ideal_concurrence = 0.0;
    double entropy = 0.0;  // bits
    double overlap = 1.0;  // e^{-gamma_r}
};

// Rejects grids that are not strictly increasing or contain negative times.
std::vector<TimePoint> time_series(const SingleModeParams& params, const QubitAmplitudes& psi0,
                                   std::span<const double> t_grid);

struct PeriodStats {
    double c_max = 0.0;
    double c_avg = 0.0;
    double s_max = 0.0;
    double s_avg = 0.0;
    // lambda == 0: the entangling period is infinite and every field is zero.
    bool degenerate = false;
};

inline constexpr int kMinSamplesPerPeriod = 100;
inline constexpr int kDefaultSamplesPerPeriod = 2000;

// Max and trapezoid averages of C and S over theta t in [0, pi/2).
PeriodStats period_stats(const SingleModeParams& params, const QubitAmplitudes& psi0,
                         int samples_per_period = kDefaultSamplesPerPeriod);

// omega/lambda = 4 sqrt(n).
inline double ratio_for_commensurability(double n) { return 4.0 * std::sqrt(n); }

}  // namespace twospin
