// bath.hpp: gapped Ohmic bosonic bath: spectral density, induced coupling,
// decoherence exponents, steady state.
//
// Units: hbar = k_B = 1. Frequencies and temperature are measured in the same
// unit as omega_c (normally omega_c = 1); times in 1/omega_c.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "twospin/qmath.hpp"
#include "twospin/quadrature.hpp"
#include "twospin/single_mode.hpp"

namespace twospin {

// J(w) = alpha (w - w0) exp(-(w - w0)/wc) step(w - w0), bath at temperature T.
struct OhmicGapSpectrum {
    double alpha = 0.25;
    double omega0 = 0.0;
    double omega_c = 1.0;
    double temperature = 0.0;

    // Throws std::invalid_argument naming the first violated invariant.
    void validate() const;
    bool gapless() const { return omega0 == 0.0; }
};

struct BathGammaResult {
    double gamma_r = 0.0;
    double gamma_i = 0.0;
    double quadrature_error_estimate = 0.0;

    GammaValue gamma() const { return {gamma_r, gamma_i}; }
};

// Integrands are cut at (w - w0)/wc = 40, where the envelope is below 5e-18.
inline constexpr double kEnvelopeCutoff = 40.0;

double spectral_density(const OhmicGapSpectrum& spec, double omega);

// coth(w / 2T) with coth := 1 at T = 0.
double thermal_factor(double omega, double temperature);

// I_eff = 2 int J(w)/w dw; theta = I_eff for the bath.
double effective_coupling(const OhmicGapSpectrum& spec, double abs_tol = 1e-10);

// 4 int J/w^2 coth(w/2T) (1 - cos wt) dw.
quad::Result decoherence_real(const OhmicGapSpectrum& spec, double t, double abs_tol = 1e-10);
// 4 int J/w^2 sin(wt) dw. Temperature independent.
quad::Result decoherence_imag(const OhmicGapSpectrum& spec, double t, double abs_tol = 1e-10);

double gamma_R(const OhmicGapSpectrum& spec, double t);
double gamma_I(const OhmicGapSpectrum& spec, double t);
BathGammaResult bath_gamma(const OhmicGapSpectrum& spec, double t, double abs_tol = 1e-10);

// 4 int J/w^2 coth(w/2T) dw, or nullopt when it diverges (gapless, alpha > 0).
std::optional<double> gamma_R_infinity(const OhmicGapSpectrum& spec);

DensityMatrix4 bath_reduced_density(const OhmicGapSpectrum& spec, const QubitAmplitudes& psi0, double t);

struct BathTimePoint {
    double t = 0.0;
    double theta_t = 0.0;
    double gamma_r = 0.0;
    double gamma_i = 0.0;
    double overlap = 1.0;  // e^{-gamma_r}
    double concurrence = 0.0;
    double entropy = 0.0;  // bits
};

std::vector<BathTimePoint> bath_time_series(const OhmicGapSpectrum& spec, const QubitAmplitudes& psi0,
                                            std::span<const double> t_grid);

struct SteadyStateStats {
    double gamma_r_inf = 0.0;
    double c_max_steady = 0.0;
    double s_steady = 0.0;
    double entropy_variation = 0.0;  // max - min of S over the residual phase
};

inline constexpr int kDefaultPhaseSamples = 1024;
inline constexpr double kSteadyEntropyTolerance = 1e-6;

// nullopt when the bath has no steady state (gamma_R_infinity diverges).
std::optional<SteadyStateStats> steady_state_stats(const OhmicGapSpectrum& spec, const QubitAmplitudes& psi0,
                                                   int phase_samples = kDefaultPhaseSamples);

// First t = t_start * 2^k with |gamma_R(2t) - gamma_R(t)| < tolerance, or
// nullopt if none is found up to t_max.
std::optional<double> plateau_time(const OhmicGapSpectrum& spec, double t_start = 100.0, double t_max = 25600.0,
                                   double tolerance = 1e-6);

// A finite set of oscillators standing in for the continuum: modes sit at
// Gauss-Legendre nodes of [w0, w0 + 40 wc] with lambda_j^2 = J(w_j) * weight_j.
struct BathMode {
    double omega = 0.0;
    double coupling = 0.0;  // lambda_j
};

std::vector<BathMode> discretize_bath(const OhmicGapSpectrum& spec, int modes);

// sum_j (2 lambda_j / w_j)^2 sin(w_j t).
double gamma_I_discrete(std::span<const BathMode> modes, double t);

}  // namespace twospin
