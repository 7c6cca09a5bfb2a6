// fock_oracle.hpp: brute-force propagation of qubits x oscillator in a truncated Fock basis
//
// Independent of the closed-form coherent-state solution: each of the four
// collective-spin blocks is diagonalized numerically and propagated exactly.

#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "twospin/qmath.hpp"
#include "twospin/single_mode.hpp"

namespace twospin {

struct FockConfig {
    int n_cut = 8;           // highest retained occupation number
    double leak_tol = 1e-10; // allowed population in the top two levels

    void validate() const;
};

class TruncationError : public std::runtime_error {
public:
    TruncationError(double leak, int n_cut, double leak_tol);
    double leak() const noexcept { return leak_; }
    int n_cut() const noexcept { return n_cut_; }

private:
    double leak_;
    int n_cut_;
};

struct OracleResult {
    DensityMatrix4 rho;
    double leak = 0.0;  // max over blocks of top-two-level population
    double norm = 1.0;  // norm^2 of the joint state
    int n_cut = 0;
};

// exp(-i H t)|0> for H = omega a^dag a + coupling (a^dag + a) on levels 0..n_cut.
Eigen::VectorXcd evolve_block(double omega, double coupling, double t, int n_cut);

// Throws TruncationError if the leak exceeds cfg.leak_tol.
OracleResult evolve_truncated(const SingleModeParams& params, const QubitAmplitudes& psi0, double t,
                              const FockConfig& cfg);

// Starting cutoff max(8, ceil(8 (2l/w)^2 + 16)).
int initial_n_cut(const SingleModeParams& params);

// Doubles n_cut from initial_n_cut() until the leak tolerance holds.
OracleResult evolve_auto(const SingleModeParams& params, const QubitAmplitudes& psi0, double t,
                         double leak_tol = 1e-10, int max_n_cut = 2048);

// (1/2) sum |eig(rho1 - rho2)|. Both inputs must be valid density matrices.
double trace_distance(const DensityMatrix4& rho1, const DensityMatrix4& rho2);

struct OracleCheck {
    double omega_over_lambda = 0.0;
    double theta_t = 0.0;
    double distance = 0.0;
    int n_cut = 0;
    bool passed = false;
};

// Oracle vs closed form on omega/lambda in {1, 4, 4 sqrt2, 4 sqrt3, 20} and
// theta t in {0.1, pi/8, pi/4, 1}, uniform amplitudes.
std::vector<OracleCheck> oracle_equivalence_suite(double tolerance = 1e-7);

}  // namespace twospin
