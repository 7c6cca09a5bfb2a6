#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "twospin/fock_oracle.hpp"
#include "twospin/random_states.hpp"

using namespace twospin;
using std::numbers::pi;

namespace {

Eigen::Matrix4cd basis_projector(int i) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(i, i) = 1.0;
    return m;
}

}  // namespace

TEST(FockOracle, NoCouplingKeepsInitialState) {
    random::Engine rng(5);
    const auto psi = random::pure_state(rng);
    const auto r = evolve_truncated(SingleModeParams(3.0, 0.0), psi, 2.7, FockConfig{});
    EXPECT_LT(trace_distance(r.rho, DensityMatrix4::pure(psi)), 1e-12);
}

TEST(FockOracle, ZeroTimeKeepsInitialState) {
    random::Engine rng(6);
    const auto psi = random::pure_state(rng);
    const auto r = evolve_truncated(SingleModeParams::from_ratio(2.0), psi, 0.0, FockConfig{20});
    EXPECT_LT(trace_distance(r.rho, DensityMatrix4::pure(psi)), 1e-12);
}

TEST(FockOracle, MatchesClosedFormAtCommensuratePoint) {
    const auto p = SingleModeParams::from_ratio(4.0);
    const double t = (pi / 4.0) / p.theta();
    const auto r = evolve_truncated(p, QubitAmplitudes::uniform(), t, FockConfig{40});
    const auto closed = reduced_density(QubitAmplitudes::uniform(), pi / 4.0, gamma_single_mode(p, t));
    EXPECT_LT(trace_distance(r.rho, closed), 1e-8);
    EXPECT_NEAR(r.norm, 1.0, 1e-10);
}

TEST(FockOracle, RandomStatesMatchClosedForm) {
    random::Engine rng(8);
    std::uniform_real_distribution<double> ratio(1.0, 20.0), phase(0.0, pi / 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = SingleModeParams::from_ratio(ratio(rng));
        const double theta_t = phase(rng);
        const double t = theta_t / p.theta();
        const auto psi = random::pure_state(rng);
        const auto r = evolve_auto(p, psi, t);
        EXPECT_LT(trace_distance(r.rho, reduced_density(psi, theta_t, gamma_single_mode(p, t))), 1e-7)
            << "omega/lambda=" << p.omega() << " theta_t=" << theta_t;
    }
}

TEST(FockOracle, TruncationBreachIsReported) {
    const auto p = SingleModeParams::from_ratio(0.5);
    const double t = pi / p.omega();  // maximal displacement, |alpha|^2 = 64
    try {
        evolve_truncated(p, QubitAmplitudes::uniform(), t, FockConfig{8});
        FAIL() << "expected TruncationError";
    } catch (const TruncationError& e) {
        EXPECT_GT(e.leak(), 1e-10);
        EXPECT_EQ(e.n_cut(), 8);
    }
    EXPECT_NO_THROW(evolve_auto(p, QubitAmplitudes::uniform(), t));
}

TEST(FockOracle, ConfigValidation) {
    EXPECT_THROW(FockConfig{4}.validate(), std::invalid_argument);
    EXPECT_THROW((FockConfig{16, 0.0}.validate()), std::invalid_argument);
    EXPECT_THROW(evolve_truncated(SingleModeParams::from_ratio(1.0), QubitAmplitudes::uniform(), -1.0, FockConfig{}),
                 std::invalid_argument);
}

TEST(TraceDistance, Examples) {
    const DensityMatrix4 p00(basis_projector(0)), p11(basis_projector(3));
    EXPECT_NEAR(trace_distance(p00, p00), 0.0, 1e-15);
    EXPECT_NEAR(trace_distance(p00, p11), 1.0, 1e-15);
    EXPECT_NEAR(trace_distance(DensityMatrix4::maximally_mixed(), p00), 0.75, 1e-15);
}

TEST(OracleSuite, AllPass) {
    const auto checks = oracle_equivalence_suite(1e-7);
    EXPECT_EQ(checks.size(), 20u);
    for (const auto& c : checks)
        EXPECT_TRUE(c.passed) << "omega/lambda=" << c.omega_over_lambda << " theta_t=" << c.theta_t
                              << " distance=" << c.distance;
}
