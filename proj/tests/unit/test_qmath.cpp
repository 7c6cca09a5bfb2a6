#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "twospin/qmath.hpp"
#include "twospin/random_states.hpp"

using namespace twospin;

namespace {

Eigen::Matrix4cd projector(int i) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(i, i) = 1.0;
    return m;
}

DensityMatrix4 bell() {
    const double s = 1.0 / std::sqrt(2.0);
    return DensityMatrix4::pure(QubitAmplitudes{s, 0.0, 0.0, s});
}

}  // namespace

TEST(ValidateDensity, MaximallyMixed) {
    const auto r = validate_density(DensityMatrix4::maximally_mixed());
    EXPECT_TRUE(r.valid);
    EXPECT_NEAR(r.min_eigenvalue, 0.25, 1e-14);
}

TEST(ValidateDensity, PureProjector) {
    const auto r = validate_density(DensityMatrix4(projector(0)));
    EXPECT_TRUE(r.valid);
    EXPECT_NEAR(r.min_eigenvalue, 0.0, 1e-14);
}

TEST(ValidateDensity, TraceDefect) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity() * (1.1 / 4.0);
    const auto r = validate_density(DensityMatrix4(m));
    EXPECT_FALSE(r.valid);
    EXPECT_NEAR(r.trace_defect, 0.1, 1e-12);
    EXPECT_THROW(require_valid(DensityMatrix4(m)), InvalidDensityError);
    EXPECT_THROW(concurrence(DensityMatrix4(m)), InvalidDensityError);
}

TEST(ValidateDensity, RejectsNonHermitianAndNegative) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity() / 4.0;
    m(0, 1) = 0.1;
    EXPECT_FALSE(validate_density(DensityMatrix4(m)).valid);

    Eigen::Matrix4cd neg = Eigen::Matrix4cd::Zero();
    neg.diagonal() << 0.6, 0.6, 0.1, -0.3;
    const auto r = validate_density(DensityMatrix4(neg));
    EXPECT_FALSE(r.valid);
    EXPECT_NEAR(r.min_eigenvalue, -0.3, 1e-14);
    EXPECT_FALSE(r.describe().empty());
}

TEST(Concurrence, BellAndSeparable) {
    EXPECT_NEAR(concurrence(bell()), 1.0, 1e-12);
    EXPECT_NEAR(concurrence(DensityMatrix4::maximally_mixed()), 0.0, 1e-12);
    EXPECT_NEAR(concurrence(DensityMatrix4(projector(1))), 0.0, 1e-12);
}

TEST(Concurrence, WernerHalf) {
    const Eigen::Matrix4cd w = oracle::werner(0.5);
    const double brute = oracle::concurrence(w);
    EXPECT_NEAR(brute, 0.25, 1e-12);
    EXPECT_NEAR(concurrence(DensityMatrix4(w)), brute, 1e-12);
}

TEST(Concurrence, WernerFamilyMatchesClosedForm) {
    for (double p = 0.0; p <= 1.0; p += 0.05) {
        const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
        EXPECT_NEAR(concurrence(DensityMatrix4(oracle::werner(p))), expected, 1e-9) << "p=" << p;
    }
}

TEST(Concurrence, RandomStatesMatchBruteForce) {
    random::Engine rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rho = random::mixed_state(rng, 1 + trial % 4);
        const double c = concurrence(rho);
        EXPECT_GE(c, 0.0);
        EXPECT_LE(c, 1.0);
        // Rank-deficient states put sqrt of roundoff into the brute-force route.
        EXPECT_NEAR(c, oracle::concurrence(rho.matrix()), 1e-6) << "trial " << trial;
    }
}

TEST(Concurrence, PureStatesAgreeWithAmplitudeFormula) {
    random::Engine rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto psi = random::pure_state(rng);
        EXPECT_NEAR(concurrence(DensityMatrix4::pure(psi)), pure_concurrence(psi), 1e-9);
    }
}

TEST(Concurrence, LocalUnitaryInvariance) {
    random::Engine rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const auto rho = random::mixed_state(rng, 2);
        const auto u = random::local_unitary(rng);
        EXPECT_NEAR(concurrence(random::conjugate(rho, u)), concurrence(rho), 1e-9);
    }
}

TEST(Concurrence, WoottersValuesSortedNonnegative) {
    random::Engine rng(17);
    const auto r = wootters_values(random::mixed_state(rng));
    for (int i = 0; i < 4; ++i) EXPECT_GE(r[i], 0.0);
    for (int i = 0; i < 3; ++i) EXPECT_GE(r[i], r[i + 1]);
}

TEST(PureConcurrence, Examples) {
    const double s = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(pure_concurrence({s, 0.0, 0.0, s}), 1.0, 1e-15);
    EXPECT_NEAR(pure_concurrence({1.0, 0.0, 0.0, 0.0}), 0.0, 1e-15);
    // phase e^{i 4 theta t} on d at theta t = pi/4
    const cplx d = 0.5 * std::polar(1.0, 4.0 * std::numbers::pi / 4.0);
    EXPECT_NEAR(pure_concurrence({0.5, 0.5, 0.5, d}), 1.0, 1e-12);
}

TEST(PureConcurrence, RejectsUnnormalized) {
    EXPECT_THROW(pure_concurrence({1.0, 1.0, 0.0, 0.0}), std::invalid_argument);
    EXPECT_NO_THROW(pure_concurrence({1.0 + 1e-10, 0.0, 0.0, 0.0}));
}

TEST(Entropy, Examples) {
    EXPECT_NEAR(von_neumann_entropy(bell()), 0.0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix4::maximally_mixed()), 2.0, 1e-12);
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = m(1, 1) = m(1, 2) = m(2, 1) = m(2, 2) = m(3, 3) = 0.25;
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix4(m)), oracle::entropy_bits({0.5, 0.25, 0.25, 0.0}), 1e-12);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix4(m)), 1.5, 1e-12);
}

TEST(Entropy, BoundsOnRandomStates) {
    random::Engine rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const auto rho = random::mixed_state(rng, 1 + trial % 4);
        const double s = von_neumann_entropy(rho);
        EXPECT_GE(s, 0.0);
        EXPECT_LE(s, 2.0 + 1e-12);
        EXPECT_LE(purity(rho), 1.0 + 1e-12);
    }
}
