#include "twospin/verification.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>

#include "twospin/fock_oracle.hpp"
#include "twospin/random_states.hpp"

namespace twospin {

namespace {

constexpr double kPi = std::numbers::pi;

// Runs body; a thrown exception is a failed check carrying its message.
CheckResult run_check(const std::string& name, const std::function<std::string(bool&)>& body) {
    CheckResult r{name, false, {}};
    try {
        bool passed = true;
        r.detail = body(passed);
        r.passed = passed;
    } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

std::string worst(double value, double bound) {
    std::ostringstream os;
    os << "worst " << value << " (bound " << bound << ")";
    return os.str();
}

double relative(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

std::vector<CheckResult> verify_qmath(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    random::Engine rng(opt.seed);

    out.push_back(run_check("qmath: concurrence and entropy invariant under local unitaries", [&](bool& ok) {
        double dc = 0.0, ds = 0.0;
        for (int i = 0; i < opt.random_trials; ++i) {
            const auto rho = random::mixed_state(rng, 1 + i % 4);
            const auto moved = random::conjugate(rho, random::local_unitary(rng));
            dc = std::max(dc, std::abs(concurrence(rho) - concurrence(moved)));
            ds = std::max(ds, std::abs(von_neumann_entropy(rho) - von_neumann_entropy(moved)));
        }
        ok = dc <= 1e-9 && ds <= 1e-9;
        return "concurrence " + worst(dc, 1e-9) + ", entropy " + worst(ds, 1e-9);
    }));

    out.push_back(run_check("qmath: mixed-state concurrence equals pure_concurrence on pure states", [&](bool& ok) {
        double d = 0.0;
        for (int i = 0; i < opt.random_trials; ++i) {
            const auto psi = random::pure_state(rng);
            d = std::max(d, std::abs(concurrence(DensityMatrix4::pure(psi)) - pure_concurrence(psi)));
        }
        ok = d <= 1e-10;
        return worst(d, 1e-10);
    }));

    out.push_back(run_check("qmath: C in [0,1] and S in [0,2]", [&](bool& ok) {
        for (int i = 0; i < opt.random_trials; ++i) {
            const auto rho = random::mixed_state(rng, 1 + i % 4);
            const double c = concurrence(rho), s = von_neumann_entropy(rho);
            if (c < 0.0 || c > 1.0 || s < 0.0 || s > 2.0) ok = false;
        }
        return std::to_string(opt.random_trials) + " random states";
    }));

    out.push_back(run_check("qmath: Wootters spectrum is real and matches the singular-value route", [&](bool& ok) {
        double max_imag = 0.0, max_diff = 0.0;
        for (int i = 0; i < opt.random_trials; ++i) {
            const auto rho = random::mixed_state(rng, 1 + i % 4);
            const Eigen::Matrix4cd& m = rho.matrix();
            const Eigen::Matrix4cd product = m * sigma_yy() * m.conjugate() * sigma_yy();
            Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(product, false);
            std::array<double, 4> re{};
            for (int k = 0; k < 4; ++k) {
                max_imag = std::max(max_imag, std::abs(es.eigenvalues()(k).imag()));
                re[static_cast<std::size_t>(k)] = es.eigenvalues()(k).real();
            }
            std::sort(re.rbegin(), re.rend());
            const auto r = wootters_values(rho);
            for (std::size_t k = 0; k < 4; ++k) max_diff = std::max(max_diff, std::abs(r[k] * r[k] - re[k]));
        }
        ok = max_imag < 1e-10 && max_diff < 1e-10;
        return "imaginary parts " + worst(max_imag, 1e-10) + ", r^2 mismatch " + worst(max_diff, 1e-10);
    }));
    return out;
}

std::vector<CheckResult> verify_single_mode(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    random::Engine rng(opt.seed + 1);
    std::uniform_real_distribution<double> ratio_dist(0.5, 30.0), time_dist(0.0, 50.0);

    out.push_back(run_check("single_mode: |01>,|10> subspace stays pure", [&](bool& ok) {
        double ds = 0.0, dp = 0.0;
        for (int i = 0; i < opt.random_trials; ++i) {
            const auto params = SingleModeParams::from_ratio(ratio_dist(rng));
            const double t = time_dist(rng);
            const auto rho = reduced_density(random::dfs_state(rng), params.theta() * t, gamma_single_mode(params, t));
            ds = std::max(ds, von_neumann_entropy(rho));
            dp = std::max(dp, std::abs(purity(rho) - 1.0));
        }
        ok = ds < 1e-10 && dp < 1e-10;
        return "entropy " + worst(ds, 1e-10) + ", purity defect " + worst(dp, 1e-10);
    }));

    out.push_back(run_check("single_mode: revival at omega t = 2 pi k restores C = C_ideal", [&](bool& ok) {
        double dov = 0.0, dc = 0.0;
        for (int i = 0; i < opt.random_trials; ++i) {
            const auto params = SingleModeParams::from_ratio(ratio_dist(rng));
            const auto psi = random::pure_state(rng);
            const double t = 2.0 * kPi * (1 + i % 7) / params.omega();
            const auto gamma = gamma_single_mode(params, t);
            const auto rho = reduced_density(psi, params.theta() * t, gamma);
            dov = std::max(dov, std::abs(std::exp(-gamma.gamma_r) - 1.0));
            dc = std::max(dc, std::abs(concurrence(rho) - ideal_concurrence(psi, params.theta() * t)));
        }
        ok = dov <= 1e-10 && dc <= 1e-10;
        return "overlap " + worst(dov, 1e-10) + ", |C - C_ideal| " + worst(dc, 1e-10);
    }));

    out.push_back(run_check("single_mode: reduced density matrices are valid", [&](bool& ok) {
        for (int i = 0; i < opt.random_trials; ++i) {
            const auto params = SingleModeParams::from_ratio(ratio_dist(rng));
            const double t = time_dist(rng);
            const auto rho = reduced_density(random::pure_state(rng), params.theta() * t, gamma_single_mode(params, t));
            if (!validate_density(rho).valid) {
                ok = false;
                return validate_density(rho).describe();
            }
        }
        return std::to_string(opt.random_trials) + " random states";
    }));

    out.push_back(run_check("single_mode: omega/lambda = 4 sqrt(n) gives C = 1 at pi/4 and 0 at pi/2", [&](bool& ok) {
        double d = 0.0;
        for (int n = 1; n <= 5; ++n) {
            const auto params = SingleModeParams::from_ratio(ratio_for_commensurability(n));
            for (double phase : {kPi / 4.0, kPi / 2.0}) {
                const double t = phase / params.theta();
                const auto rho = reduced_density(QubitAmplitudes::uniform(), phase, gamma_single_mode(params, t));
                const double target = phase < 1.0 ? 1.0 : 0.0;
                d = std::max(d, std::abs(concurrence(rho) - target));
            }
        }
        ok = d <= 1e-9;
        return worst(d, 1e-9);
    }));

    out.push_back(run_check("single_mode: C_avg nondecreasing, S_avg nonincreasing over n = 1..10", [&](bool& ok) {
        const auto checks = check_fig2_table(fig2_table(fig2_sweep(1.0, 10.0, 10)));
        std::string detail;
        for (const auto& c : checks) {
            ok = ok && c.passed;
            detail += (detail.empty() ? "" : "; ") + c.detail;
        }
        return detail;
    }));
    return out;
}

std::vector<CheckResult> verify_fock_oracle(const VerifyOptions& opt, double tolerance) {
    std::vector<CheckResult> out;
    random::Engine rng(opt.seed + 2);

    out.push_back(run_check("fock_oracle: truncated propagator matches closed form", [&](bool& ok) {
        double d = 0.0;
        for (const auto& c : oracle_equivalence_suite(tolerance)) {
            ok = ok && c.passed;
            d = std::max(d, c.distance);
        }
        return "trace distance " + worst(d, tolerance);
    }));

    out.push_back(run_check("fock_oracle: joint-state norm preserved", [&](bool& ok) {
        std::uniform_real_distribution<double> ratio_dist(1.0, 20.0), time_dist(0.0, 20.0);
        double d = 0.0;
        for (int i = 0; i < 10; ++i) {
            const auto params = SingleModeParams::from_ratio(ratio_dist(rng));
            const auto r = evolve_auto(params, random::pure_state(rng), time_dist(rng));
            d = std::max(d, std::abs(r.norm - 1.0));
        }
        ok = d <= 1e-10;
        return worst(d, 1e-10);
    }));

    out.push_back(run_check("fock_oracle: uncoupled blocks stay in the vacuum", [&](bool& ok) {
        double pop = 0.0;
        for (double t : {0.3, 2.0, 17.5}) {
            const Eigen::VectorXcd v = evolve_block(3.0, 0.0, t, 16);
            pop = std::max(pop, v.tail(v.size() - 1).squaredNorm());
        }
        ok = pop <= 1e-20;
        return "population above n = 0: " + worst(pop, 1e-20);
    }));
    return out;
}

std::vector<CheckResult> verify_bath(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    random::Engine rng(opt.seed + 3);

    out.push_back(run_check("bath: gapless log-log slope of exp(-Gamma_R) is -4 alpha", [&](bool& ok) {
        double worst_rel = 0.0;
        for (double alpha : {0.25, 0.5}) {
            const OhmicGapSpectrum spec{alpha, 0.0};
            const double slope = -(gamma_R(spec, 1e3) - gamma_R(spec, 1e2)) / std::log(10.0);
            worst_rel = std::max(worst_rel, relative(slope, -4.0 * alpha));
        }
        ok = worst_rel <= 0.02;
        return "relative slope error " + worst(worst_rel, 0.02);
    }));

    auto decoherence_inf = [](const OhmicGapSpectrum& s) { return std::exp(-gamma_R_infinity(s).value()); };

    out.push_back(run_check("bath: exp(-Gamma_R(inf)) nondecreasing in the gap", [&](bool& ok) {
        for (double temperature : {0.0, 0.5}) {
            double prev = -1.0;
            for (double gap : {0.01, 0.05, 0.1, 0.2}) {
                const double v = decoherence_inf({0.25, gap, 1.0, temperature});
                if (v < prev) ok = false;
                prev = v;
            }
        }
        return std::string("alpha = 0.25, T in {0, 0.5}");
    }));

    out.push_back(run_check("bath: exp(-Gamma_R(inf)) nonincreasing in temperature", [&](bool& ok) {
        double prev = 2.0;
        for (double temperature : {0.0, 0.1, 0.5, 1.0, 2.0}) {
            const double v = decoherence_inf({0.25, 0.1, 1.0, temperature});
            if (v > prev) ok = false;
            prev = v;
        }
        return std::string("alpha = 0.25, gap = 0.1");
    }));

    out.push_back(run_check("bath: steady C_max nonincreasing and S nondecreasing in alpha", [&](bool& ok) {
        double prev_c = 2.0, prev_s = -1.0;
        for (double alpha : {0.05, 0.1, 0.25, 0.5, 1.0}) {
            const auto s = steady_state_stats({alpha, 0.1}, QubitAmplitudes::uniform()).value();
            if (s.c_max_steady > prev_c + 1e-12 || s.s_steady < prev_s - 1e-12) ok = false;
            prev_c = s.c_max_steady;
            prev_s = s.s_steady;
        }
        return std::string("gap = 0.1");
    }));

    out.push_back(run_check("bath: halving the quadrature tolerance moves Gamma by less than the error estimate",
                            [&](bool& ok) {
        double ratio = 0.0;
        for (const OhmicGapSpectrum spec : {OhmicGapSpectrum{0.25, 0.0}, OhmicGapSpectrum{0.5, 0.1, 1.0, 0.5}}) {
            for (double t : {0.5, 5.0, 50.0}) {
                const auto coarse = bath_gamma(spec, t, 1e-8);
                const auto fine = bath_gamma(spec, t, 5e-9);
                const double change = std::abs(coarse.gamma_r - fine.gamma_r) + std::abs(coarse.gamma_i - fine.gamma_i);
                if (change > coarse.quadrature_error_estimate) ok = false;
                ratio = std::max(ratio, change / std::max(coarse.quadrature_error_estimate, 1e-300));
            }
        }
        return "max change / estimate = " + std::to_string(ratio);
    }));

    out.push_back(run_check("bath: 200-mode discretization reproduces Gamma_I", [&](bool& ok) {
        double worst_rel = 0.0;
        for (const OhmicGapSpectrum spec : {OhmicGapSpectrum{0.25, 0.1}, OhmicGapSpectrum{0.5, 0.0}}) {
            const auto modes = discretize_bath(spec, 200);
            for (double t : {0.5, 1.0, 2.0, 5.0, 10.0})
                worst_rel = std::max(worst_rel, relative(gamma_I_discrete(modes, t), gamma_I(spec, t)));
        }
        ok = worst_rel <= 1e-3;
        return "relative error " + worst(worst_rel, 1e-3);
    }));

    out.push_back(run_check("bath: |01>,|10> subspace stays pure", [&](bool& ok) {
        std::uniform_real_distribution<double> time_dist(0.0, 30.0);
        const OhmicGapSpectrum spec{0.25, 0.1, 1.0, 0.3};
        double ds = 0.0;
        for (int i = 0; i < 10; ++i) {
            const auto rho = bath_reduced_density(spec, random::dfs_state(rng), time_dist(rng));
            ds = std::max({ds, von_neumann_entropy(rho), std::abs(purity(rho) - 1.0)});
        }
        ok = ds < 1e-10;
        return worst(ds, 1e-10);
    }));
    return out;
}

std::vector<CheckResult> verify_experiments(const VerifyOptions&) {
    std::vector<CheckResult> out;

    out.push_back(run_check("experiments: sweeps are bit-for-bit reproducible", [&](bool& ok) {
        auto render = [] {
            std::ostringstream os;
            csv::write(os, fig2_table(fig2_sweep(0.5, 3.0, 6, 400)));
            csv::write(os, fig4_concurrence_table(fig4_sweep({0.1, 0.4}, {0.0, 0.1}, {0.0, 1.0}, 0.25, 0.0, 128)));
            return os.str();
        };
        ok = render() == render();
        return std::string("fig2 and fig4 tables rendered twice");
    }));

    out.push_back(run_check("experiments: steady-state tables respect the bath trends", [&](bool& ok) {
        const auto r = fig4_sweep({0.05, 0.25, 0.5, 1.0}, {0.0, 0.05, 0.1, 0.3}, {0.0, 0.5, 1.0, 2.0}, 0.25, 0.0, 256);
        std::string detail;
        for (const auto& c : check_fig4_tables(fig4_concurrence_table(r), fig4_entropy_table(r),
                                               fig4_decoherence_table(r))) {
            if (!c.passed) {
                ok = false;
                detail += c.name + ": " + c.detail + "; ";
            }
        }
        return detail.empty() ? std::string("all table checks passed") : detail;
    }));
    return out;
}

std::vector<CheckResult> verify_csv(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    random::Engine rng(opt.seed + 4);
    out.push_back(run_check("cli: CSV round-trips at printed precision", [&](bool& ok) {
        std::uniform_real_distribution<double> mant(-1.0, 1.0);
        std::uniform_int_distribution<int> expo(-300, 300);
        csv::Table t;
        t.metadata = {"round trip"};
        t.header = {"x[-]", "y[-]"};
        for (int i = 0; i < 200; ++i) t.add_row({mant(rng) * std::pow(10.0, expo(rng)), mant(rng)});
        std::ostringstream first;
        csv::write(first, t);
        std::istringstream in(first.str());
        std::ostringstream second;
        csv::write(second, csv::read(in));
        ok = first.str() == second.str();
        return std::string("200 rows");
    }));
    return out;
}

std::vector<CheckResult> run_property_suite(const VerifyOptions& opt) {
    std::vector<CheckResult> all;
    auto append = [&all](std::vector<CheckResult> part) { all.insert(all.end(), part.begin(), part.end()); };
    append(verify_qmath(opt));
    append(verify_single_mode(opt));
    append(verify_fock_oracle(opt));
    append(verify_bath(opt));
    append(verify_experiments(opt));
    append(verify_csv(opt));
    return all;
}

}  // namespace twospin
