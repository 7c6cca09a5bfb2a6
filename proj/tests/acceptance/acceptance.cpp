// Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "twospin/bath.hpp"
#include "twospin/fock_oracle.hpp"
#include "twospin/random_states.hpp"
#include "twospin/single_mode.hpp"

using namespace twospin;
using std::numbers::pi;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

// Every density matrix built by criteria 1-8 goes through here.
struct ValidityLedger {
    long checked = 0;
    long invalid = 0;
    std::string first_failure;

    const DensityMatrix4& operator()(const DensityMatrix4& rho, const std::string& where) {
        ++checked;
        const auto r = validate_density(rho);
        if (!r.valid) {
            if (invalid++ == 0) first_failure = where + ": " + r.describe();
        }
        return rho;
    }
} track;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

Outcome commensurate() {
    Outcome o;
    double worst_peak = 0.0, worst_zero = 0.0;
    for (int n = 1; n <= 5; ++n) {
        const auto p = SingleModeParams::from_ratio(ratio_for_commensurability(n));
        for (double theta_t : {pi / 4.0, pi / 2.0}) {
            const double t = theta_t / p.theta();
            const auto& rho = track(reduced_density(QubitAmplitudes::uniform(), theta_t, gamma_single_mode(p, t)),
                                    "criterion 1");
            const double c = concurrence(rho);
            if (theta_t < 1.0)
                worst_peak = std::max(worst_peak, std::abs(c - 1.0));
            else
                worst_zero = std::max(worst_zero, std::abs(c));
        }
    }
    o.passed = worst_peak <= 1e-9 && worst_zero <= 1e-9;
    o.detail = "max |C(pi/4) - 1| = " + fmt(worst_peak) + ", max |C(pi/2)| = " + fmt(worst_zero);
    return o;
}

Outcome ideal_limit() {
    const auto p = SingleModeParams::from_ratio(100.0);
    const auto psi = QubitAmplitudes::uniform();
    const int samples = 4000;
    double worst_c = 0.0, worst_s = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double theta_t = (pi / 2.0) * k / samples;
        const double t = theta_t / p.theta();
        const auto& rho = track(reduced_density(psi, theta_t, gamma_single_mode(p, t)), "criterion 2");
        worst_c = std::max(worst_c, std::abs(concurrence(rho) - ideal_concurrence(psi, theta_t)));
        worst_s = std::max(worst_s, von_neumann_entropy(rho));
    }
    return {worst_c <= 5e-3 && worst_s <= 0.02,
            "max |C - C_ideal| = " + fmt(worst_c) + ", max S = " + fmt(worst_s) + " bits"};
}

Outcome oracle_equivalence() {
    const double ratios[] = {1.0, 4.0, 4.0 * std::numbers::sqrt2, 4.0 * std::sqrt(3.0), 20.0};
    const double phases[] = {0.1, pi / 8.0, pi / 4.0, 1.0};
    double worst = 0.0, worst_norm = 0.0;
    for (double r : ratios)
        for (double theta_t : phases) {
            const auto p = SingleModeParams::from_ratio(r);
            const double t = theta_t / p.theta();
            const auto brute = evolve_auto(p, QubitAmplitudes::uniform(), t);
            const auto& a = track(brute.rho, "criterion 3 oracle");
            const auto& b = track(reduced_density(QubitAmplitudes::uniform(), theta_t, gamma_single_mode(p, t)),
                                  "criterion 3 closed form");
            worst = std::max(worst, trace_distance(a, b));
            worst_norm = std::max(worst_norm, std::abs(brute.norm - 1.0));
        }
    return {worst < 1e-7 && worst_norm <= 1e-10,
            "max trace distance = " + fmt(worst) + " over 20 points, max |norm - 1| = " + fmt(worst_norm)};
}

Outcome gapless_closed_forms() {
    double worst = 0.0;
    for (double alpha : {0.25, 0.5})
        for (double t : {0.1, 1.0, 10.0, 100.0}) {
            OhmicGapSpectrum s;
            s.alpha = alpha;
            const double re = 2.0 * alpha * std::log(1.0 + t * t);
            const double im = 4.0 * alpha * std::atan(t);
            worst = std::max(worst, std::abs(gamma_R(s, t) - re) / re);
            worst = std::max(worst, std::abs(gamma_I(s, t) - im) / im);
        }
    return {worst <= 1e-6, "max relative error = " + fmt(worst)};
}

Outcome power_law_slope() {
    Outcome o;
    std::ostringstream detail;
    for (double alpha : {0.25, 0.5}) {
        OhmicGapSpectrum s;
        s.alpha = alpha;
        // least-squares slope of ln e^{-Gamma_R} against ln t
        const int n = 21;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (int k = 0; k < n; ++k) {
            const double t = 100.0 * std::pow(10.0, static_cast<double>(k) / (n - 1));
            const double x = std::log(t), y = -gamma_R(s, t);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        const double rel = std::abs(slope + 4.0 * alpha) / (4.0 * alpha);
        o.passed = o.passed && rel <= 0.02;
        detail << (alpha == 0.25 ? "" : "; ") << "alpha " << alpha << ": slope " << fmt(slope) << " (rel " << fmt(rel) << ")";
    }
    o.detail = detail.str();
    return o;
}

Outcome gap_steady_state() {
    OhmicGapSpectrum gapped;
    gapped.alpha = 0.25;
    gapped.omega0 = 0.1;
    const auto g_inf = gamma_R_infinity(gapped);
    const auto stats = steady_state_stats(gapped, QubitAmplitudes::uniform());
    if (!g_inf || !stats) return {false, "gapped bath reported no steady state"};
    for (int k = 0; k < 64; ++k)
        track(reduced_density(QubitAmplitudes::uniform(), (pi / 2.0) * k / 64.0, {*g_inf, 0.0}), "criterion 6");

    OhmicGapSpectrum gapless;
    gapless.alpha = 0.25;
    const bool gapless_none = !gamma_R_infinity(gapless) && !steady_state_stats(gapless, QubitAmplitudes::uniform());

    const double decoherence = std::exp(-*g_inf);
    const bool ok = std::isfinite(*g_inf) && decoherence > 0.0 && stats->c_max_steady > 0.0 &&
                    stats->entropy_variation < 1e-6 && gapless_none;
    return {ok, "Gamma_R(inf) = " + fmt(*g_inf) + ", exp(-Gamma_R(inf)) = " + fmt(decoherence) +
                    ", C_max_steady = " + fmt(stats->c_max_steady) + ", S variation = " +
                    fmt(stats->entropy_variation) + ", gapless: " + (gapless_none ? "no steady state" : "STEADY")};
}

Outcome monotonicity() {
    constexpr double slack = 1e-9;
    std::vector<std::string> failures;

    std::vector<PeriodStats> fig2;
    for (int n = 1; n <= 10; ++n) {
        const auto p = SingleModeParams::from_ratio(ratio_for_commensurability(n));
        fig2.push_back(period_stats(p, QubitAmplitudes::uniform()));
        for (int k = 0; k < 50; ++k) {
            const double theta_t = (pi / 2.0) * k / 50.0;
            track(reduced_density(QubitAmplitudes::uniform(), theta_t, gamma_single_mode(p, theta_t / p.theta())),
                  "criterion 7");
        }
    }
    for (std::size_t i = 1; i < fig2.size(); ++i) {
        if (fig2[i].c_avg < fig2[i - 1].c_avg - slack) failures.push_back("C_avg drops at n=" + std::to_string(i + 1));
        if (fig2[i].s_avg > fig2[i - 1].s_avg + slack) failures.push_back("S_avg rises at n=" + std::to_string(i + 1));
    }

    std::optional<SteadyStateStats> prev;
    for (int k = 0; k < 12; ++k) {
        OhmicGapSpectrum s;
        s.alpha = 0.05 + 0.95 * k / 11.0;
        s.omega0 = 0.1;
        const auto st = steady_state_stats(s, QubitAmplitudes::uniform());
        if (!st) {
            failures.push_back("no steady state at alpha=" + fmt(s.alpha));
            continue;
        }
        if (prev && st->c_max_steady > prev->c_max_steady + slack)
            failures.push_back("C_max_steady rises at alpha=" + fmt(s.alpha));
        if (prev && st->s_steady < prev->s_steady - slack)
            failures.push_back("S_steady drops at alpha=" + fmt(s.alpha));
        prev = st;
    }

    double last = 2.0;
    for (int k = 0; k < 12; ++k) {
        OhmicGapSpectrum s;
        s.alpha = 0.25;
        s.omega0 = 0.1;
        s.temperature = 2.0 * k / 11.0;
        const double d = std::exp(-*gamma_R_infinity(s));
        if (d > last + slack) failures.push_back("exp(-Gamma_R(inf)) rises at T=" + fmt(s.temperature));
        last = d;
    }

    if (failures.empty()) return {true, "Fig2 n=1..10, 12 alphas at gap 0.1, 12 temperatures in [0,2]"};
    std::string d;
    for (const auto& f : failures) d += f + "; ";
    return {false, d};
}

Outcome decoherence_free_subspace() {
    random::Engine rng(20050613);
    std::uniform_real_distribution<double> ratio(0.5, 20.0), time(0.0, 200.0), alpha(0.05, 1.0), gap(0.0, 0.3),
        temperature(0.0, 2.0);
    double worst_s = 0.0, worst_purity = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto psi = random::dfs_state(rng);
        const auto p = SingleModeParams::from_ratio(ratio(rng));
        const double t1 = time(rng);
        const auto& a = track(reduced_density(psi, p.theta() * t1, gamma_single_mode(p, t1)), "criterion 8 mode");

        OhmicGapSpectrum s;
        s.alpha = alpha(rng);
        s.omega0 = gap(rng);
        s.temperature = temperature(rng);
        const auto& b = track(bath_reduced_density(s, psi, time(rng)), "criterion 8 bath");

        for (const auto* rho : {&a, &b}) {
            worst_s = std::max(worst_s, von_neumann_entropy(*rho));
            worst_purity = std::max(worst_purity, std::abs(purity(*rho) - 1.0));
        }
    }
    return {worst_s < 1e-10 && worst_purity <= 1e-10,
            "100 states x 2 pipelines: max S = " + fmt(worst_s) + ", max |purity - 1| = " + fmt(worst_purity)};
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "commensurate maximal entanglement", 1.0, commensurate},
        {2, "ideal-limit convergence", 1.0, ideal_limit},
        {3, "oracle equivalence", 30.0, oracle_equivalence},
        {4, "gapless closed forms", 5.0, gapless_closed_forms},
        {5, "power-law slope", 5.0, power_law_slope},
        {6, "gap implies steady-state entanglement", 10.0, gap_steady_state},
        {7, "monotonicity suite", 60.0, monotonicity},
        {8, "decoherence-free subspace", 5.0, decoherence_free_subspace},
    };

    bool all = true;
    bool threw_invalid = false;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const InvalidDensityError& e) {
            threw_invalid = true;
            o = {false, std::string("invalid density matrix: ") + e.what()};
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = elapsed < c.budget_seconds;
        const bool passed = o.passed && in_budget;
        all = all && passed;
        std::printf("%s %d %s [%.3f s / %.0f s budget%s]: %s\n", passed ? "PASS" : "FAIL", c.id, c.name, elapsed,
                    c.budget_seconds, in_budget ? "" : ", OVER BUDGET", o.detail.c_str());
    }

    const bool valid = track.invalid == 0 && !threw_invalid && track.checked > 0;
    all = all && valid;
    std::printf("%s 9 density-matrix validity: %ld matrices checked, %ld invalid%s%s\n", valid ? "PASS" : "FAIL",
                track.checked, track.invalid, track.first_failure.empty() ? "" : "; first: ",
                track.first_failure.c_str());

    std::printf("%s\n", all ? "ALL ACCEPTANCE CRITERIA PASSED" : "SOME ACCEPTANCE CRITERIA FAILED");
    return all ? 0 : 1;
}
