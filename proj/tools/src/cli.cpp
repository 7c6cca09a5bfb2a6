#include "twospin/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "twospin/experiments.hpp"
#include "twospin/fock_oracle.hpp"
#include "twospin/verification.hpp"

namespace twospin::cli {

namespace {

std::string version_line() { return std::string("twospin ") + TWOSPIN_VERSION_STRING; }

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

double parse_number(const std::string& text) {
    const std::string t = trim(text);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (t.empty() || used != t.size() || !std::isfinite(v)) throw std::invalid_argument("not a number: '" + text + "'");
    return v;
}

std::string command_line(const std::vector<std::string>& args) {
    std::string s = "command: twospin";
    for (const auto& a : args) s += " " + a;
    return s;
}

// Writes the table to `out` for "-", otherwise to the named file.
void emit(const csv::Table& table, const std::string& path, std::ostream& out) {
    if (path == "-") {
        csv::write(out, table);
    } else {
        csv::write_file(path, table);
    }
}

int report(const std::vector<CheckResult>& checks, std::ostream& out) {
    bool ok = true;
    for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << '\n';
        ok = ok && c.passed;
    }
    out << (ok ? "all checks passed" : "some checks failed") << " (" << checks.size() << ")\n";
    return ok ? kOk : kCheckFailed;
}

}  // namespace

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::vector<double> parse_grid(const std::string& text) {
    if (text.find(':') == std::string::npos) return parse_list(text);
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw std::invalid_argument("grid '" + text + "' is not min:max:points");
    const double pts = parse_number(parts[2]);
    if (pts != std::floor(pts) || pts < 2 || pts > 1e6)
        throw std::invalid_argument("grid '" + text + "': points must be an integer >= 2");
    Axis axis{"grid", parse_number(parts[0]), parse_number(parts[1]), static_cast<int>(pts), AxisScale::linear};
    return axis.values();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two qubits coupled to a common bosonic environment: exact dynamics, sweeps, checks", "twospin"};
    app.set_version_flag("--version", version_line());
    app.require_subcommand(1);

    std::function<int()> action;

    // single-mode
    auto* sm = app.add_subcommand("single-mode", "Time series of C, C_ideal and S for one harmonic mode");
    double sm_ratio = 0.0, sm_theta_max = std::numbers::pi / 2.0;
    int sm_points = 629;
    std::string sm_amps, sm_out = "-";
    bool sm_normalize = false;
    sm->add_option("--omega-over-lambda", sm_ratio, "Mode frequency in units of lambda")->required();
    sm->add_option("--theta-t-max", sm_theta_max, "Last theta t on the grid")->capture_default_str();
    sm->add_option("--points", sm_points, "Grid points, including theta t = 0")->capture_default_str();
    sm->add_option("--amplitudes", sm_amps, "Initial amplitudes a,b,c,d (default 1/2 each)");
    sm->add_flag("--normalize", sm_normalize, "Rescale --amplitudes to unit norm");
    sm->add_option("-o,--output", sm_out, "Output CSV, - for stdout")->capture_default_str();
    sm->callback([&] {
        action = [&] {
            const auto params = SingleModeParams::from_ratio(sm_ratio);
            QubitAmplitudes psi = QubitAmplitudes::uniform();
            if (!sm_amps.empty()) {
                const auto v = parse_list(sm_amps);
                if (v.size() != 4) throw std::invalid_argument("--amplitudes needs exactly four values a,b,c,d");
                psi = {v[0], v[1], v[2], v[3]};
                if (sm_normalize) {
                    const double norm = std::sqrt(psi.squared_norm());
                    if (norm == 0.0) throw std::invalid_argument("--amplitudes: zero vector cannot be normalized");
                    psi = QubitAmplitudes::from_vector(psi.vector() / norm);
                }
                if (!psi.normalized())
                    throw std::invalid_argument("invariant |a|^2+|b|^2+|c|^2+|d|^2 = 1 violated (use --normalize)");
            }
            if (!(sm_theta_max > 0.0) || !std::isfinite(sm_theta_max))
                throw std::invalid_argument("invariant theta-t-max > 0 violated");
            if (sm_points < 2) throw std::invalid_argument("invariant points >= 2 violated");
            if (params.lambda() == 0.0) throw std::invalid_argument("lambda must be > 0 for a theta t grid");

            std::vector<double> grid(static_cast<std::size_t>(sm_points));
            for (int k = 0; k < sm_points; ++k)
                grid[static_cast<std::size_t>(k)] = sm_theta_max * k / (sm_points - 1) / params.theta();
            const auto series = time_series(params, psi, grid);

            csv::Table t;
            t.metadata = {version_line(), command_line(args), "table: single-mode entanglement vs time (lambda = 1)",
                          "omega_over_lambda=" + csv::format_number(sm_ratio),
                          "theta=" + csv::format_number(params.theta()),
                          "amplitudes=" + csv::format_number(psi.a.real()) + "," + csv::format_number(psi.b.real()) +
                              "," + csv::format_number(psi.c.real()) + "," + csv::format_number(psi.d.real())};
            t.header = {"t[1/lambda]", "theta_t[rad]", "C[-]", "C_ideal[-]", "S[bits]", "two_thirds_S[bits]",
                        "exp_neg_gamma_r[-]"};
            for (const auto& p : series)
                t.add_row({p.t, p.theta_t, p.concurrence, p.ideal_concurrence, p.entropy, 2.0 * p.entropy / 3.0,
                           p.overlap});
            emit(t, sm_out, out);
            return int{kOk};
        };
    });

    // period-stats
    auto* ps = app.add_subcommand("period-stats", "C_max, S_max, C_avg, S_avg over one entangling period vs n");
    double ps_min = 0.5, ps_max = 12.0;
    int ps_points = 47, ps_samples = kDefaultSamplesPerPeriod;
    std::string ps_out = "-";
    ps->add_option("--n-min", ps_min, "Smallest n = (omega / 4 lambda)^2")->capture_default_str();
    ps->add_option("--n-max", ps_max, "Largest n")->capture_default_str();
    ps->add_option("--n-points", ps_points, "Points on the n axis")->capture_default_str();
    ps->add_option("--samples-per-period", ps_samples)->capture_default_str();
    ps->add_option("-o,--output", ps_out, "Output CSV, - for stdout")->capture_default_str();
    ps->callback([&] {
        action = [&] {
            csv::Table t = fig2_table(fig2_sweep(ps_min, ps_max, ps_points, ps_samples));
            t.metadata.insert(t.metadata.begin() + 1, command_line(args));
            emit(t, ps_out, out);
            return int{kOk};
        };
    });

    // bath-series
    auto* bs = app.add_subcommand("bath-series", "Decoherence and entanglement vs time for a gapped Ohmic bath");
    OhmicGapSpectrum bs_spec;
    double bs_t_max = 1000.0;
    int bs_points = 400;
    bool bs_log = false;
    std::string bs_out = "-";
    bs->add_option("--alpha", bs_spec.alpha, "Coupling strength")->capture_default_str();
    bs->add_option("--gap", bs_spec.omega0, "Gap omega_0 in units of omega_c")->capture_default_str();
    bs->add_option("--temperature", bs_spec.temperature, "Temperature in units of omega_c")->capture_default_str();
    bs->add_option("--t-max", bs_t_max, "Last omega_c t")->capture_default_str();
    bs->add_option("--points", bs_points, "Time points")->capture_default_str();
    bs->add_flag("--log-time", bs_log, "Log-spaced times from t-max/1e4 (default: linear from 0)");
    bs->add_option("-o,--output", bs_out, "Output CSV, - for stdout")->capture_default_str();
    bs->callback([&] {
        action = [&] {
            bs_spec.validate();
            Axis axis{"t", bs_log ? bs_t_max * 1e-4 : 0.0, bs_t_max, bs_points,
                      bs_log ? AxisScale::log : AxisScale::linear};
            const Fig3Result r = fig3_series({bs_spec}, axis.values());
            csv::Table t = fig3_entanglement_table(r, 0);
            t.metadata.insert(t.metadata.begin() + 1, command_line(args));
            emit(t, bs_out, out);
            return int{kOk};
        };
    });

    // steady-sweep
    auto* ss = app.add_subcommand("steady-sweep", "Steady-state C_max, S and exp(-Gamma_R(inf)) over (alpha, gap, T)");
    std::string ss_alpha, ss_gap, ss_temp = "0:2:32", ss_prefix = "steady";
    double ss_thermal_alpha = 0.25;
    int ss_phase = kDefaultPhaseSamples;
    ss->add_option("--alpha-grid", ss_alpha, "min:max:points or comma list, e.g. 0.05:1:32")->required();
    ss->add_option("--gap-grid", ss_gap, "min:max:points or comma list, e.g. 0:0.5:32")->required();
    ss->add_option("--temperature-grid", ss_temp, "Temperatures for the decoherence table")->capture_default_str();
    ss->add_option("--thermal-alpha", ss_thermal_alpha, "alpha used for the temperature table")->capture_default_str();
    ss->add_option("--phase-samples", ss_phase, "Residual-phase samples per cell")->capture_default_str();
    ss->add_option("--output-prefix", ss_prefix,
                   "Writes <prefix>_concurrence.csv, <prefix>_entropy.csv, <prefix>_decoherence.csv")
        ->capture_default_str();
    ss->callback([&] {
        action = [&] {
            const Fig4Result r =
                fig4_sweep(parse_grid(ss_alpha), parse_grid(ss_gap), parse_grid(ss_temp), ss_thermal_alpha, 0.0, ss_phase);
            csv::Table tc = fig4_concurrence_table(r), te = fig4_entropy_table(r), td = fig4_decoherence_table(r);
            for (auto* t : {&tc, &te, &td}) t->metadata.insert(t->metadata.begin() + 1, command_line(args));
            csv::write_file(ss_prefix + "_concurrence.csv", tc);
            csv::write_file(ss_prefix + "_entropy.csv", te);
            csv::write_file(ss_prefix + "_decoherence.csv", td);
            out << "wrote " << ss_prefix << "_concurrence.csv, " << ss_prefix << "_entropy.csv, " << ss_prefix
                << "_decoherence.csv\n";
            return int{kOk};
        };
    });

    // oracle-check
    auto* oc = app.add_subcommand("oracle-check", "Closed-form rho(t) against the truncated-Fock propagator");
    double oc_tol = 1e-7;
    oc->add_option("--tolerance", oc_tol, "Trace-distance bound")->capture_default_str();
    oc->callback([&] {
        action = [&] {
            if (!(oc_tol > 0.0)) throw std::invalid_argument("invariant tolerance > 0 violated");
            std::vector<CheckResult> checks;
            for (const auto& c : oracle_equivalence_suite(oc_tol)) {
                std::ostringstream name, detail;
                name << "omega/lambda=" << csv::format_number(c.omega_over_lambda)
                     << " theta_t=" << csv::format_number(c.theta_t);
                detail << "trace distance " << c.distance << " (n_cut " << c.n_cut << ")";
                checks.push_back({name.str(), c.passed, detail.str()});
            }
            return report(checks, out);
        };
    });

    // verify
    auto* vf = app.add_subcommand("verify", "Run every property suite; optionally re-check emitted tables");
    VerifyOptions vf_opt;
    std::string vf_fig2, vf_steady;
    vf->add_option("--seed", vf_opt.seed, "Seed for random property trials")->capture_default_str();
    vf->add_option("--trials", vf_opt.random_trials, "Random trials per property")->capture_default_str();
    vf->add_option("--fig2", vf_fig2, "period-stats CSV to re-check");
    vf->add_option("--steady-prefix", vf_steady, "steady-sweep output prefix to re-check");
    vf->callback([&] {
        action = [&] {
            if (vf_opt.random_trials < 1) throw std::invalid_argument("invariant trials >= 1 violated");
            auto checks = run_property_suite(vf_opt);
            if (!vf_fig2.empty()) {
                const auto more = check_fig2_table(csv::read_file(vf_fig2));
                checks.insert(checks.end(), more.begin(), more.end());
            }
            if (!vf_steady.empty()) {
                const auto more = check_fig4_tables(csv::read_file(vf_steady + "_concurrence.csv"),
                                                    csv::read_file(vf_steady + "_entropy.csv"),
                                                    csv::read_file(vf_steady + "_decoherence.csv"));
                checks.insert(checks.end(), more.begin(), more.end());
            }
            return report(checks, out);
        };
    });

    std::vector<std::string> argv_store{"twospin"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << version_line() << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "twospin: " << e.what() << '\n';
        return kUsage;
    }

    try {
        return action();
    } catch (const std::invalid_argument& e) {
        err << "twospin: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "twospin: " << e.what() << '\n';
        return kCheckFailed;
    }
}

}  // namespace twospin::cli
