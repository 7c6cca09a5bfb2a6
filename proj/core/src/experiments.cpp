#include "twospin/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "twospin/parallel.hpp"

namespace twospin {

namespace {

// Ties within this slack count as monotone.
constexpr double kTrendSlack = 1e-9;

std::string version_line() { return std::string("twospin ") + TWOSPIN_VERSION_STRING; }

std::string describe(const OhmicGapSpectrum& s) {
    std::ostringstream os;
    os << "alpha=" << csv::format_number(s.alpha) << " gap=" << csv::format_number(s.omega0)
       << " omega_c=" << csv::format_number(s.omega_c) << " temperature=" << csv::format_number(s.temperature);
    return os.str();
}

std::string describe_grid(const std::vector<double>& g) {
    std::ostringstream os;
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? ";" : "") << csv::format_number(g[i]);
    return os.str();
}

void require_nonempty(const std::vector<double>& g, const char* what) {
    if (g.empty()) throw std::invalid_argument(std::string(what) + " must not be empty");
}

CheckResult make_check(std::string name, bool passed, std::string detail) {
    return {std::move(name), passed, std::move(detail)};
}

// Rows grouped by the value in key_col, ordered by the value in axis_col.
std::map<double, std::vector<std::pair<double, const std::vector<double>*>>> group_by(const csv::Table& t,
                                                                                         std::size_t key_col,
                                                                                         std::size_t axis_col) {
    std::map<double, std::vector<std::pair<double, const std::vector<double>*>>> groups;
    for (const auto& row : t.rows) groups[row[key_col]].emplace_back(row[axis_col], &row);
    for (auto& [key, rows] : groups)
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return groups;
}

// direction +1: nondecreasing, -1: nonincreasing.
CheckResult check_trend(const std::string& name, const csv::Table& t, const std::string& key,
                        const std::string& axis, const std::string& value, int direction, bool skip_zero_key) {
    const std::size_t kc = t.column(key), ac = t.column(axis), vc = t.column(value);
    const std::size_t fc = t.column("no_steady_state[flag]");
    std::size_t checked = 0;
    for (const auto& [k, rows] : group_by(t, kc, ac)) {
        if (skip_zero_key && k == 0.0) continue;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto& prev = *rows[i - 1].second;
            const auto& cur = *rows[i].second;
            if (prev[fc] != 0.0 || cur[fc] != 0.0) continue;
            ++checked;
            const double delta = direction * (cur[vc] - prev[vc]);
            if (delta < -kTrendSlack) {
                std::ostringstream os;
                os << value << " breaks trend at " << key << "=" << k << " between " << axis << "=" << rows[i - 1].first
                   << " (" << prev[vc] << ") and " << rows[i].first << " (" << cur[vc] << ")";
                return make_check(name, false, os.str());
            }
        }
    }
    return make_check(name, true, std::to_string(checked) + " adjacent pairs checked");
}

}  // namespace

void Axis::validate() const {
    if (points < 2) throw std::invalid_argument("axis '" + name + "': points must be >= 2");
    if (!(min < max)) throw std::invalid_argument("axis '" + name + "': min must be < max");
    if (scale == AxisScale::log && !(min > 0.0))
        throw std::invalid_argument("axis '" + name + "': log axis requires min > 0");
}

std::vector<double> Axis::values() const {
    validate();
    std::vector<double> v(static_cast<std::size_t>(points));
    const double last = static_cast<double>(points - 1);
    for (int i = 0; i < points; ++i) {
        const double f = static_cast<double>(i) / last;
        v[static_cast<std::size_t>(i)] =
            scale == AxisScale::linear ? min + f * (max - min) : min * std::pow(max / min, f);
    }
    v.back() = max;
    return v;
}

void SweepSpec::validate() const {
    for (const auto& a : axes) a.validate();
}

std::vector<Fig2Row> fig2_sweep(double n_min, double n_max, int n_points, int samples_per_period) {
    if (!(n_min >= kFig2MinN)) throw std::invalid_argument("fig2_sweep: n_min must be >= 0.25");
    const Axis axis{"n", n_min, n_max, n_points, AxisScale::linear};
    const auto ns = axis.values();
    std::vector<Fig2Row> rows(ns.size());
    parallel_for(ns.size(), [&](std::size_t i) {
        const double ratio = ratio_for_commensurability(ns[i]);
        const PeriodStats s =
            period_stats(SingleModeParams::from_ratio(ratio), QubitAmplitudes::uniform(), samples_per_period);
        rows[i] = {ns[i], ratio, s.c_max, s.s_max, s.c_avg, s.s_avg};
    });
    return rows;
}

csv::Table fig2_table(const std::vector<Fig2Row>& rows) {
    csv::Table t;
    t.metadata = {version_line(), "table: single-mode period statistics over 0 <= theta t < pi/2",
                  "amplitudes: uniform (1/2, 1/2, 1/2, 1/2)", "units: hbar = 1, lambda = 1; entropy in bits"};
    t.header = {"n[-]", "omega_over_lambda[-]", "C_max[-]", "S_max[bits]", "C_avg[-]", "S_avg[bits]"};
    for (const auto& r : rows) t.add_row({r.n, r.omega_over_lambda, r.c_max, r.s_max, r.c_avg, r.s_avg});
    return t;
}

std::vector<OhmicGapSpectrum> default_fig3_specs() {
    return {{0.25, 0.0}, {0.25, 0.01}, {0.25, 0.1}, {0.5, 0.0}, {0.5, 0.01}, {0.5, 0.1}};
}

Fig3Result fig3_series(const std::vector<OhmicGapSpectrum>& specs, const std::vector<double>& t_grid) {
    if (specs.empty()) throw std::invalid_argument("fig3_series: spec list must not be empty");
    require_nonempty(t_grid, "fig3_series: t_grid");
    Fig3Result r{specs, t_grid, {}};
    r.series.reserve(specs.size());
    for (const auto& s : specs) r.series.push_back(bath_time_series(s, QubitAmplitudes::uniform(), t_grid));
    return r;
}

csv::Table fig3_decoherence_table(const Fig3Result& result) {
    csv::Table t;
    t.metadata = {version_line(), "table: bath decoherence factor exp(-Gamma_R) vs time",
                  "units: hbar = k_B = 1, omega_c = 1"};
    t.header = {"omega_c_t[-]"};
    for (std::size_t s = 0; s < result.specs.size(); ++s) {
        t.metadata.push_back("spec " + std::to_string(s + 1) + ": " + describe(result.specs[s]));
        t.header.push_back("exp_neg_gamma_r_" + std::to_string(s + 1) + "[-]");
    }
    for (std::size_t k = 0; k < result.t_grid.size(); ++k) {
        std::vector<double> row{result.t_grid[k]};
        for (std::size_t s = 0; s < result.specs.size(); ++s)
            row.push_back(result.series[s][k].overlap);
        t.add_row(std::move(row));
    }
    return t;
}

csv::Table fig3_entanglement_table(const Fig3Result& result, std::size_t spec_index) {
    const auto& spec = result.specs.at(spec_index);
    csv::Table t;
    t.metadata = {version_line(), "table: bath-driven entanglement vs time", "spec: " + describe(spec),
                  "amplitudes: uniform (1/2, 1/2, 1/2, 1/2)", "units: hbar = k_B = 1, omega_c = 1; entropy in bits"};
    t.header = {"omega_c_t[-]", "theta_t[rad]", "gamma_r[-]", "gamma_i[-]", "C[-]",
                "two_thirds_S[bits]", "S[bits]", "exp_neg_gamma_r[-]"};
    for (const auto& p : result.series.at(spec_index))
        t.add_row({p.t * spec.omega_c, p.theta_t, p.gamma_r, p.gamma_i, p.concurrence, 2.0 * p.entropy / 3.0,
                   p.entropy, p.overlap});
    return t;
}

Fig4Result fig4_sweep(const std::vector<double>& alpha_grid, const std::vector<double>& gap_grid,
                      const std::vector<double>& temperature_grid, double thermal_alpha,
                      double coupling_temperature, int phase_samples) {
    require_nonempty(alpha_grid, "fig4_sweep: alpha grid");
    require_nonempty(gap_grid, "fig4_sweep: gap grid");
    require_nonempty(temperature_grid, "fig4_sweep: temperature grid");

    Fig4Result r;
    r.alpha_grid = alpha_grid;
    r.gap_grid = gap_grid;
    r.temperature_grid = temperature_grid;
    r.thermal_alpha = thermal_alpha;
    r.coupling_temperature = coupling_temperature;

    const std::size_t ng = gap_grid.size();
    r.coupling_cells.resize(alpha_grid.size() * ng);
    parallel_for(r.coupling_cells.size(), [&](std::size_t idx) {
        SteadyCell& c = r.coupling_cells[idx];
        c.alpha = alpha_grid[idx / ng];
        c.gap = gap_grid[idx % ng];
        c.temperature = coupling_temperature;
        const OhmicGapSpectrum spec{c.alpha, c.gap, 1.0, c.temperature};
        const auto stats = steady_state_stats(spec, QubitAmplitudes::uniform(), phase_samples);
        c.no_steady_state = !stats;
        if (stats) {
            c.c_max_steady = stats->c_max_steady;
            c.s_steady = stats->s_steady;
            c.decoherence_inf = std::exp(-stats->gamma_r_inf);
        }
    });

    r.thermal_cells.resize(temperature_grid.size() * ng);
    parallel_for(r.thermal_cells.size(), [&](std::size_t idx) {
        SteadyCell& c = r.thermal_cells[idx];
        c.alpha = thermal_alpha;
        c.temperature = temperature_grid[idx / ng];
        c.gap = gap_grid[idx % ng];
        const auto g_inf = gamma_R_infinity({c.alpha, c.gap, 1.0, c.temperature});
        c.no_steady_state = !g_inf;
        if (g_inf) c.decoherence_inf = std::exp(-*g_inf);
    });
    return r;
}

namespace {

std::vector<std::string> fig4_metadata(const Fig4Result& r, const std::string& what) {
    return {version_line(),
            "table: " + what,
            "alpha grid: " + describe_grid(r.alpha_grid),
            "gap grid: " + describe_grid(r.gap_grid),
            "temperature grid: " + describe_grid(r.temperature_grid),
            "thermal-table alpha: " + csv::format_number(r.thermal_alpha),
            "coupling-table temperature: " + csv::format_number(r.coupling_temperature),
            "amplitudes: uniform (1/2, 1/2, 1/2, 1/2)",
            "units: hbar = k_B = 1, omega_c = 1; entropy in bits",
            "sentinel: -1 with no_steady_state = 1 marks a bath without a steady state"};
}

}  // namespace

csv::Table fig4_concurrence_table(const Fig4Result& r) {
    csv::Table t;
    t.metadata = fig4_metadata(r, "steady-state maximum concurrence over the residual phase");
    t.header = {"alpha[-]", "gap[omega_c]", "C_max_steady[-]", "no_steady_state[flag]"};
    for (const auto& c : r.coupling_cells) t.add_row({c.alpha, c.gap, c.c_max_steady, c.no_steady_state ? 1.0 : 0.0});
    return t;
}

csv::Table fig4_entropy_table(const Fig4Result& r) {
    csv::Table t;
    t.metadata = fig4_metadata(r, "steady-state entropy");
    t.header = {"alpha[-]", "gap[omega_c]", "S_steady[bits]", "no_steady_state[flag]"};
    for (const auto& c : r.coupling_cells) t.add_row({c.alpha, c.gap, c.s_steady, c.no_steady_state ? 1.0 : 0.0});
    return t;
}

csv::Table fig4_decoherence_table(const Fig4Result& r) {
    csv::Table t;
    t.metadata = fig4_metadata(r, "long-time decoherence factor exp(-Gamma_R(inf))");
    t.header = {"temperature[omega_c]", "gap[omega_c]", "exp_neg_gamma_r_inf[-]", "no_steady_state[flag]"};
    for (const auto& c : r.thermal_cells)
        t.add_row({c.temperature, c.gap, c.decoherence_inf, c.no_steady_state ? 1.0 : 0.0});
    return t;
}

std::vector<CheckResult> check_fig2_table(const csv::Table& table) {
    const std::size_t nc = table.column("n[-]");
    const std::size_t cc = table.column("C_avg[-]");
    const std::size_t sc = table.column("S_avg[bits]");
    std::vector<const std::vector<double>*> integer_rows;
    for (const auto& row : table.rows)
        if (row[nc] >= 1.0 && std::abs(row[nc] - std::round(row[nc])) < 1e-9) integer_rows.push_back(&row);
    std::sort(integer_rows.begin(), integer_rows.end(),
              [nc](const auto* a, const auto* b) { return (*a)[nc] < (*b)[nc]; });

    auto trend = [&](const std::string& name, std::size_t col, int direction) {
        for (std::size_t i = 1; i < integer_rows.size(); ++i) {
            const double delta = direction * ((*integer_rows[i])[col] - (*integer_rows[i - 1])[col]);
            if (delta < -kTrendSlack) {
                std::ostringstream os;
                os << "trend broken between n=" << (*integer_rows[i - 1])[nc] << " and n=" << (*integer_rows[i])[nc];
                return make_check(name, false, os.str());
            }
        }
        return make_check(name, true, std::to_string(integer_rows.size()) + " integer-n rows checked");
    };
    return {trend("fig2: C_avg nondecreasing in integer n", cc, +1),
            trend("fig2: S_avg nonincreasing in integer n", sc, -1)};
}

std::vector<CheckResult> check_fig4_tables(const csv::Table& concurrence, const csv::Table& entropy,
                                           const csv::Table& decoherence) {
    std::vector<CheckResult> out;

    auto sentinel_check = [](const std::string& name, const csv::Table& t, const std::string& value) {
        const std::size_t ac = t.column("alpha[-]"), gc = t.column("gap[omega_c]"), vc = t.column(value);
        const std::size_t fc = t.column("no_steady_state[flag]");
        for (const auto& row : t.rows) {
            const bool expected = row[gc] == 0.0 && row[ac] > 0.0;
            const bool flagged = row[fc] != 0.0;
            if (flagged != expected)
                return make_check(name, false, "flag disagrees with gap at alpha=" + csv::format_number(row[ac]) +
                                                   " gap=" + csv::format_number(row[gc]));
            if (flagged && row[vc] != kNoSteadyStateSentinel)
                return make_check(name, false, "flagged cell without -1 sentinel");
        }
        return make_check(name, true, std::to_string(t.rows.size()) + " cells checked");
    };
    out.push_back(sentinel_check("fig4a: gapless cells are no-steady-state sentinels", concurrence, "C_max_steady[-]"));
    out.push_back(sentinel_check("fig4b: gapless cells are no-steady-state sentinels", entropy, "S_steady[bits]"));

    out.push_back(check_trend("fig4a: C_max_steady nonincreasing in alpha", concurrence, "gap[omega_c]", "alpha[-]",
                              "C_max_steady[-]", -1, true));
    out.push_back(check_trend("fig4b: S_steady nondecreasing in alpha", entropy, "gap[omega_c]", "alpha[-]",
                              "S_steady[bits]", +1, true));
    out.push_back(check_trend("fig4c: exp(-Gamma_R(inf)) nonincreasing in T", decoherence, "gap[omega_c]",
                              "temperature[omega_c]", "exp_neg_gamma_r_inf[-]", -1, true));
    out.push_back(check_trend("fig4c: exp(-Gamma_R(inf)) nondecreasing in gap", decoherence, "temperature[omega_c]",
                              "gap[omega_c]", "exp_neg_gamma_r_inf[-]", +1, false));
    return out;
}

}  // namespace twospin
