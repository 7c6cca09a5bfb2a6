// experiments.hpp: sweep drivers that regenerate the tabular data behind the figures

#pragma once

#include <map>
#include <string>
#include <vector>

#include "twospin/bath.hpp"
#include "twospin/csv.hpp"
#include "twospin/single_mode.hpp"

namespace twospin {

enum class AxisScale { linear, log };

struct Axis {
    std::string name;
    double min = 0.0;
    double max = 1.0;
    int points = 2;
    AxisScale scale = AxisScale::linear;

    // points >= 2, min < max, log axes need min > 0.
    void validate() const;
    std::vector<double> values() const;
};

struct SweepSpec {
    std::vector<Axis> axes;
    std::map<std::string, double> fixed;
    std::string output_path;

    void validate() const;
};

// Numeric stand-in for "no steady state" cells; always paired with a flag column.
inline constexpr double kNoSteadyStateSentinel = -1.0;

// ---- single mode, period statistics vs n = (omega / 4 lambda)^2 ----

struct Fig2Row {
    double n = 0.0;
    double omega_over_lambda = 0.0;
    double c_max = 0.0;
    double s_max = 0.0;
    double c_avg = 0.0;
    double s_avg = 0.0;
};

inline constexpr double kFig2MinN = 0.25;

// Uniform amplitudes; n on a linear axis. Requires n_min >= 0.25.
std::vector<Fig2Row> fig2_sweep(double n_min, double n_max, int n_points,
                                int samples_per_period = kDefaultSamplesPerPeriod);
csv::Table fig2_table(const std::vector<Fig2Row>& rows);

// ---- bath decoherence and entanglement vs time ----

// The six (gap, alpha) legend pairs: (0, .25) (.01, .25) (.1, .25) (0, .5) (.01, .5) (.1, .5).
std::vector<OhmicGapSpectrum> default_fig3_specs();

struct Fig3Result {
    std::vector<OhmicGapSpectrum> specs;
    std::vector<double> t_grid;
    // series[s][k]: spec s at t_grid[k], uniform amplitudes.
    std::vector<std::vector<BathTimePoint>> series;
};

Fig3Result fig3_series(const std::vector<OhmicGapSpectrum>& specs, const std::vector<double>& t_grid);
// Columns: omega_c t, then exp(-Gamma_R) per spec.
csv::Table fig3_decoherence_table(const Fig3Result& result);
// Columns: omega_c t, theta t, C, 2S/3, exp(-Gamma_R) for one spec.
csv::Table fig3_entanglement_table(const Fig3Result& result, std::size_t spec_index);

// ---- steady state over (alpha, gap) and (T, gap) ----

struct SteadyCell {
    double alpha = 0.0;
    double gap = 0.0;
    double temperature = 0.0;
    bool no_steady_state = false;
    double c_max_steady = kNoSteadyStateSentinel;
    double s_steady = kNoSteadyStateSentinel;
    double decoherence_inf = kNoSteadyStateSentinel;  // exp(-Gamma_R(inf))
};

struct Fig4Result {
    std::vector<double> alpha_grid, gap_grid, temperature_grid;
    double thermal_alpha = 0.25;
    double coupling_temperature = 0.0;
    std::vector<SteadyCell> coupling_cells;  // row-major (alpha, gap)
    std::vector<SteadyCell> thermal_cells;   // row-major (temperature, gap)
};

Fig4Result fig4_sweep(const std::vector<double>& alpha_grid, const std::vector<double>& gap_grid,
                      const std::vector<double>& temperature_grid, double thermal_alpha = 0.25,
                      double coupling_temperature = 0.0, int phase_samples = kDefaultPhaseSamples);
csv::Table fig4_concurrence_table(const Fig4Result& result);
csv::Table fig4_entropy_table(const Fig4Result& result);
csv::Table fig4_decoherence_table(const Fig4Result& result);

// ---- post-hoc checks on emitted tables ----

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// C_avg nondecreasing and S_avg nonincreasing over the integer-n rows.
std::vector<CheckResult> check_fig2_table(const csv::Table& table);
// Gapless cells are sentinels; at each gap > 0 C_max is nonincreasing and S
// nondecreasing in alpha; exp(-Gamma_R(inf)) nonincreasing in T and
// nondecreasing in the gap.
std::vector<CheckResult> check_fig4_tables(const csv::Table& concurrence, const csv::Table& entropy,
                                           const csv::Table& decoherence);

}  // namespace twospin
