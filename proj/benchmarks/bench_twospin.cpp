#include <benchmark/benchmark.h>

#include <numbers>

#include "twospin/bath.hpp"
#include "twospin/fock_oracle.hpp"
#include "twospin/random_states.hpp"
#include "twospin/single_mode.hpp"

using namespace twospin;

static void Concurrence(benchmark::State& state) {
    random::Engine rng(1);
    const auto rho = random::mixed_state(rng);
    for (auto _ : state) benchmark::DoNotOptimize(concurrence(rho));
}
BENCHMARK(Concurrence);

static void Entropy(benchmark::State& state) {
    random::Engine rng(2);
    const auto rho = random::mixed_state(rng);
    for (auto _ : state) benchmark::DoNotOptimize(von_neumann_entropy(rho));
}
BENCHMARK(Entropy);

static void ReducedDensity(benchmark::State& state) {
    const auto p = SingleModeParams::from_ratio(5.0);
    for (auto _ : state) benchmark::DoNotOptimize(reduced_density(QubitAmplitudes::uniform(), 0.7, gamma_single_mode(p, 1.4)));
}
BENCHMARK(ReducedDensity);

// omega_c t = range(0)
static void GammaR(benchmark::State& state) {
    OhmicGapSpectrum s;
    s.omega0 = 0.1;
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gamma_R(s, t));
}
BENCHMARK(GammaR)->Arg(1)->Arg(10)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void GammaRInfinity(benchmark::State& state) {
    OhmicGapSpectrum s;
    s.omega0 = 0.1;
    s.temperature = 0.5;
    for (auto _ : state) benchmark::DoNotOptimize(gamma_R_infinity(s));
}
BENCHMARK(GammaRInfinity)->Unit(benchmark::kMicrosecond);

// omega/lambda = range(0) / 4
static void FockOracle(benchmark::State& state) {
    const auto p = SingleModeParams::from_ratio(state.range(0) / 4.0);
    const double t = (std::numbers::pi / 4.0) / p.theta();
    for (auto _ : state) benchmark::DoNotOptimize(evolve_auto(p, QubitAmplitudes::uniform(), t));
}
BENCHMARK(FockOracle)->Arg(2)->Arg(4)->Arg(16)->Arg(80)->Unit(benchmark::kMicrosecond);

static void PeriodStatsSweep(benchmark::State& state) {
    const auto p = SingleModeParams::from_ratio(4.0);
    for (auto _ : state) benchmark::DoNotOptimize(period_stats(p, QubitAmplitudes::uniform(), static_cast<int>(state.range(0))));
}
BENCHMARK(PeriodStatsSweep)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

static void SteadyState(benchmark::State& state) {
    OhmicGapSpectrum s;
    s.omega0 = 0.1;
    for (auto _ : state) benchmark::DoNotOptimize(steady_state_stats(s, QubitAmplitudes::uniform()));
}
BENCHMARK(SteadyState)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
