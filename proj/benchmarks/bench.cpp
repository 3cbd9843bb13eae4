#include <benchmark/benchmark.h>

#include "eband/linkbudget.hpp"
#include "eband/mimo.hpp"
#include "eband/phasenoise.hpp"
#include "eband/propagation.hpp"
#include "eband/units.hpp"

namespace {

eband::LinkScenario reference_scenario() {
    eband::LinkScenario s;
    s.freq_hz = 73.5e9;
    s.distance_m = 1000.0;
    s.tx_power_dbm = 18.6;
    s.tx_gain_dbi = 43.0;
    s.rx_gain_dbi = 43.0;
    s.rx_threshold_dbm = -58.0;
    s.bandwidth_hz = 1e9;
    return s;
}

void bm_budget(benchmark::State& state) {
    const auto s = reference_scenario();
    const eband::RainContext rain{eband::RainModel::itu, eband::Polarization::H,
                                  eband::RainExceedanceTable::preset("K")};
    for (auto _ : state) benchmark::DoNotOptimize(eband::budget(s, rain));
}
BENCHMARK(bm_budget);

void bm_max_range(benchmark::State& state) {
    const auto s = reference_scenario();
    const eband::RainContext rain{eband::RainModel::itu, eband::Polarization::H,
                                  eband::RainExceedanceTable::preset("K")};
    for (auto _ : state) benchmark::DoNotOptimize(eband::max_range(s, rain));
}
BENCHMARK(bm_max_range);

void bm_path_attenuation_itu(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(eband::path_attenuation_itu(30.0, 75.0, eband::Polarization::H, 1.0));
}
BENCHMARK(bm_path_attenuation_itu);

void bm_synthesize_phase(benchmark::State& state) {
    const eband::PhaseNoiseProfile profile({{2, 100.0}, {0, 1e-11}}, 70e9, 1.0, 1e12);
    eband::SynthesisConfig cfg;
    cfg.symbol_rate_hz = 1e9;
    cfg.n_symbols = static_cast<std::size_t>(state.range(0));
    cfg.stream = {42, 1};
    for (auto _ : state) benchmark::DoNotOptimize(eband::synthesize_phase(profile, cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_synthesize_phase)->Arg(1 << 14)->Arg(1 << 18);

void bm_los_svd(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double lam = eband::wavelength_m(80e9);
    const double d = eband::rayleigh_spacing(200.0, lam, n);
    const auto tx = eband::ArrayGeometry::linear(n, d, 30.0);
    const auto ch = eband::los_channel(tx, tx, lam, 200.0);
    for (auto _ : state) benchmark::DoNotOptimize(eband::singular_values(ch.h));
}
BENCHMARK(bm_los_svd)->Arg(4)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
