// Acceptance suite: one PASS/FAIL line per criterion, exit 0 only when
// every criterion passes. Run via ctest or directly.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "eband/scenario.hpp"
#include "eband/sweep.hpp"
#include "eband/units.hpp"

using namespace eband;

namespace {

const std::string kCli = EBAND_CLI_PATH;
const std::string kFixtures = std::string(EBAND_SOURCE_DIR) + "/tests/fixtures";

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("%s %s%s%s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!pass) ++g_failures;
}

bool approx(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::string run_cli(const std::string& args, int& exit_code) {
    const std::string out_file = "/tmp/eband_acceptance_out.txt";
    const int status = std::system((kCli + " " + args + " >" + out_file + " 2>/dev/null").c_str());
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::remove(out_file.c_str());
    return ss.str();
}

// 1. Regulatory fidelity: exact limits and the 19-channel CEPT plan.
void criterion_regulatory() {
    const auto fcc = domain_limits(Domain::FCC);
    const auto cept = domain_limits(Domain::CEPT);
    bool ok = fcc.max_eirp_dbw == 55.0 && fcc.max_tx_power_dbm == 35.0 && fcc.min_antenna_gain_dbi == 43.0 &&
              fcc.max_oob_dbm == -13.0 && cept.max_eirp_dbw == 55.0 && cept.max_tx_power_dbm == 30.0 &&
              cept.min_antenna_gain_dbi == 38.0 && cept.max_oob_dbm == -30.0;
    for (EBand band : {EBand::low, EBand::high}) {
        const auto plan = cept_channel_plan(band);
        ok = ok && plan.channels.size() == 19 && approx(plan.guard_hz, 125e6, 1.0);
        for (const auto& ch : plan.channels) ok = ok && approx(ch.high_hz - ch.low_hz, 250e6, 1.0);
        ok = ok && approx(plan.channels.front().low_hz, plan.band_low_hz + 125e6, 1.0) &&
             approx(plan.channels.back().high_hz, plan.band_high_hz - 125e6, 1.0);
    }
    report("1 regulatory limits exact, CEPT plan 19 x 250 MHz with 125 MHz guards", ok);
}

// 2. Budget fixture fade margin 32.8 +- 0.2 dB; +7 dB-offset series
// reports mean residual 7.0 +- 0.1 dB.
void criterion_budget_and_residual() {
    const auto s = Scenario::from_json_file(kFixtures + "/reference_link.json");
    const auto rep = budget(*s.link, s.rain->context());
    const bool margin_ok = approx(rep.fade_margin_db, 32.8, 0.2);

    AttenuationSeries series;
    bool residual_ok = true;
    for (int i = 0; i < 200; ++i) {
        const double rain = 0.5 * (i + 1);
        series.timestamps.push_back("t" + std::to_string(i));
        series.rain_mm_per_h.push_back(rain);
        series.measured_atten_db.push_back(
            path_attenuation(RainModel::itu, rain, 73.5, Polarization::H, 1.0) + 7.0);
    }
    const auto st = residual_analysis(series, RainModel::itu, 73.5, Polarization::H, 1.0);
    residual_ok = approx(st.mean_db, 7.0, 0.1);
    report("2 fade margin 32.8 +- 0.2 dB and +7 dB series mean residual 7.0 +- 0.1 dB",
           margin_ok && residual_ok,
           "margin=" + std::to_string(rep.fade_margin_db) + " residual=" + std::to_string(st.mean_db));
}

// 3. Cross-band ordering: wideband E-band BPSK link has a shorter max
// range but a higher data rate than a 23 GHz 256-QAM link.
void criterion_crossband() {
    const auto eb = Scenario::from_json_file(kFixtures + "/crossband_eband.json");
    const auto mw = Scenario::from_json_file(kFixtures + "/crossband_microwave.json");
    const auto r_eb = max_range(*eb.link, eb.rain->context());
    const auto r_mw = max_range(*mw.link, mw.rain->context());
    const double rate_eb = budget(*eb.link, eb.rain->context()).data_rate_bps;
    const double rate_mw = budget(*mw.link, mw.rain->context()).data_rate_bps;
    const bool ok = r_eb.feasible && r_mw.feasible && r_eb.distance_m < r_mw.distance_m && rate_eb > rate_mw;
    report("3 cross-band ordering: E-band shorter range, higher rate than 23 GHz",
           ok,
           "range " + std::to_string(r_eb.distance_m) + " < " + std::to_string(r_mw.distance_m) + " m, rate " +
               std::to_string(rate_eb / 1e9) + " > " + std::to_string(rate_mw / 1e9) + " Gb/s");
}

// 4. Phase noise: multiplier scaling, Wiener variance, Welch match,
// EVM crossover in the floor level.
void criterion_phase_noise() {
    bool mult_ok = true;
    {
        PhaseNoiseProfile p({{3, 1e3}, {2, 100.0}, {0, 1e-11}}, 10e9, 1.0, 1e12);
        const auto q = p.scaled_by_multiplier(7);
        for (double f : {1e2, 1e4, 1e6, 1e8})
            mult_ok = mult_ok && approx(q.psd_dbc_hz(f) - p.psd_dbc_hz(f), 20.0 * std::log10(7.0), 1e-9);
    }

    bool wiener_ok = true;
    {
        PhaseNoiseProfile p({{2, 100.0}}, 10e9, 1.0, 1e12);
        for (double fs : {5e8, 1e9}) {
            SynthesisConfig cfg;
            cfg.symbol_rate_hz = fs;
            cfg.n_symbols = 1'000'000;
            cfg.stream = {11, 1};
            const auto phase = synthesize_phase(p, cfg);
            double sq = 0.0;
            for (std::size_t i = 1; i < phase.size(); ++i)
                sq += (phase[i] - phase[i - 1]) * (phase[i] - phase[i - 1]);
            const double var = sq / (phase.size() - 1);
            const double expected = 2.0 * std::numbers::pi * std::numbers::pi * 100.0 / fs;
            wiener_ok = wiener_ok && std::abs(var / expected - 1.0) < 0.05;
        }
    }

    bool welch_ok = true;
    {
        PhaseNoiseProfile p({{2, 100.0}, {0, 1e-11}}, 10e9, 1.0, 1e12);
        const double fs = 1e9;
        SynthesisConfig cfg;
        cfg.symbol_rate_hz = fs;
        cfg.n_symbols = 1 << 22;
        cfg.stream = {12, 1};
        const auto phase = synthesize_phase(p, cfg);
        const std::size_t nseg = 1 << 16;
        const auto welch = welch_psd(phase, fs, nseg);
        for (double f0 = 10.0 * fs / nseg; f0 * 1.25 < fs / 4.0; f0 *= 1.25) {
            double est = 0.0, target = 0.0;
            int count = 0;
            for (std::size_t k = 1; k < welch.freq_hz.size(); ++k)
                if (welch.freq_hz[k] >= f0 && welch.freq_hz[k] < f0 * 1.25) {
                    est += welch.psd[k];
                    target += p.psd(welch.freq_hz[k]);
                    ++count;
                }
            if (count) welch_ok = welch_ok && std::abs(10.0 * std::log10(est / target)) < 2.0;
        }
    }

    // EVM crossover: sweep the floor with the shipped fixture; the
    // 1 GHz system must win at the lowest floor and lose at the highest.
    bool crossover_ok = true;
    {
        const auto s = Scenario::from_json_file(kFixtures + "/pn_crossover.json");
        const auto& pn = *s.phase_noise;
        auto evm_at = [&](double floor_db, double rate) {
            const auto profile = pn.profile.with_coeff(0, db_to_linear(floor_db));
            SynthesisConfig cfg;
            cfg.symbol_rate_hz = rate;
            cfg.n_symbols = pn.n_symbols;
            cfg.stream = {s.master_seed, static_cast<std::uint64_t>(floor_db < -100.0 ? 1 : 2) * 10 +
                                             (rate > 5e8 ? 1 : 0)};
            cfg.tracker = pn.tracker;
            return evm_monte_carlo(profile, cfg, pn.snr_db, pn.modulation, pn.trials).rms_evm_pct;
        };
        const double lo_slow = evm_at(-130.0, 1e8), lo_fast = evm_at(-130.0, 1e9);
        const double hi_slow = evm_at(-90.0, 1e8), hi_fast = evm_at(-90.0, 1e9);
        crossover_ok = lo_fast < lo_slow && hi_fast > hi_slow;
    }

    report("4 phase noise: x7 multiplier +16.90 dB, Wiener variance 5%, Welch 2 dB, EVM crossover",
           mult_ok && wiener_ok && welch_ok && crossover_ok);
}

// 5. MIMO: Rayleigh conditioning, element budget, capacity sweep
// orderings and asymptotes.
void criterion_mimo() {
    const double lam = kSpeedOfLight / 80e9;

    bool cond_ok = false;
    {
        const double d = rayleigh_spacing(200.0, lam, 4);
        const auto tx = ArrayGeometry::linear(4, d, 0.0);
        const auto sv = singular_values(los_channel(tx, tx, lam, 200.0).h);
        cond_ok = sv.front() / sv.back() <= 1.05;
    }

    const long budget_count = element_budget(0.1524, lam);
    const bool budget_ok = std::abs(budget_count - 6400.0) / 6400.0 <= 0.10;

    SystemPreset dish{SystemKind::dish, 55.0, 0, 1, 1, false, 0.0};
    SystemPreset conv{SystemKind::conv_mimo, 0, 30.0, 4, 1, false, 0.0};
    SystemPreset cap{SystemKind::cap_mimo, 55.0, 0, 1, 4, false, 0.0};

    bool order_ok = true;
    // low/high ordering over the documented -40..+60 sweep
    for (double rho = -40.0; rho <= 60.0; rho += 1.0) {
        const double c_dish = spectral_efficiency(dish, rho);
        const double c_conv = spectral_efficiency(conv, rho);
        const double c_cap = spectral_efficiency(cap, rho);
        order_ok = order_ok && c_cap >= std::max(c_dish, c_conv) - 1e-9;
    }
    order_ok = order_ok && spectral_efficiency(conv, 60.0) > spectral_efficiency(dish, 60.0);
    // The DISH/CONV crossover for these presets sits below -40 dB, so the
    // low-rho dominance check (and the CAP/DISH ratio limit) extends the
    // sweep down to -130 dB where both asymptotes are realized.
    order_ok = order_ok && spectral_efficiency(dish, -130.0) > spectral_efficiency(conv, -130.0);
    const double ratio = spectral_efficiency(cap, -130.0) / spectral_efficiency(dish, -130.0);
    order_ok = order_ok && approx(ratio, 1.0, 0.01);
    // CONV high-SNR slope: 4 bits per 3 dB
    const double slope = spectral_efficiency(conv, 60.0) - spectral_efficiency(conv, 57.0);
    order_ok = order_ok && approx(slope, 4.0, 0.05);

    report("5 mimo: condition <= 1.05, element budget within 10% of 6400, capacity orderings",
           cond_ok && budget_ok && order_ok, "elements=" + std::to_string(budget_count));
}

// 6. Relay: 3x aggregate at 2x span, half-duplex exactly half, AF
// (20 dB, 20 dB) -> 16.97 dB.
void criterion_relay() {
    const auto s = Scenario::from_json_file(kFixtures + "/relay_threebeam.json");
    const double bw = s.relay->hops.front().bandwidth_hz;
    const auto multi = chain_throughput(*s.relay, bw);

    RelayChain single = *s.relay;
    single.hops = {s.relay->hops.front()};
    single.parallel_beams = 1;
    const auto one = chain_throughput(single, bw);
    const bool triple_ok = approx(multi.bps / one.bps, 3.000, 1e-6);
    const double span = s.relay->hops[0].distance_m + s.relay->hops[1].distance_m;
    const bool span_ok = approx(span / single.hops[0].distance_m, 2.0, 1e-12);

    RelayChain hd = *s.relay;
    hd.duplex = Duplex::half;
    const bool half_ok = approx(chain_throughput(hd, bw).bps / multi.bps, 0.5, 1e-9);

    const std::vector<double> g = {100.0, 100.0};
    const bool af_ok = approx(linear_to_db(af_end_to_end_snr(g)), 16.97, 0.005);

    report("6 relay: 3.000x aggregate at 2x span, half duplex = 1/2, AF (20,20) dB -> 16.97 dB",
           triple_ok && span_ok && half_ok && af_ok);
}

// 7. Determinism: sweeps byte-identical across reruns and thread counts.
void criterion_determinism() {
    bool ok = true;
    for (const std::string fixture : {"mimo.json", "pn_crossover.json"}) {
        int ec1 = 0, ec2 = 0, ec8 = 0;
        const std::string args = "sweep --scenario " + kFixtures + "/" + fixture;
        const auto a = run_cli(args + " --threads 1", ec1);
        const auto b = run_cli(args + " --threads 1", ec2);
        const auto c = run_cli(args + " --threads 8", ec8);
        ok = ok && ec1 == 0 && ec2 == 0 && ec8 == 0 && !a.empty() && a == b && a == c;
    }
    report("7 determinism: sweep output byte-identical for 1 vs 8 threads and across reruns", ok);
}

}  // namespace

int main() {
    criterion_regulatory();
    criterion_budget_and_residual();
    criterion_crossband();
    criterion_phase_noise();
    criterion_mimo();
    criterion_relay();
    criterion_determinism();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
