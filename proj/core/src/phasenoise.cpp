#include "eband/phasenoise.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "eband/units.hpp"
#include "json.hpp"

namespace eband {

namespace {

std::mutex& fftw_plan_mutex() {
    static std::mutex m;
    return m;
}

// FFTW planning is not thread-safe; execution of a private plan is.
std::vector<double> inverse_rfft(std::vector<std::complex<double>> spectrum, std::size_t n) {
    std::vector<double> out(n);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex());
        plan = fftw_plan_dft_c2r_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(spectrum.data()),
                                    out.data(), FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex());
        fftw_destroy_plan(plan);
    }
    for (auto& v : out) v /= static_cast<double>(n);
    return out;
}

std::vector<std::complex<double>> forward_rfft(std::vector<double> x) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n / 2 + 1);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex());
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), x.data(), reinterpret_cast<fftw_complex*>(out.data()),
                                    FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace

PhaseNoiseProfile::PhaseNoiseProfile(std::vector<PhaseNoiseTerm> terms, double carrier_hz, double f_min_hz,
                                     double f_max_hz)
    : terms_(std::move(terms)), carrier_hz_(carrier_hz), f_min_hz_(f_min_hz), f_max_hz_(f_max_hz) {
    if (terms_.empty()) throw std::invalid_argument("PhaseNoiseProfile: at least one term required");
    if (!(carrier_hz_ > 0.0)) throw std::invalid_argument("PhaseNoiseProfile: carrier must be > 0");
    if (!(f_min_hz_ > 0.0 && f_min_hz_ < f_max_hz_)) throw std::invalid_argument("PhaseNoiseProfile: bad validity band");
    double total = 0.0;
    for (const auto& t : terms_) {
        if (t.slope < 0 || t.slope > 3) throw std::invalid_argument("PhaseNoiseProfile: slope must be in {0,1,2,3}");
        if (!(t.coeff >= 0.0)) throw std::invalid_argument("PhaseNoiseProfile: coefficients must be >= 0");
        total += t.coeff;
    }
    if (!(total > 0.0)) throw std::invalid_argument("PhaseNoiseProfile: PSD identically zero");
}

double PhaseNoiseProfile::psd(double f_hz) const {
    if (!(f_hz >= f_min_hz_ && f_hz <= f_max_hz_)) throw std::domain_error("psd: offset outside validity band");
    double s = 0.0;
    for (const auto& t : terms_) s += t.coeff * std::pow(f_hz, -t.slope);
    return s;
}

double PhaseNoiseProfile::psd_dbc_hz(double f_hz) const { return linear_to_db(psd(f_hz)); }

PhaseNoiseProfile PhaseNoiseProfile::scaled_by_multiplier(int n) const {
    if (n < 1) throw std::invalid_argument("scaled_by_multiplier: N must be >= 1");
    std::vector<PhaseNoiseTerm> scaled = terms_;
    for (auto& t : scaled) t.coeff *= static_cast<double>(n) * n;
    return PhaseNoiseProfile(std::move(scaled), carrier_hz_ * n, f_min_hz_, f_max_hz_);
}

double PhaseNoiseProfile::coeff(int slope) const {
    for (const auto& t : terms_)
        if (t.slope == slope) return t.coeff;
    return 0.0;
}

PhaseNoiseProfile PhaseNoiseProfile::with_coeff(int slope, double value) const {
    std::vector<PhaseNoiseTerm> terms = terms_;
    bool found = false;
    for (auto& t : terms)
        if (t.slope == slope) {
            t.coeff = value;
            found = true;
        }
    if (!found) terms.push_back({slope, value});
    return PhaseNoiseProfile(std::move(terms), carrier_hz_, f_min_hz_, f_max_hz_);
}

std::vector<double> synthesize_phase(const PhaseNoiseProfile& profile, const SynthesisConfig& cfg) {
    if (cfg.n_symbols < 64) throw std::invalid_argument("synthesize_phase: need n_symbols >= 64");
    if (!(cfg.symbol_rate_hz > 0.0)) throw std::invalid_argument("synthesize_phase: symbol rate must be > 0");
    const std::size_t n = cfg.n_symbols;
    const double fs = cfg.symbol_rate_hz;
    const double ts = 1.0 / fs;
    std::vector<double> phase(n, 0.0);

    // slope 2: random walk, increment variance 2*pi^2*b2*Ts
    if (const double b2 = profile.coeff(2); b2 > 0.0) {
        const double sigma = std::sqrt(2.0 * std::numbers::pi * std::numbers::pi * b2 * ts);
        auto inc = cfg.stream.substream(cfg.stream.substream_id * 101 + 5).gaussian(n, sigma);
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            acc += inc[i];
            phase[i] += acc;
        }
    }

    // slope 0 floor: white phase, variance b0*fs/2
    if (const double b0 = profile.coeff(0); b0 > 0.0) {
        auto w = cfg.stream.substream(cfg.stream.substream_id * 101 + 1).gaussian(n, std::sqrt(b0 * fs / 2.0));
        for (std::size_t i = 0; i < n; ++i) phase[i] += w[i];
    }

    // slopes 1 and 3: frequency-domain shaping over [1/(n*Ts), fs/2]
    for (int slope : {1, 3}) {
        const double bn = profile.coeff(slope);
        if (bn <= 0.0) continue;
        const std::size_t nfft = next_pow2(n);
        auto noise = cfg.stream.substream(cfg.stream.substream_id * 101 + 2 + slope).gaussian(2 * (nfft / 2 + 1));
        std::vector<std::complex<double>> spectrum(nfft / 2 + 1, 0.0);
        for (std::size_t k = 1; k < nfft / 2; ++k) {
            const double f = static_cast<double>(k) * fs / nfft;
            const double s = bn * std::pow(f, -slope);
            const double amp = std::sqrt(s * fs * nfft / 4.0);
            spectrum[k] = {amp * noise[2 * k], amp * noise[2 * k + 1]};
        }
        auto shaped = inverse_rfft(std::move(spectrum), nfft);
        for (std::size_t i = 0; i < n; ++i) phase[i] += shaped[i];
    }

    return phase;
}

namespace {

struct TrialOutput {
    double evm_sq = 0.0;
    double residual_var = 0.0;
};

TrialOutput run_trial(const PhaseNoiseProfile& profile, const SynthesisConfig& cfg, double snr_db,
                      Modulation mod, std::uint64_t trial) {
    SynthesisConfig tc = cfg;
    tc.stream = cfg.stream.substream(cfg.stream.substream_id * 7919 + trial + 1);
    const auto phase = synthesize_phase(profile, tc);
    const std::size_t n = cfg.n_symbols;

    auto eng = tc.stream.substream(tc.stream.substream_id * 101 + 77).engine();
    std::uniform_int_distribution<std::size_t> pick(0, constellation(mod).size() - 1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto& pts = constellation(mod);
    const double noise_var = snr_db >= 300.0 ? 0.0 : 1.0 / db_to_linear(snr_db);
    const double sigma = std::sqrt(noise_var / 2.0);

    std::size_t transient = 0;
    double loop_gain = 0.0;
    if (cfg.tracker.type == TrackerType::dd_pll) {
        loop_gain = 4.0 * cfg.tracker.loop_bw_frac;
        transient = static_cast<std::size_t>(std::ceil(10.0 / loop_gain));
    } else if (cfg.tracker.type == TrackerType::moving_average) {
        transient = static_cast<std::size_t>(cfg.tracker.window);
    }
    if (transient >= n) throw std::invalid_argument("evm_monte_carlo: transient exceeds n_symbols");

    double theta_hat = 0.0;
    std::vector<std::complex<double>> ma_buf;
    std::size_t ma_pos = 0;
    std::complex<double> ma_sum = 0.0;
    if (cfg.tracker.type == TrackerType::moving_average) {
        if (cfg.tracker.window < 1) throw std::invalid_argument("moving_average: window must be >= 1");
        ma_buf.assign(static_cast<std::size_t>(cfg.tracker.window), 0.0);
    }

    double err_acc = 0.0, sig_acc = 0.0, res_acc = 0.0, res_sq_acc = 0.0;
    std::size_t counted = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto s = pts[pick(eng)];
        std::complex<double> r = s * std::polar(1.0, phase[i]);
        if (sigma > 0.0) r += std::complex<double>(sigma * gauss(eng), sigma * gauss(eng));

        const std::complex<double> y = r * std::polar(1.0, -theta_hat);
        const auto d = nearest_symbol(mod, y);
        const double err_angle = std::arg(y * std::conj(d));
        if (cfg.tracker.type == TrackerType::dd_pll) {
            theta_hat += loop_gain * err_angle;
        } else if (cfg.tracker.type == TrackerType::moving_average) {
            const std::complex<double> z = y * std::conj(d);
            ma_sum += z - ma_buf[ma_pos];
            ma_buf[ma_pos] = z;
            ma_pos = (ma_pos + 1) % ma_buf.size();
            // apply the averaged error at 1/window gain; unit gain on a
            // window-long memory oscillates instead of converging
            theta_hat += std::arg(ma_sum == std::complex<double>(0.0) ? std::complex<double>(1.0) : ma_sum) /
                         static_cast<double>(ma_buf.size());
        }

        if (i >= transient) {
            err_acc += std::norm(y - s);
            sig_acc += std::norm(s);
            const double res = std::arg(y * std::conj(s));
            res_acc += res;
            res_sq_acc += res * res;
            ++counted;
        }
    }
    TrialOutput out;
    out.evm_sq = err_acc / sig_acc;
    const double mean_res = res_acc / counted;
    out.residual_var = res_sq_acc / counted - mean_res * mean_res;
    return out;
}

}  // namespace

EvmResult evm_monte_carlo(const PhaseNoiseProfile& profile, const SynthesisConfig& cfg, double snr_db,
                          Modulation mod, int n_trials) {
    if (n_trials < 20) throw std::invalid_argument("evm_monte_carlo: need at least 20 trials for the confidence interval");
    EvmResult result;
    result.per_trial_evm_pct.reserve(n_trials);
    double evm_sq_acc = 0.0, res_var_acc = 0.0;
    for (int t = 0; t < n_trials; ++t) {
        const auto out = run_trial(profile, cfg, snr_db, mod, static_cast<std::uint64_t>(t));
        result.per_trial_evm_pct.push_back(100.0 * std::sqrt(out.evm_sq));
        evm_sq_acc += out.evm_sq;
        res_var_acc += out.residual_var;
    }
    result.rms_evm_pct = 100.0 * std::sqrt(evm_sq_acc / n_trials);
    result.residual_phase_variance = res_var_acc / n_trials;
    result.tracker_diverged = result.residual_phase_variance > 1.0;
    double mean = 0.0;
    for (double v : result.per_trial_evm_pct) mean += v;
    mean /= n_trials;
    double var = 0.0;
    for (double v : result.per_trial_evm_pct) var += (v - mean) * (v - mean);
    var /= (n_trials - 1);
    result.ci_half_width_pct = 1.96 * std::sqrt(var / n_trials);
    return result;
}

WelchPsd welch_psd(const std::vector<double>& x, double sample_rate_hz, std::size_t segment_length) {
    if (segment_length < 8 || segment_length > x.size()) throw std::invalid_argument("welch_psd: bad segment length");
    const std::size_t nseg = segment_length;
    const std::size_t hop = nseg / 2;
    std::vector<double> window(nseg);
    double u = 0.0;
    for (std::size_t i = 0; i < nseg; ++i) {
        window[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * i / (nseg - 1)));
        u += window[i] * window[i];
    }
    WelchPsd out;
    out.psd.assign(nseg / 2 + 1, 0.0);
    std::size_t count = 0;
    for (std::size_t start = 0; start + nseg <= x.size(); start += hop) {
        std::vector<double> seg(nseg);
        for (std::size_t i = 0; i < nseg; ++i) seg[i] = x[start + i] * window[i];
        auto spec = forward_rfft(std::move(seg));
        for (std::size_t k = 0; k < out.psd.size(); ++k) {
            const double scale = (k == 0 || k == nseg / 2) ? 1.0 : 2.0;  // one-sided
            out.psd[k] += scale * std::norm(spec[k]) / (sample_rate_hz * u);
        }
        ++count;
    }
    if (count == 0) throw std::invalid_argument("welch_psd: signal shorter than one segment");
    out.freq_hz.resize(out.psd.size());
    for (std::size_t k = 0; k < out.psd.size(); ++k) {
        out.psd[k] /= count;
        out.freq_hz[k] = static_cast<double>(k) * sample_rate_hz / nseg;
    }
    return out;
}

PhaseNoiseProfile profile_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open profile file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    std::vector<PhaseNoiseTerm> terms;
    for (const auto& t : j.at("terms")) terms.push_back({t.at("slope").get<int>(), t.at("coeff").get<double>()});
    const auto band = j.at("band");
    return PhaseNoiseProfile(std::move(terms), j.at("carrier_hz").get<double>(), band.at(0).get<double>(),
                             band.at(1).get<double>());
}

}  // namespace eband
