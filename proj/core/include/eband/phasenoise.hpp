#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eband/modulation.hpp"
#include "eband/random.hpp"

namespace eband {

struct PhaseNoiseTerm {
    int slope = 0;       // n in S(f) = sum b_n * f^-n, n in {0,1,2,3}
    double coeff = 0.0;  // b_n >= 0, rad^2/Hz at 1 Hz
};

/// Multi-slope one-sided phase-noise PSD with floor (the n = 0 term).
class PhaseNoiseProfile {
public:
    PhaseNoiseProfile(std::vector<PhaseNoiseTerm> terms, double carrier_hz, double f_min_hz, double f_max_hz);

    /// S(f) in rad^2/Hz within the validity band.
    double psd(double f_hz) const;
    /// 10*log10(S(f)), the small-angle dBc/Hz reading.
    double psd_dbc_hz(double f_hz) const;

    /// Frequency multiplication by integer N: every coefficient scales by
    /// N^2 (+20*log10(N) dB at every offset), carrier scales by N.
    PhaseNoiseProfile scaled_by_multiplier(int n) const;

    double coeff(int slope) const;  // 0 when the term is absent
    PhaseNoiseProfile with_coeff(int slope, double value) const;

    const std::vector<PhaseNoiseTerm>& terms() const { return terms_; }
    double carrier_hz() const { return carrier_hz_; }
    double f_min_hz() const { return f_min_hz_; }
    double f_max_hz() const { return f_max_hz_; }

private:
    std::vector<PhaseNoiseTerm> terms_;
    double carrier_hz_;
    double f_min_hz_;
    double f_max_hz_;
};

enum class TrackerType { none, moving_average, dd_pll };

struct Tracker {
    TrackerType type = TrackerType::none;
    int window = 64;             // moving_average
    double loop_bw_frac = 1e-3;  // dd_pll, loop bandwidth as fraction of symbol rate
};

struct SynthesisConfig {
    double symbol_rate_hz = 0.0;
    std::size_t n_symbols = 0;
    SeededStream stream;
    Tracker tracker;
};

/// Phase sample per symbol, radians. Slope-2 synthesises a random walk
/// with increment variance 2*pi^2*b2*Ts, the floor white samples with
/// variance b0*fs/2, slopes 1 and 3 frequency-domain shaped noise.
/// Requires n_symbols >= 64.
std::vector<double> synthesize_phase(const PhaseNoiseProfile& profile, const SynthesisConfig& cfg);

struct EvmResult {
    double rms_evm_pct = 0.0;
    double residual_phase_variance = 0.0;  // rad^2, post-tracker
    std::vector<double> per_trial_evm_pct;
    double ci_half_width_pct = 0.0;  // 95% over trials
    bool tracker_diverged = false;
};

/// Random symbols rotated by synthesized phase plus AWGN, tracker
/// applied, RMS EVM over the post-transient block. Trials draw from
/// derived substreams so scheduling never changes the result.
EvmResult evm_monte_carlo(const PhaseNoiseProfile& profile, const SynthesisConfig& cfg, double snr_db,
                          Modulation mod, int n_trials = 20);

struct WelchPsd {
    std::vector<double> freq_hz;
    std::vector<double> psd;  // one-sided, unit^2/Hz
};

/// Hann-windowed averaged periodogram (50% overlap).
WelchPsd welch_psd(const std::vector<double>& x, double sample_rate_hz, std::size_t segment_length);

/// Profile JSON: {carrier_hz, terms:[{slope, coeff}], band:[fmin, fmax]}.
PhaseNoiseProfile profile_from_json_file(const std::string& path);

}  // namespace eband
