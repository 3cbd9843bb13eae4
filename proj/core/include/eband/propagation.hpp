#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eband/rain.hpp"

namespace eband {

/// Free-space path loss 20*log10(4*pi*d*f/c).
double fspl_db(double freq_hz, double distance_m);

/// Specific rain attenuation gamma = k(f) * R^alpha(f) in dB/km.
double specific_attenuation_itu(double rain_mm_per_h, double freq_ghz, Polarization pol,
                                const ItuRainCoefficients& coeffs = ItuRainCoefficients::builtin());

/// ITU-R P.530 style path attenuation with the effective-path-length
/// distance factor r = 1/(1 + d/d0), d0 = 35*exp(-0.015*min(R,100)).
/// Valid for 0 < d <= 60 km.
double path_attenuation_itu(double rain_mm_per_h, double freq_ghz, Polarization pol, double distance_km,
                            const ItuRainCoefficients& coeffs = ItuRainCoefficients::builtin());

/// Crane (1980) global model two-segment path integral. Valid for
/// 0 < d <= 22.5 km; continuous at the segment boundary delta(R).
double path_attenuation_crane(double rain_mm_per_h, double freq_ghz, Polarization pol, double distance_km,
                              const ItuRainCoefficients& coeffs = ItuRainCoefficients::builtin());

enum class RainModel { itu, crane };

RainModel rain_model_from_name(const std::string& name);

double path_attenuation(RainModel model, double rain_mm_per_h, double freq_ghz, Polarization pol,
                        double distance_km, const ItuRainCoefficients& coeffs = ItuRainCoefficients::builtin());

/// Maximum path length a model accepts, km.
double rain_model_max_distance_km(RainModel model);

struct AttenuationSeries {
    std::vector<std::string> timestamps;
    std::vector<double> rain_mm_per_h;
    std::vector<double> measured_atten_db;  // empty when the column is absent

    bool has_measured() const { return !measured_atten_db.empty(); }
    std::size_t size() const { return rain_mm_per_h.size(); }

    /// CSV rows `timestamp_iso8601,rain_mm_per_h[,measured_atten_db]`.
    static AttenuationSeries from_csv(const std::string& path);
};

struct ResidualStats {
    double mean_db = 0.0;
    std::map<int, double> percentiles_db;                    // 50/90/95/99
    std::vector<std::pair<double, double>> exceedance;       // (residual dB, % of samples above)
    std::vector<double> residuals_db;                        // per sample
};

/// Per-sample residual = measured - model(rain_rate) over the series.
ResidualStats residual_analysis(const AttenuationSeries& series, RainModel model, double freq_ghz,
                                Polarization pol, double distance_km,
                                const ItuRainCoefficients& coeffs = ItuRainCoefficients::builtin());

}  // namespace eband
