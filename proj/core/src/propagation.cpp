#include "eband/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "eband/units.hpp"

namespace eband {

double fspl_db(double freq_hz, double distance_m) {
    if (!(freq_hz > 0.0) || !(distance_m > 0.0)) throw std::domain_error("fspl_db: frequency and distance must be > 0");
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * freq_hz / kSpeedOfLight);
}

double specific_attenuation_itu(double rain_mm_per_h, double freq_ghz, Polarization pol,
                                const ItuRainCoefficients& coeffs) {
    if (!(rain_mm_per_h >= 0.0 && rain_mm_per_h <= 200.0))
        throw std::domain_error("specific_attenuation_itu: rain rate outside [0, 200] mm/h");
    if (rain_mm_per_h == 0.0) return 0.0;
    auto [k, alpha] = coeffs.coefficients(freq_ghz, pol);
    return k * std::pow(rain_mm_per_h, alpha);
}

double path_attenuation_itu(double rain_mm_per_h, double freq_ghz, Polarization pol, double distance_km,
                            const ItuRainCoefficients& coeffs) {
    if (!(distance_km > 0.0 && distance_km <= 60.0))
        throw std::domain_error("path_attenuation_itu: distance outside (0, 60] km");
    const double gamma = specific_attenuation_itu(rain_mm_per_h, freq_ghz, pol, coeffs);
    const double d0 = 35.0 * std::exp(-0.015 * std::min(rain_mm_per_h, 100.0));
    const double r = 1.0 / (1.0 + distance_km / d0);
    return gamma * distance_km * r;
}

double path_attenuation_crane(double rain_mm_per_h, double freq_ghz, Polarization pol, double distance_km,
                              const ItuRainCoefficients& coeffs) {
    if (!(distance_km > 0.0 && distance_km <= 22.5))
        throw std::domain_error("path_attenuation_crane: distance outside (0, 22.5] km");
    if (rain_mm_per_h == 0.0) return 0.0;
    auto [k, alpha] = coeffs.coefficients(freq_ghz, pol);
    const double gamma = k * std::pow(rain_mm_per_h, alpha);
    // Crane (1980) empirical path profile functions.
    const double delta = 3.8 - 0.6 * std::log(rain_mm_per_h);
    const double b = 2.3 * std::pow(rain_mm_per_h, -0.17);
    const double c = 0.026 - 0.03 * std::log(rain_mm_per_h);
    const double u = std::log(b * std::exp(c * delta)) / delta;
    const double ua = u * alpha;
    const double ca = c * alpha;
    if (distance_km <= delta || delta <= 0.0) {
        if (delta <= 0.0) {
            // very heavy rain: the first segment vanishes, pure outer cell
            return gamma * std::pow(b, alpha) * (std::exp(ca * distance_km) - 1.0) / ca;
        }
        return gamma * (std::exp(ua * distance_km) - 1.0) / ua;
    }
    return gamma * ((std::exp(ua * delta) - 1.0) / ua - std::pow(b, alpha) * std::exp(ca * delta) / ca +
                    std::pow(b, alpha) * std::exp(ca * distance_km) / ca);
}

RainModel rain_model_from_name(const std::string& name) {
    if (name == "itu") return RainModel::itu;
    if (name == "crane") return RainModel::crane;
    throw std::domain_error("unknown rain model: " + name);
}

double path_attenuation(RainModel model, double rain_mm_per_h, double freq_ghz, Polarization pol,
                        double distance_km, const ItuRainCoefficients& coeffs) {
    return model == RainModel::itu ? path_attenuation_itu(rain_mm_per_h, freq_ghz, pol, distance_km, coeffs)
                                   : path_attenuation_crane(rain_mm_per_h, freq_ghz, pol, distance_km, coeffs);
}

double rain_model_max_distance_km(RainModel model) { return model == RainModel::itu ? 60.0 : 22.5; }

AttenuationSeries AttenuationSeries::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open series file: " + path);
    AttenuationSeries s;
    std::string line;
    std::size_t row = 0;
    bool any_measured = false;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("timestamp", 0) == 0) continue;  // header
        std::istringstream ss(line);
        std::string ts, rain_str, meas_str;
        if (!std::getline(ss, ts, ',') || !std::getline(ss, rain_str, ','))
            throw std::runtime_error("malformed series row " + std::to_string(row));
        double rain;
        try {
            rain = std::stod(rain_str);
        } catch (const std::exception&) {
            throw std::runtime_error("malformed rain value at row " + std::to_string(row));
        }
        if (rain < 0.0) throw std::runtime_error("negative rain rate at row " + std::to_string(row));
        s.timestamps.push_back(ts);
        s.rain_mm_per_h.push_back(rain);
        if (std::getline(ss, meas_str, ',')) {
            try {
                s.measured_atten_db.push_back(std::stod(meas_str));
            } catch (const std::exception&) {
                throw std::runtime_error("malformed attenuation value at row " + std::to_string(row));
            }
            any_measured = true;
        } else if (any_measured) {
            throw std::runtime_error("missing attenuation value at row " + std::to_string(row));
        }
    }
    if (s.rain_mm_per_h.empty()) throw std::runtime_error("empty series file: " + path);
    return s;
}

ResidualStats residual_analysis(const AttenuationSeries& series, RainModel model, double freq_ghz,
                                Polarization pol, double distance_km, const ItuRainCoefficients& coeffs) {
    if (!series.has_measured() || series.measured_atten_db.size() != series.rain_mm_per_h.size())
        throw std::invalid_argument("residual_analysis: series has no measured attenuation column");
    ResidualStats st;
    st.residuals_db.reserve(series.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double modelled = series.rain_mm_per_h[i] > 0.0
                                    ? path_attenuation(model, series.rain_mm_per_h[i], freq_ghz, pol, distance_km, coeffs)
                                    : 0.0;
        const double res = series.measured_atten_db[i] - modelled;
        st.residuals_db.push_back(res);
        sum += res;
    }
    st.mean_db = sum / st.residuals_db.size();
    std::vector<double> sorted = st.residuals_db;
    std::sort(sorted.begin(), sorted.end());
    for (int p : {50, 90, 95, 99}) {
        const double pos = (p / 100.0) * (sorted.size() - 1);
        const std::size_t i0 = static_cast<std::size_t>(pos);
        const std::size_t i1 = std::min(i0 + 1, sorted.size() - 1);
        st.percentiles_db[p] = sorted[i0] + (pos - i0) * (sorted[i1] - sorted[i0]);
    }
    const std::size_t n = sorted.size();
    for (std::size_t i = 0; i < n; ++i)
        st.exceedance.emplace_back(sorted[i], 100.0 * static_cast<double>(n - 1 - i) / n);
    return st;
}

}  // namespace eband
