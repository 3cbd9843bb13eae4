#pragma once

#include <cmath>
#include <stdexcept>

namespace eband {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kThermalNoiseDbmHz = -174.0;  // kTB at 290 K

/// 10^(x/10). Throws on non-finite input.
inline double db_to_linear(double db) {
    if (!std::isfinite(db)) throw std::domain_error("db_to_linear: non-finite input");
    return std::pow(10.0, db / 10.0);
}

/// 10*log10(x). Throws unless x is finite and strictly positive.
inline double linear_to_db(double x) {
    if (!std::isfinite(x) || x <= 0.0) throw std::domain_error("linear_to_db: input must be finite and > 0");
    return 10.0 * std::log10(x);
}

inline double dbm_to_dbw(double dbm) { return dbm - 30.0; }
inline double dbw_to_dbm(double dbw) { return dbw + 30.0; }

inline double wavelength_m(double freq_hz) {
    if (!(freq_hz > 0.0)) throw std::domain_error("wavelength_m: frequency must be > 0");
    return kSpeedOfLight / freq_hz;
}

/// Gain of a rectangular aperture: G = 10*log10(eff * 4*pi*A / lambda^2).
double aperture_gain_dbi(double width_m, double height_m, double freq_hz, double efficiency = 1.0);

}  // namespace eband
