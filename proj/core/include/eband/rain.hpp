#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace eband {

enum class Polarization { H, V };

Polarization polarization_from_name(const std::string& name);

struct ItuCoefficientRow {
    double freq_ghz;
    double k_h;
    double k_v;
    double alpha_h;
    double alpha_v;
};

namespace detail {
extern const ItuCoefficientRow kItuP838Table[];
extern const std::size_t kItuP838TableSize;
}  // namespace detail

/// Power-law rain coefficients gamma = k * R^alpha on the P.838-3
/// frequency grid. Interpolation between grid nodes is log-log in k and
/// linear-in-log-frequency in alpha.
class ItuRainCoefficients {
public:
    static const ItuRainCoefficients& builtin();
    static ItuRainCoefficients from_csv(const std::string& path);

    explicit ItuRainCoefficients(std::vector<ItuCoefficientRow> rows);

    /// (k, alpha) at freq_ghz. Throws std::domain_error outside the grid.
    std::pair<double, double> coefficients(double freq_ghz, Polarization pol) const;

    const std::vector<ItuCoefficientRow>& rows() const { return rows_; }
    double min_freq_ghz() const { return rows_.front().freq_ghz; }
    double max_freq_ghz() const { return rows_.back().freq_ghz; }

private:
    std::vector<ItuCoefficientRow> rows_;
};

/// Rain-rate exceedance: ordered (percent of time exceeded, rain mm/h)
/// pairs, rain rate strictly decreasing as the percentage grows.
class RainExceedanceTable {
public:
    struct Lookup {
        double value;
        bool clamped;
    };

    RainExceedanceTable(std::vector<std::pair<double, double>> points, std::string source);

    /// Preset ITU-R P.837-1 rain climatic zones (E, K, L, N).
    static RainExceedanceTable preset(const std::string& zone);
    /// CSV rows `percent_exceeded,rain_mm_per_h`.
    static RainExceedanceTable from_csv(const std::string& path);

    /// Rain rate exceeded the given percent of time (log-log interpolation).
    Lookup rain_rate(double percent) const;
    /// Inverse map: percent of time the given rain rate is exceeded.
    Lookup percent_exceeded(double rain_mm_per_h) const;

    double min_percent() const { return points_.front().first; }
    double max_percent() const { return points_.back().first; }
    double max_rain() const { return points_.front().second; }
    const std::vector<std::pair<double, double>>& points() const { return points_; }
    const std::string& source() const { return source_; }

private:
    std::vector<std::pair<double, double>> points_;  // ascending percent
    std::string source_;
};

}  // namespace eband
