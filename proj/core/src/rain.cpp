#include "eband/rain.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eband {

Polarization polarization_from_name(const std::string& name) {
    if (name == "H" || name == "h") return Polarization::H;
    if (name == "V" || name == "v") return Polarization::V;
    throw std::domain_error("unknown polarization: " + name);
}

ItuRainCoefficients::ItuRainCoefficients(std::vector<ItuCoefficientRow> rows) : rows_(std::move(rows)) {
    if (rows_.size() < 2) throw std::invalid_argument("ItuRainCoefficients: need at least 2 grid rows");
    std::sort(rows_.begin(), rows_.end(),
              [](const ItuCoefficientRow& a, const ItuCoefficientRow& b) { return a.freq_ghz < b.freq_ghz; });
    for (const auto& r : rows_) {
        if (!(r.k_h > 0.0 && r.k_v > 0.0)) throw std::invalid_argument("ItuRainCoefficients: k must be > 0");
        // published values run ~0.68 to ~1.70 over 1-100 GHz
        if (!(r.alpha_h > 0.4 && r.alpha_h < 1.8 && r.alpha_v > 0.4 && r.alpha_v < 1.8))
            throw std::invalid_argument("ItuRainCoefficients: alpha outside (0.4, 1.8)");
    }
}

const ItuRainCoefficients& ItuRainCoefficients::builtin() {
    static const ItuRainCoefficients table(
        std::vector<ItuCoefficientRow>(detail::kItuP838Table, detail::kItuP838Table + detail::kItuP838TableSize));
    return table;
}

ItuRainCoefficients ItuRainCoefficients::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coefficient file: " + path);
    std::vector<ItuCoefficientRow> rows;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            // header `freq_ghz,k_h,k_v,alpha_h,alpha_v`
            header_seen = true;
            continue;
        }
        std::istringstream ss(line);
        ItuCoefficientRow r{};
        char comma;
        if (!(ss >> r.freq_ghz >> comma >> r.k_h >> comma >> r.k_v >> comma >> r.alpha_h >> comma >> r.alpha_v))
            throw std::runtime_error("malformed coefficient row: " + line);
        rows.push_back(r);
    }
    return ItuRainCoefficients(std::move(rows));
}

std::pair<double, double> ItuRainCoefficients::coefficients(double freq_ghz, Polarization pol) const {
    if (!(freq_ghz >= min_freq_ghz() && freq_ghz <= max_freq_ghz()))
        throw std::domain_error("frequency outside coefficient grid");
    auto it = std::lower_bound(rows_.begin(), rows_.end(), freq_ghz,
                               [](const ItuCoefficientRow& r, double f) { return r.freq_ghz < f; });
    if (it == rows_.begin()) ++it;
    const ItuCoefficientRow& hi = *it;
    const ItuCoefficientRow& lo = *(it - 1);
    const double k_lo = pol == Polarization::H ? lo.k_h : lo.k_v;
    const double k_hi = pol == Polarization::H ? hi.k_h : hi.k_v;
    const double a_lo = pol == Polarization::H ? lo.alpha_h : lo.alpha_v;
    const double a_hi = pol == Polarization::H ? hi.alpha_h : hi.alpha_v;
    const double t = (std::log10(freq_ghz) - std::log10(lo.freq_ghz)) /
                     (std::log10(hi.freq_ghz) - std::log10(lo.freq_ghz));
    const double k = std::pow(10.0, std::log10(k_lo) + t * (std::log10(k_hi) - std::log10(k_lo)));
    const double alpha = a_lo + t * (a_hi - a_lo);
    return {k, alpha};
}

RainExceedanceTable::RainExceedanceTable(std::vector<std::pair<double, double>> points, std::string source)
    : points_(std::move(points)), source_(std::move(source)) {
    if (points_.empty()) throw std::invalid_argument("RainExceedanceTable: empty table");
    std::sort(points_.begin(), points_.end());
    for (std::size_t i = 0; i < points_.size(); ++i) {
        auto [p, r] = points_[i];
        if (!(p > 0.0 && p < 100.0)) throw std::invalid_argument("RainExceedanceTable: percent outside (0, 100)");
        if (!(r > 0.0)) throw std::invalid_argument("RainExceedanceTable: rain rate must be > 0");
        if (i > 0 && !(r < points_[i - 1].second))
            throw std::invalid_argument("RainExceedanceTable: rain rate must strictly decrease with percent");
    }
}

RainExceedanceTable RainExceedanceTable::preset(const std::string& zone) {
    // ITU-R P.837-1 rain climatic zone rows (percent exceeded, mm/h).
    static const double pct[] = {1.0, 0.3, 0.1, 0.03, 0.01, 0.003, 0.001};
    auto make = [&](const std::string& name, std::initializer_list<double> rates) {
        std::vector<std::pair<double, double>> pts;
        std::size_t i = 0;
        for (double r : rates) pts.emplace_back(pct[i++], r);
        return RainExceedanceTable(std::move(pts), "zone " + name);
    };
    if (zone == "E") return make(zone, {0.6, 2.4, 6.0, 12.0, 22.0, 41.0, 70.0});
    if (zone == "K") return make(zone, {1.5, 4.2, 12.0, 23.0, 42.0, 70.0, 100.0});
    if (zone == "L") return make(zone, {2.0, 7.0, 15.0, 33.0, 60.0, 105.0, 150.0});
    if (zone == "N") return make(zone, {5.0, 15.0, 35.0, 65.0, 95.0, 140.0, 180.0});
    throw std::domain_error("unknown rain zone preset: " + zone);
}

RainExceedanceTable RainExceedanceTable::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open exceedance file: " + path);
    std::vector<std::pair<double, double>> pts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (std::isalpha(static_cast<unsigned char>(line[0]))) continue;  // header
        std::istringstream ss(line);
        double p, r;
        char comma;
        if (!(ss >> p >> comma >> r)) throw std::runtime_error("malformed exceedance row: " + line);
        pts.emplace_back(p, r);
    }
    return RainExceedanceTable(std::move(pts), path);
}

RainExceedanceTable::Lookup RainExceedanceTable::rain_rate(double percent) const {
    if (percent <= points_.front().first) return {points_.front().second, percent < points_.front().first};
    if (percent >= points_.back().first) return {points_.back().second, percent > points_.back().first};
    auto it = std::lower_bound(points_.begin(), points_.end(), percent,
                               [](const auto& pt, double p) { return pt.first < p; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double t = (std::log10(percent) - std::log10(lo.first)) / (std::log10(hi.first) - std::log10(lo.first));
    return {std::pow(10.0, std::log10(lo.second) + t * (std::log10(hi.second) - std::log10(lo.second))), false};
}

RainExceedanceTable::Lookup RainExceedanceTable::percent_exceeded(double rain_mm_per_h) const {
    // rain decreasing in percent: front() holds the highest rate.
    if (rain_mm_per_h >= points_.front().second)
        return {points_.front().first, rain_mm_per_h > points_.front().second};
    if (rain_mm_per_h <= points_.back().second)
        return {points_.back().first, rain_mm_per_h < points_.back().second};
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (rain_mm_per_h >= points_[i].second) {
            const auto& lo = points_[i - 1];  // higher rain, lower percent
            const auto& hi = points_[i];
            const double t = (std::log10(rain_mm_per_h) - std::log10(lo.second)) /
                             (std::log10(hi.second) - std::log10(lo.second));
            return {std::pow(10.0, std::log10(lo.first) + t * (std::log10(hi.first) - std::log10(lo.first))), false};
        }
    }
    return {points_.back().first, true};  // unreachable
}

}  // namespace eband
