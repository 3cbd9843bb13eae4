#include "eband/modulation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "eband/units.hpp"

namespace eband {

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

int bits_per_symbol(Modulation m) {
    switch (m) {
        case Modulation::BPSK: return 1;
        case Modulation::QPSK: return 2;
        case Modulation::QAM16: return 4;
        case Modulation::QAM64: return 6;
        case Modulation::QAM256: return 8;
    }
    throw std::logic_error("bits_per_symbol: bad enum");
}

std::string modulation_name(Modulation m) {
    switch (m) {
        case Modulation::BPSK: return "BPSK";
        case Modulation::QPSK: return "QPSK";
        case Modulation::QAM16: return "16QAM";
        case Modulation::QAM64: return "64QAM";
        case Modulation::QAM256: return "256QAM";
    }
    throw std::logic_error("modulation_name: bad enum");
}

Modulation modulation_from_name(const std::string& name) {
    static const std::map<std::string, Modulation> table = {
        {"BPSK", Modulation::BPSK},     {"QPSK", Modulation::QPSK},   {"16QAM", Modulation::QAM16},
        {"QAM16", Modulation::QAM16},   {"64QAM", Modulation::QAM64}, {"QAM64", Modulation::QAM64},
        {"256QAM", Modulation::QAM256}, {"QAM256", Modulation::QAM256}};
    auto it = table.find(name);
    if (it == table.end()) throw std::domain_error("unknown modulation: " + name);
    return it->second;
}

namespace {

// Exact Gray-coded per-bit BER for square M-QAM (Cho & Yoon form),
// per-symbol SNR gs.
double square_qam_ber(int m_size, double gs) {
    const int sqrt_m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m_size))));
    const int levels = static_cast<int>(std::lround(std::log2(static_cast<double>(sqrt_m))));
    double total = 0.0;
    for (int k = 1; k <= levels; ++k) {
        const int n_terms = static_cast<int>((1.0 - std::pow(2.0, -k)) * sqrt_m);
        double s = 0.0;
        for (int i = 0; i < n_terms; ++i) {
            const double frac = static_cast<double>(i) * std::pow(2.0, k - 1) / sqrt_m;
            const double sign = (static_cast<long>(std::floor(frac)) % 2 == 0) ? 1.0 : -1.0;
            const double weight = std::pow(2.0, k - 1) - std::floor(frac + 0.5);
            s += sign * weight * std::erfc((2 * i + 1) * std::sqrt(3.0 * gs / (2.0 * (m_size - 1))));
        }
        total += s / sqrt_m;
    }
    return total / levels;
}

int constellation_size(Modulation m) {
    switch (m) {
        case Modulation::BPSK: return 2;
        case Modulation::QPSK: return 4;
        case Modulation::QAM16: return 16;
        case Modulation::QAM64: return 64;
        case Modulation::QAM256: return 256;
    }
    throw std::logic_error("constellation_size: bad enum");
}

}  // namespace

double awgn_ber(Modulation m, double snr_linear) {
    if (!(snr_linear >= 0.0) || !std::isfinite(snr_linear))
        throw std::domain_error("awgn_ber: SNR must be finite and >= 0");
    if (m == Modulation::BPSK) return q_function(std::sqrt(2.0 * snr_linear));
    return square_qam_ber(constellation_size(m), snr_linear);
}

double required_snr_db(Modulation m, double target_ber) {
    if (!(target_ber > 0.0 && target_ber < 0.5)) throw std::domain_error("required_snr_db: target BER must be in (0, 0.5)");
    double lo = -30.0, hi = 100.0;
    if (awgn_ber(m, db_to_linear(lo)) < target_ber) throw std::domain_error("required_snr_db: target BER unreachable (too high)");
    if (awgn_ber(m, db_to_linear(hi)) > target_ber) throw std::domain_error("required_snr_db: target BER unreachable (too low)");
    while (hi - lo > 1e-4) {
        const double mid = 0.5 * (lo + hi);
        if (awgn_ber(m, db_to_linear(mid)) > target_ber)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

const std::vector<std::complex<double>>& constellation(Modulation m) {
    static const auto build = [](Modulation mod) {
        std::vector<std::complex<double>> pts;
        if (mod == Modulation::BPSK) {
            pts = {{-1.0, 0.0}, {1.0, 0.0}};
            return pts;
        }
        const int sqrt_m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(constellation_size(mod)))));
        double energy = 0.0;
        for (int i = 0; i < sqrt_m; ++i) {
            for (int q = 0; q < sqrt_m; ++q) {
                const double re = 2.0 * i - (sqrt_m - 1);
                const double im = 2.0 * q - (sqrt_m - 1);
                pts.emplace_back(re, im);
                energy += re * re + im * im;
            }
        }
        const double scale = std::sqrt(pts.size() / energy);
        for (auto& p : pts) p *= scale;
        return pts;
    };
    static const std::map<Modulation, std::vector<std::complex<double>>> cache = {
        {Modulation::BPSK, build(Modulation::BPSK)},     {Modulation::QPSK, build(Modulation::QPSK)},
        {Modulation::QAM16, build(Modulation::QAM16)},   {Modulation::QAM64, build(Modulation::QAM64)},
        {Modulation::QAM256, build(Modulation::QAM256)}};
    return cache.at(m);
}

std::complex<double> nearest_symbol(Modulation m, std::complex<double> r) {
    const auto& pts = constellation(m);
    std::complex<double> best = pts.front();
    double best_d = std::norm(r - best);
    for (const auto& p : pts) {
        const double d = std::norm(r - p);
        if (d < best_d) {
            best_d = d;
            best = p;
        }
    }
    return best;
}

}  // namespace eband
