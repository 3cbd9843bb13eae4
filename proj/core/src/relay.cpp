#include "eband/relay.hpp"

#include <cmath>
#include <stdexcept>

#include "eband/units.hpp"

namespace eband {

Relaying relaying_from_name(const std::string& name) {
    if (name == "AF" || name == "af") return Relaying::AF;
    if (name == "DF" || name == "df") return Relaying::DF;
    throw std::domain_error("unknown relaying mode: " + name);
}

Duplex duplex_from_name(const std::string& name) {
    if (name == "full") return Duplex::full;
    if (name == "half") return Duplex::half;
    throw std::domain_error("unknown duplex mode: " + name);
}

double af_end_to_end_snr(std::span<const double> per_hop_snr_linear) {
    if (per_hop_snr_linear.empty()) throw std::invalid_argument("af_end_to_end_snr: empty hop list");
    double prod = 1.0;
    for (double g : per_hop_snr_linear) {
        if (!(g > 0.0)) throw std::domain_error("af_end_to_end_snr: per-hop SNR must be > 0");
        prod *= 1.0 + 1.0 / g;
    }
    return 1.0 / (prod - 1.0);
}

namespace {

struct HopState {
    double snr_linear;
    bool feasible;
};

HopState hop_snr(const LinkScenario& s, double si_over_noise_linear) {
    s.validate();
    if (!(s.bandwidth_hz > 0.0)) throw std::invalid_argument("relay hop: bandwidth_hz must be > 0");
    const double fspl = fspl_db(s.freq_hz, s.distance_m);
    const double gas = s.gas_db_per_km * s.distance_m / 1000.0;
    const double rx_dbm = s.tx_power_dbm + s.tx_gain_dbi + s.rx_gain_dbi - fspl - gas - s.misc_loss_db;
    const double noise_dbm = kThermalNoiseDbmHz + 10.0 * std::log10(s.bandwidth_hz) + s.noise_figure_db;
    // residual self-interference expressed relative to the noise floor
    const double eff_noise_dbm = noise_dbm + 10.0 * std::log10(1.0 + si_over_noise_linear);
    HopState h;
    h.snr_linear = db_to_linear(rx_dbm - eff_noise_dbm);
    h.feasible = !s.rx_threshold_dbm || rx_dbm >= *s.rx_threshold_dbm;
    return h;
}

}  // namespace

ThroughputResult chain_throughput(const RelayChain& chain, double bandwidth_hz) {
    if (chain.hops.empty()) throw std::invalid_argument("chain_throughput: chain needs at least one hop");
    if (chain.parallel_beams < 1) throw std::invalid_argument("chain_throughput: parallel_beams must be >= 1");
    const double si_linear = chain.duplex == Duplex::full && std::isfinite(chain.self_interference_db)
                                 ? db_to_linear(chain.self_interference_db)
                                 : 0.0;
    ThroughputResult r;
    std::vector<double> snrs;
    snrs.reserve(chain.hops.size());
    for (std::size_t i = 0; i < chain.hops.size(); ++i) {
        const HopState h = hop_snr(chain.hops[i], si_linear);
        snrs.push_back(h.snr_linear);
        r.per_hop_snr_db.push_back(linear_to_db(h.snr_linear));
        if (!h.feasible) {
            r.feasible = false;
            r.bottleneck_hop = static_cast<int>(i);
            r.diagnostic = "hop " + std::to_string(i) + " below receiver threshold";
        }
    }
    if (!r.feasible) {
        r.bps = 0.0;
        return r;
    }
    double se;  // b/s/Hz before duplex sharing
    if (chain.relaying == Relaying::DF) {
        double worst = snrs[0];
        for (std::size_t i = 1; i < snrs.size(); ++i)
            if (snrs[i] < worst) {
                worst = snrs[i];
                r.bottleneck_hop = static_cast<int>(i);
            }
        se = std::log2(1.0 + worst);
    } else {
        se = std::log2(1.0 + af_end_to_end_snr(snrs));
        double worst = snrs[0];
        for (std::size_t i = 1; i < snrs.size(); ++i)
            if (snrs[i] < worst) {
                worst = snrs[i];
                r.bottleneck_hop = static_cast<int>(i);
            }
    }
    if (chain.duplex == Duplex::half) se /= static_cast<double>(chain.hops.size());
    r.bps = se * bandwidth_hz * chain.parallel_beams;
    return r;
}

std::vector<std::pair<double, double>> si_sensitivity(const RelayChain& chain, double bandwidth_hz,
                                                      std::span<const double> si_db_values) {
    if (chain.duplex != Duplex::full) throw std::invalid_argument("si_sensitivity: chain must be full duplex");
    std::vector<std::pair<double, double>> out;
    out.reserve(si_db_values.size());
    for (double si : si_db_values) {
        RelayChain c = chain;
        c.self_interference_db = si;
        out.emplace_back(si, chain_throughput(c, bandwidth_hz).bps);
    }
    return out;
}

}  // namespace eband
