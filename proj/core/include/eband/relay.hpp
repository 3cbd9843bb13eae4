#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "eband/linkbudget.hpp"

namespace eband {

enum class Relaying { AF, DF };
enum class Duplex { full, half };

Relaying relaying_from_name(const std::string& name);
Duplex duplex_from_name(const std::string& name);

struct RelayChain {
    std::vector<LinkScenario> hops;
    Relaying relaying = Relaying::DF;
    Duplex duplex = Duplex::full;
    // Residual self-interference relative to the thermal noise floor,
    // full-duplex only; -inf means perfect cancellation.
    double self_interference_db = -std::numeric_limits<double>::infinity();
    int parallel_beams = 1;
};

/// AF end-to-end SNR, harmonic composition
/// gamma = (prod(1 + 1/gamma_i) - 1)^-1; reduces to
/// gamma1*gamma2/(gamma1+gamma2+1) for two hops.
double af_end_to_end_snr(std::span<const double> per_hop_snr_linear);

struct ThroughputResult {
    double bps = 0.0;
    int bottleneck_hop = 0;
    bool feasible = true;
    std::vector<double> per_hop_snr_db;  // SI included when full duplex
    std::string diagnostic;
};

/// Chain throughput: DF takes min_i log2(1+gamma_i), AF the end-to-end
/// SNR; half duplex divides by the hop count; the result scales by
/// bandwidth and parallel_beams.
ThroughputResult chain_throughput(const RelayChain& chain, double bandwidth_hz);

/// Throughput per self-interference level; monotone non-increasing.
std::vector<std::pair<double, double>> si_sensitivity(const RelayChain& chain, double bandwidth_hz,
                                                      std::span<const double> si_db_values);

}  // namespace eband
