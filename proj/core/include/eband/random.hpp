#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace eband {

/// Deterministic substream handle. The engine state depends only on
/// (master_seed, substream_id), never on draw order elsewhere, so Monte
/// Carlo trials can run on any thread and still reproduce bit-identically.
struct SeededStream {
    std::uint64_t master_seed = 0;
    std::uint64_t substream_id = 0;

    SeededStream substream(std::uint64_t id) const { return {master_seed, id}; }

    std::mt19937_64 engine() const;

    std::vector<double> gaussian(std::size_t n, double stddev = 1.0) const;
};

}  // namespace eband
