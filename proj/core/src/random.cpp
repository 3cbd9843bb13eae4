#include "eband/random.hpp"

namespace eband {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::mt19937_64 SeededStream::engine() const {
    std::uint64_t state = master_seed;
    std::uint64_t a = splitmix64(state);
    state ^= substream_id * 0xD1B54A32D192ED03ULL + 0x632BE59BD9B4E019ULL;
    std::uint64_t b = splitmix64(state);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return std::mt19937_64(seq);
}

std::vector<double> SeededStream::gaussian(std::size_t n, double stddev) const {
    auto eng = engine();
    std::normal_distribution<double> dist(0.0, stddev);
    std::vector<double> out(n);
    for (auto& v : out) v = dist(eng);
    return out;
}

}  // namespace eband
