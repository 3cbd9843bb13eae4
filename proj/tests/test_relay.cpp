#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>

#include "eband/relay.hpp"
#include "eband/units.hpp"

using namespace eband;

namespace {

LinkScenario hop(double distance_m) {
    LinkScenario s;
    s.freq_hz = 73.5e9;
    s.distance_m = distance_m;
    s.tx_power_dbm = 20.0;
    s.tx_gain_dbi = 43.0;
    s.rx_gain_dbi = 43.0;
    s.bandwidth_hz = 1e9;
    s.noise_figure_db = 7.0;
    s.modulation = Modulation::QAM16;
    return s;
}

}  // namespace

TEST_CASE("AF end-to-end SNR") {
    SUBCASE("(100, 100) gives 49.75, i.e. 16.97 dB") {
        const std::array<double, 2> g = {100.0, 100.0};
        const double e2e = af_end_to_end_snr(g);
        CHECK(e2e == doctest::Approx(10000.0 / 201.0).epsilon(1e-12));
        CHECK(e2e == doctest::Approx(49.751).epsilon(1e-4));
        CHECK(linear_to_db(e2e) == doctest::Approx(16.968).epsilon(1e-3));
    }
    SUBCASE("single hop is the identity") {
        const std::array<double, 1> g = {42.0};
        CHECK(af_end_to_end_snr(g) == doctest::Approx(42.0).epsilon(1e-12));
    }
    SUBCASE("perfect first hop leaves the second hop SNR") {
        const std::array<double, 2> g = {1e15, 25.0};
        CHECK(af_end_to_end_snr(g) == doctest::Approx(25.0).epsilon(1e-9));
    }
    SUBCASE("two-hop closed form g1*g2/(g1+g2+1)") {
        const std::array<double, 2> g = {312.0, 18.5};
        CHECK(af_end_to_end_snr(g) == doctest::Approx(312.0 * 18.5 / (312.0 + 18.5 + 1.0)).epsilon(1e-12));
    }
    SUBCASE("never exceeds the bottleneck hop") {
        const std::array<double, 3> g = {50.0, 7.0, 120.0};
        CHECK(af_end_to_end_snr(g) < 7.0);
    }
    SUBCASE("empty list rejected") {
        CHECK_THROWS_AS(af_end_to_end_snr({}), std::invalid_argument);
    }
    SUBCASE("non-positive SNR rejected") {
        const std::array<double, 2> g = {10.0, 0.0};
        CHECK_THROWS_AS(af_end_to_end_snr(g), std::domain_error);
    }
}

TEST_CASE("chain throughput duplex and relaying rules") {
    RelayChain chain;
    chain.hops = {hop(1000.0), hop(1000.0)};
    chain.relaying = Relaying::DF;
    chain.duplex = Duplex::full;
    const double bw = 1e9;

    SUBCASE("half duplex is exactly half of ideal full duplex") {
        const double full = chain_throughput(chain, bw).bps;
        RelayChain hd = chain;
        hd.duplex = Duplex::half;
        CHECK(chain_throughput(hd, bw).bps == doctest::Approx(full / 2.0).epsilon(1e-12));
    }
    SUBCASE("ideal full-duplex DF equals the worst single hop") {
        RelayChain uneven = chain;
        uneven.hops = {hop(800.0), hop(1500.0), hop(1200.0)};
        const auto r = chain_throughput(uneven, bw);
        RelayChain single = chain;
        single.hops = {hop(1500.0)};
        CHECK(r.bps == doctest::Approx(chain_throughput(single, bw).bps).epsilon(1e-12));
        CHECK(r.bottleneck_hop == 1);
    }
    SUBCASE("three beams, two hops: aggregate is 3x the single-link rate at 2x span") {
        RelayChain beams = chain;
        beams.parallel_beams = 3;
        const auto multi = chain_throughput(beams, bw);
        RelayChain single = chain;
        single.hops = {hop(1000.0)};
        const auto one = chain_throughput(single, bw);
        CHECK(multi.bps / one.bps == doctest::Approx(3.0).epsilon(1e-9));
        const double span = beams.hops[0].distance_m + beams.hops[1].distance_m;
        CHECK(span == doctest::Approx(2.0 * single.hops[0].distance_m));
    }
    SUBCASE("AF never beats DF on identical hops") {
        RelayChain af = chain;
        af.relaying = Relaying::AF;
        CHECK(chain_throughput(af, bw).bps <= chain_throughput(chain, bw).bps);
        CHECK(chain_throughput(af, bw).bps > 0.0);
    }
    SUBCASE("throughput monotone in hop quality") {
        RelayChain worse = chain;
        worse.hops[1].tx_power_dbm -= 6.0;
        CHECK(chain_throughput(worse, bw).bps < chain_throughput(chain, bw).bps);
    }
    SUBCASE("scales linearly with bandwidth") {
        CHECK(chain_throughput(chain, 2.0 * bw).bps == doctest::Approx(2.0 * chain_throughput(chain, bw).bps).epsilon(1e-12));
    }
    SUBCASE("infeasible hop reports zero with a diagnostic") {
        RelayChain dead = chain;
        dead.hops[1].rx_threshold_dbm = 10.0;  // unreachable threshold
        const auto r = chain_throughput(dead, bw);
        CHECK(r.bps == 0.0);
        CHECK_FALSE(r.feasible);
        CHECK(r.bottleneck_hop == 1);
        CHECK_FALSE(r.diagnostic.empty());
    }
    SUBCASE("empty chain and bad beam count rejected") {
        RelayChain empty;
        CHECK_THROWS_AS(chain_throughput(empty, bw), std::invalid_argument);
        RelayChain bad = chain;
        bad.parallel_beams = 0;
        CHECK_THROWS_AS(chain_throughput(bad, bw), std::invalid_argument);
    }
}

TEST_CASE("self-interference handling") {
    RelayChain chain;
    chain.hops = {hop(1000.0), hop(1000.0)};
    chain.relaying = Relaying::DF;
    chain.duplex = Duplex::full;
    const double bw = 1e9;

    SUBCASE("SI at the noise floor costs each hop exactly 3.01 dB") {
        const auto clean = chain_throughput(chain, bw);
        RelayChain si = chain;
        si.self_interference_db = 0.0;
        const auto noisy = chain_throughput(si, bw);
        for (std::size_t i = 0; i < clean.per_hop_snr_db.size(); ++i)
            CHECK(clean.per_hop_snr_db[i] - noisy.per_hop_snr_db[i] ==
                  doctest::Approx(10.0 * std::log10(2.0)).epsilon(1e-12));
    }
    SUBCASE("SI ignored for half duplex") {
        RelayChain hd = chain;
        hd.duplex = Duplex::half;
        RelayChain hd_si = hd;
        hd_si.self_interference_db = 20.0;
        CHECK(chain_throughput(hd_si, bw).bps == doctest::Approx(chain_throughput(hd, bw).bps).epsilon(1e-12));
    }
    SUBCASE("sensitivity sweep is monotone non-increasing, matches endpoints") {
        const std::array<double, 5> levels = {-60.0, -20.0, 0.0, 20.0, 80.0};
        const auto curve = si_sensitivity(chain, bw, levels);
        REQUIRE(curve.size() == levels.size());
        for (std::size_t i = 1; i < curve.size(); ++i) CHECK(curve[i].second <= curve[i - 1].second + 1e-9);
        // very low SI matches the ideal chain
        CHECK(curve.front().second == doctest::Approx(chain_throughput(chain, bw).bps).epsilon(1e-4));
        // overwhelming SI crushes throughput
        CHECK(curve.back().second < 0.01 * curve.front().second);
    }
    SUBCASE("sensitivity sweep requires full duplex") {
        RelayChain hd = chain;
        hd.duplex = Duplex::half;
        const std::array<double, 1> levels = {0.0};
        CHECK_THROWS_AS(si_sensitivity(hd, 1e9, levels), std::invalid_argument);
    }
    SUBCASE("ideal full duplex beats half duplex for two or more hops") {
        RelayChain hd = chain;
        hd.duplex = Duplex::half;
        CHECK(chain_throughput(chain, bw).bps > chain_throughput(hd, bw).bps);
    }
}

TEST_CASE("mode name parsing") {
    CHECK(relaying_from_name("AF") == Relaying::AF);
    CHECK(relaying_from_name("df") == Relaying::DF);
    CHECK(duplex_from_name("full") == Duplex::full);
    CHECK(duplex_from_name("half") == Duplex::half);
    CHECK_THROWS_AS(relaying_from_name("xx"), std::domain_error);
    CHECK_THROWS_AS(duplex_from_name("fdd"), std::domain_error);
}
