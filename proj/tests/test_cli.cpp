#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = EBAND_CLI_PATH;
const std::string kFixtures = std::string(EBAND_SOURCE_DIR) + "/tests/fixtures";

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_path(const std::string& stem) {
    return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/eband_cli_" + stem;
}

RunResult run(const std::string& args) {
    const std::string out_file = temp_path("stdout.txt");
    const std::string err_file = temp_path("stderr.txt");
    const std::string cmd = kCli + " " + args + " >" + out_file + " 2>" + err_file;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("budget subcommand") {
    SUBCASE("feasible link exits 0 and reports the fade margin") {
        const auto r = run("budget --scenario " + kFixtures + "/reference_link.json");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("\"fade_margin_db\": 32.8") != std::string::npos);
        CHECK(r.out.find("\"feasible\": true") != std::string::npos);
    }
    SUBCASE("infeasible link exits 2") {
        const std::string path = temp_path("infeasible.json");
        write_file(path, R"({"link": {"freq_hz": 73.5e9, "distance_m": 60000, "tx_power_dbm": 0,
            "tx_gain_dbi": 20, "rx_gain_dbi": 20, "rx_threshold_dbm": -58, "bandwidth_hz": 1e9},
            "rain": {"zone": "K"}})");
        const auto r = run("budget --scenario " + path);
        CHECK(r.exit_code == 2);
        CHECK(r.out.find("\"feasible\": false") != std::string::npos);
        std::remove(path.c_str());
    }
    SUBCASE("missing required field exits 1 and names it") {
        const std::string path = temp_path("missing.json");
        write_file(path, R"({"link": {"freq_hz": 73.5e9, "distance_m": 1000,
            "tx_gain_dbi": 43, "rx_gain_dbi": 43}})");
        const auto r = run("budget --scenario " + path);
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("tx_power_dbm") != std::string::npos);
        std::remove(path.c_str());
    }
    SUBCASE("nonexistent scenario file exits 1") {
        CHECK(run("budget --scenario /nonexistent.json").exit_code == 1);
    }
}

TEST_CASE("sweep subcommand") {
    SUBCASE("rho sweep emits header plus one row per point") {
        const auto r = run("sweep --scenario " + kFixtures + "/mimo.json");
        CHECK(r.exit_code == 0);
        CHECK(count_lines(r.out) == 102);
        CHECK(r.out.rfind("rho_db,dish_bps_hz,conv_mimo_bps_hz,cap_mimo_bps_hz\n", 0) == 0);
    }
    SUBCASE("reruns are byte-identical, independent of thread count") {
        const std::string args = "sweep --scenario " + kFixtures + "/mimo.json";
        const auto a = run(args + " --threads 1");
        const auto b = run(args + " --threads 1");
        const auto c = run(args + " --threads 8");
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
    }
    SUBCASE("phase-noise floor sweep is deterministic across thread counts") {
        const std::string args = "sweep --scenario " + kFixtures + "/pn_crossover.json";
        const auto a = run(args + " --threads 1");
        const auto b = run(args + " --threads 4");
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        // 5 floors x 2 symbol rates + header
        CHECK(count_lines(a.out) == 11);
        CHECK(a.out.rfind("floor_dbc_hz,symbol_rate_hz,evm_pct,ci_pct\n", 0) == 0);
    }
    SUBCASE("--out writes the same bytes as stdout") {
        const std::string path = temp_path("sweep.csv");
        const auto direct = run("sweep --scenario " + kFixtures + "/mimo.json");
        const auto filed = run("sweep --scenario " + kFixtures + "/mimo.json --out " + path);
        CHECK(filed.exit_code == 0);
        CHECK(slurp(path) == direct.out);
        std::remove(path.c_str());
    }
}

TEST_CASE("mimo-capacity default grid") {
    const auto r = run("mimo-capacity --scenario " + kFixtures + "/mimo.json");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 102);
}

TEST_CASE("relay subcommand reports per-hop SNR and throughput") {
    const auto r = run("relay --scenario " + kFixtures + "/relay_threebeam.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("throughput_bps") != std::string::npos);
    CHECK(r.out.find("per_hop_snr_db") != std::string::npos);
    CHECK(r.out.find("\"feasible\": true") != std::string::npos);
}

TEST_CASE("compliance subcommand") {
    const std::string path = temp_path("compliance.json");
    write_file(path, R"({"link": {"freq_hz": 73.5e9, "distance_m": 1000, "tx_power_dbm": 20,
        "tx_gain_dbi": 43, "rx_gain_dbi": 43}, "regulatory": {"domain": "FCC"}})");
    auto r = run("compliance --scenario " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"pass\": true") != std::string::npos);
    write_file(path, R"({"link": {"freq_hz": 73.5e9, "distance_m": 1000, "tx_power_dbm": 34,
        "tx_gain_dbi": 43, "rx_gain_dbi": 43}, "regulatory": {"domain": "CEPT"}})");
    r = run("compliance --scenario " + path);
    CHECK(r.exit_code == 2);  // 34 dBm exceeds the CEPT 30 dBm limit
    CHECK(r.out.find("\"pass\": false") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("channel-plan subcommand") {
    const auto cept = run("channel-plan --band low --domain CEPT");
    CHECK(cept.exit_code == 0);
    CHECK(cept.out.find("\"guard_hz\": 125000000.0") != std::string::npos);
    // 19 channel entries
    int n = 0;
    for (std::size_t pos = 0; (pos = cept.out.find("\"index\"", pos)) != std::string::npos; ++pos) ++n;
    CHECK(n == 19);
    const auto fcc = run("channel-plan --band high --domain FCC");
    CHECK(fcc.exit_code == 0);
    CHECK(fcc.out.find("83500000000.0") != std::string::npos);
}

TEST_CASE("ingest subcommand") {
    const std::string csv = temp_path("series.csv");
    const std::string scn = temp_path("ingest.json");
    write_file(scn, R"({"link": {"freq_hz": 75e9, "distance_m": 2000, "tx_power_dbm": 20,
        "tx_gain_dbi": 43, "rx_gain_dbi": 43}, "rain": {"zone": "K"}})");

    SUBCASE("constant +7 dB offset series reports mean residual 7") {
        // build rows whose measured attenuation is the model value + 7 dB;
        // do it by first asking the model via a zero-offset ingest is
        // circular, so use rain = 0 rows where the model contributes 0.
        std::string rows = "timestamp,rain_mm_per_h,measured_atten_db\n";
        for (int i = 0; i < 10; ++i) rows += "2024-01-01T00:0" + std::to_string(i) + ":00Z,0.0,7.0\n";
        write_file(csv, rows);
        const auto r = run("ingest --scenario " + scn + " --csv " + csv);
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("\"mean_residual_db\": 7.0") != std::string::npos);
    }
    SUBCASE("empty CSV exits 1") {
        write_file(csv, "timestamp,rain_mm_per_h,measured_atten_db\n");
        CHECK(run("ingest --scenario " + scn + " --csv " + csv).exit_code == 1);
    }
    SUBCASE("missing measured column exits 1") {
        write_file(csv, "timestamp,rain_mm_per_h\n2024-01-01T00:00:00Z,5.0\n");
        const auto r = run("ingest --scenario " + scn + " --csv " + csv);
        CHECK(r.exit_code == 1);
        CHECK(r.err.find("measured") != std::string::npos);
    }
    std::remove(csv.c_str());
    std::remove(scn.c_str());
}

TEST_CASE("usage errors") {
    CHECK(run("").exit_code != 0);
    CHECK(run("nonsense-subcommand").exit_code != 0);
    CHECK(run("budget").exit_code != 0);  // --scenario required
}
