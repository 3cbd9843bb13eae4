#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "eband/linkbudget.hpp"
#include "eband/mimo.hpp"
#include "eband/phasenoise.hpp"
#include "eband/regulatory.hpp"
#include "eband/relay.hpp"

namespace eband {

/// Input-file problem: names the offending field in what().
class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PhaseNoiseSection {
    PhaseNoiseProfile profile{{{0, 1e-12}}, 1e9, 1.0, 1e12};
    std::vector<double> symbol_rates_hz{1e8, 1e9};
    std::size_t n_symbols = 20000;
    Tracker tracker;
    double snr_db = 30.0;
    Modulation modulation = Modulation::QAM16;
    int trials = 20;
    int multiplier = 1;
};

struct MimoSection {
    double freq_hz = 80e9;
    double distance_m = 200.0;
    int n_antennas = 4;
    int beams = 4;
    double dish_gain_dbi = 55.0;
    double element_gain_dbi = 30.0;
    bool waterfilling = false;
    double lens_loss_db = 0.0;
};

struct RainSection {
    RainModel model = RainModel::itu;
    Polarization polarization = Polarization::H;
    RainExceedanceTable table;

    RainContext context() const { return RainContext{model, polarization, table}; }
};

struct SweepSpec {
    std::string variable;  // rho_db, floor_dbc_hz, si_db, distance_m
    double start = 0.0;
    double stop = 0.0;
    int points = 2;
    bool log_scale = false;
    int trials = 20;

    std::vector<double> values() const;
};

struct Scenario {
    int schema_version = 1;
    std::uint64_t master_seed = 0;
    std::optional<LinkScenario> link;
    std::optional<RainSection> rain;
    std::optional<PhaseNoiseSection> phase_noise;
    std::optional<MimoSection> mimo;
    std::optional<RelayChain> relay;
    std::optional<Domain> regulatory;
    std::optional<SweepSpec> sweep;

    /// Strict parse: unknown keys rejected with a field diagnostic.
    static Scenario from_json_file(const std::string& path);
    static Scenario from_json_text(const std::string& text);
};

}  // namespace eband
