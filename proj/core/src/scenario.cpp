#include "eband/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "json.hpp"

namespace eband {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, const std::string& section, const std::set<std::string>& allowed) {
    for (const auto& [key, value] : j.items()) {
        if (!allowed.count(key))
            throw ScenarioError("unknown key '" + (section.empty() ? key : section + "." + key) + "'");
    }
}

double get_num(const json& j, const std::string& section, const std::string& key) {
    if (!j.contains(key)) throw ScenarioError("missing field '" + section + "." + key + "'");
    if (!j.at(key).is_number()) throw ScenarioError("field '" + section + "." + key + "' must be a number");
    return j.at(key).get<double>();
}

double get_num_or(const json& j, const std::string& /*section*/, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    return j.at(key).get<double>();
}

LinkScenario parse_link(const json& j, const std::string& section) {
    reject_unknown(j, section,
                   {"freq_hz", "distance_m", "tx_power_dbm", "tx_gain_dbi", "rx_gain_dbi", "rx_threshold_dbm",
                    "misc_loss_db", "gas_db_per_km", "excess_margin_db", "bandwidth_hz", "modulation",
                    "availability_target_pct", "noise_figure_db", "target_ber", "oob_dbm"});
    LinkScenario s;
    s.freq_hz = get_num(j, section, "freq_hz");
    s.distance_m = get_num(j, section, "distance_m");
    s.tx_power_dbm = get_num(j, section, "tx_power_dbm");
    s.tx_gain_dbi = get_num(j, section, "tx_gain_dbi");
    s.rx_gain_dbi = get_num(j, section, "rx_gain_dbi");
    if (j.contains("rx_threshold_dbm")) s.rx_threshold_dbm = j.at("rx_threshold_dbm").get<double>();
    s.misc_loss_db = get_num_or(j, section, "misc_loss_db", 0.0);
    s.gas_db_per_km = get_num_or(j, section, "gas_db_per_km", 0.0);
    s.excess_margin_db = get_num_or(j, section, "excess_margin_db", 0.0);
    s.bandwidth_hz = get_num_or(j, section, "bandwidth_hz", 0.0);
    if (j.contains("modulation")) s.modulation = modulation_from_name(j.at("modulation").get<std::string>());
    s.availability_target_pct = get_num_or(j, section, "availability_target_pct", 99.999);
    s.noise_figure_db = get_num_or(j, section, "noise_figure_db", 0.0);
    s.target_ber = get_num_or(j, section, "target_ber", 1e-6);
    if (j.contains("oob_dbm")) s.oob_dbm = j.at("oob_dbm").get<double>();
    return s;
}

RainSection parse_rain(const json& j) {
    reject_unknown(j, "rain", {"model", "polarization", "zone", "table", "table_csv", "coefficients_csv"});
    RainModel model = RainModel::itu;
    if (j.contains("model")) model = rain_model_from_name(j.at("model").get<std::string>());
    Polarization pol = Polarization::H;
    if (j.contains("polarization")) pol = polarization_from_name(j.at("polarization").get<std::string>());
    int sources = j.contains("zone") + j.contains("table") + j.contains("table_csv");
    if (sources != 1) throw ScenarioError("rain: exactly one of 'zone', 'table', 'table_csv' required");
    if (j.contains("zone"))
        return {model, pol, RainExceedanceTable::preset(j.at("zone").get<std::string>())};
    if (j.contains("table_csv"))
        return {model, pol, RainExceedanceTable::from_csv(j.at("table_csv").get<std::string>())};
    std::vector<std::pair<double, double>> pts;
    for (const auto& row : j.at("table")) pts.emplace_back(row.at(0).get<double>(), row.at(1).get<double>());
    return {model, pol, RainExceedanceTable(std::move(pts), "inline")};
}

Tracker parse_tracker(const json& j) {
    reject_unknown(j, "tracker", {"type", "window", "loop_bw_frac"});
    Tracker t;
    const std::string type = j.at("type").get<std::string>();
    if (type == "none")
        t.type = TrackerType::none;
    else if (type == "moving_average")
        t.type = TrackerType::moving_average;
    else if (type == "dd_pll")
        t.type = TrackerType::dd_pll;
    else
        throw ScenarioError("unknown tracker type '" + type + "'");
    if (j.contains("window")) t.window = j.at("window").get<int>();
    if (j.contains("loop_bw_frac")) t.loop_bw_frac = j.at("loop_bw_frac").get<double>();
    return t;
}

PhaseNoiseSection parse_phase_noise(const json& j) {
    reject_unknown(j, "phase_noise",
                   {"carrier_hz", "terms", "band", "symbol_rates_hz", "n_symbols", "tracker", "snr_db",
                    "modulation", "trials", "multiplier"});
    std::vector<PhaseNoiseTerm> terms;
    for (const auto& t : j.at("terms")) {
        reject_unknown(t, "phase_noise.terms[]", {"slope", "coeff"});
        terms.push_back({t.at("slope").get<int>(), t.at("coeff").get<double>()});
    }
    const auto& band = j.at("band");
    PhaseNoiseSection s{PhaseNoiseProfile(std::move(terms), get_num(j, "phase_noise", "carrier_hz"),
                                          band.at(0).get<double>(), band.at(1).get<double>())};
    if (j.contains("symbol_rates_hz")) {
        s.symbol_rates_hz.clear();
        for (const auto& r : j.at("symbol_rates_hz")) s.symbol_rates_hz.push_back(r.get<double>());
    }
    if (j.contains("n_symbols")) s.n_symbols = j.at("n_symbols").get<std::size_t>();
    if (j.contains("tracker")) s.tracker = parse_tracker(j.at("tracker"));
    s.snr_db = get_num_or(j, "phase_noise", "snr_db", 30.0);
    if (j.contains("modulation")) s.modulation = modulation_from_name(j.at("modulation").get<std::string>());
    if (j.contains("trials")) s.trials = j.at("trials").get<int>();
    if (j.contains("multiplier")) s.multiplier = j.at("multiplier").get<int>();
    return s;
}

MimoSection parse_mimo(const json& j) {
    reject_unknown(j, "mimo",
                   {"freq_hz", "distance_m", "n_antennas", "beams", "dish_gain_dbi", "element_gain_dbi",
                    "waterfilling", "lens_loss_db"});
    MimoSection s;
    s.freq_hz = get_num_or(j, "mimo", "freq_hz", 80e9);
    s.distance_m = get_num_or(j, "mimo", "distance_m", 200.0);
    if (j.contains("n_antennas")) s.n_antennas = j.at("n_antennas").get<int>();
    if (j.contains("beams")) s.beams = j.at("beams").get<int>();
    s.dish_gain_dbi = get_num_or(j, "mimo", "dish_gain_dbi", 55.0);
    s.element_gain_dbi = get_num_or(j, "mimo", "element_gain_dbi", 30.0);
    if (j.contains("waterfilling")) s.waterfilling = j.at("waterfilling").get<bool>();
    s.lens_loss_db = get_num_or(j, "mimo", "lens_loss_db", 0.0);
    return s;
}

RelayChain parse_relay(const json& j) {
    reject_unknown(j, "relay", {"hops", "relaying", "duplex", "self_interference_db", "parallel_beams"});
    RelayChain c;
    if (!j.contains("hops") || !j.at("hops").is_array() || j.at("hops").empty())
        throw ScenarioError("relay.hops: need at least one hop");
    int i = 0;
    for (const auto& hop : j.at("hops")) c.hops.push_back(parse_link(hop, "relay.hops[" + std::to_string(i++) + "]"));
    if (j.contains("relaying")) c.relaying = relaying_from_name(j.at("relaying").get<std::string>());
    if (j.contains("duplex")) c.duplex = duplex_from_name(j.at("duplex").get<std::string>());
    if (j.contains("self_interference_db")) {
        const auto& si = j.at("self_interference_db");
        if (si.is_string() && si.get<std::string>() == "-inf")
            c.self_interference_db = -std::numeric_limits<double>::infinity();
        else
            c.self_interference_db = si.get<double>();
    }
    if (j.contains("parallel_beams")) c.parallel_beams = j.at("parallel_beams").get<int>();
    return c;
}

SweepSpec parse_sweep(const json& j) {
    reject_unknown(j, "sweep", {"variable", "start", "stop", "points", "scale", "trials"});
    SweepSpec s;
    if (!j.contains("variable")) throw ScenarioError("missing field 'sweep.variable'");
    s.variable = j.at("variable").get<std::string>();
    s.start = get_num(j, "sweep", "start");
    s.stop = get_num(j, "sweep", "stop");
    s.points = static_cast<int>(get_num(j, "sweep", "points"));
    if (j.contains("scale")) {
        const std::string scale = j.at("scale").get<std::string>();
        if (scale == "log")
            s.log_scale = true;
        else if (scale != "linear")
            throw ScenarioError("sweep.scale must be 'linear' or 'log'");
    }
    if (j.contains("trials")) s.trials = j.at("trials").get<int>();
    if (s.points < 2) throw ScenarioError("sweep.points must be >= 2");
    if (!(s.start < s.stop)) throw ScenarioError("sweep.start must be < sweep.stop");
    return s;
}

}  // namespace

std::vector<double> SweepSpec::values() const {
    std::vector<double> v(points);
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        if (log_scale) {
            if (!(start > 0.0)) throw ScenarioError("sweep: log scale requires start > 0");
            v[i] = std::pow(10.0, std::log10(start) + t * (std::log10(stop) - std::log10(start)));
        } else {
            v[i] = start + t * (stop - start);
        }
    }
    return v;
}

Scenario Scenario::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("JSON parse error: ") + e.what());
    }
    try {
        reject_unknown(j, "",
                       {"schema_version", "master_seed", "link", "rain", "phase_noise", "mimo", "relay",
                        "regulatory", "sweep"});
        Scenario s;
        if (j.contains("schema_version")) s.schema_version = j.at("schema_version").get<int>();
        if (s.schema_version != 1) throw ScenarioError("unsupported schema_version");
        if (j.contains("master_seed")) s.master_seed = j.at("master_seed").get<std::uint64_t>();
        if (j.contains("link")) s.link = parse_link(j.at("link"), "link");
        if (j.contains("rain")) s.rain = parse_rain(j.at("rain"));
        if (j.contains("phase_noise")) s.phase_noise = parse_phase_noise(j.at("phase_noise"));
        if (j.contains("mimo")) s.mimo = parse_mimo(j.at("mimo"));
        if (j.contains("relay")) s.relay = parse_relay(j.at("relay"));
        if (j.contains("regulatory")) {
            reject_unknown(j.at("regulatory"), "regulatory", {"domain"});
            s.regulatory = domain_from_name(j.at("regulatory").at("domain").get<std::string>());
        }
        if (j.contains("sweep")) s.sweep = parse_sweep(j.at("sweep"));
        return s;
    } catch (const ScenarioError&) {
        throw;
    } catch (const json::exception& e) {
        throw ScenarioError(std::string("scenario: ") + e.what());
    } catch (const std::exception& e) {
        throw ScenarioError(std::string("scenario: ") + e.what());
    }
}

Scenario Scenario::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_json_text(text);
}

}  // namespace eband
