// eband: E-band point-to-point link planning CLI.
//
// Subcommands: budget, range, sweep, pn-evm, mimo-capacity, relay,
// compliance, channel-plan, ingest. Data goes to stdout (or --out),
// diagnostics to stderr. Exit codes: 0 ok, 1 input error, 2 infeasible.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "eband/scenario.hpp"
#include "eband/sweep.hpp"
#include "eband/units.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInfeasible = 2;

struct CommonOpts {
    std::string scenario_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::string format = "json";
    unsigned threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool scenario_required = true) {
    auto* s = cmd->add_option("--scenario", o.scenario_path, "Scenario JSON file");
    if (scenario_required) s->required();
    cmd->add_option("--seed", o.seed, "Master seed override");
    cmd->add_option("--out", o.out_path, "Output file (default stdout)");
    cmd->add_option("--format", o.format, "Output format: csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--threads", o.threads, "Worker threads for sweeps");
}

void emit(const CommonOpts& o, const std::string& data) {
    if (o.out_path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(o.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + o.out_path);
    out << data;
}

eband::Scenario load_scenario(const CommonOpts& o) {
    auto s = eband::Scenario::from_json_file(o.scenario_path);
    if (o.seed) s.master_seed = *o.seed;
    return s;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

json budget_json(const eband::BudgetReport& r) {
    return json{{"fspl_db", r.fspl_db},
                {"gas_db", r.gas_db},
                {"rain_db_at_target", r.rain_db_at_target},
                {"clear_sky_rx_dbm", r.clear_sky_rx_dbm},
                {"fade_margin_db", r.fade_margin_db},
                {"availability_achieved_pct", r.availability_achieved_pct},
                {"availability_clamped", r.availability_clamped},
                {"data_rate_bps", r.data_rate_bps},
                {"eirp_dbm", r.eirp_dbm},
                {"feasible", r.feasible}};
}

int cmd_budget(const CommonOpts& o) {
    auto s = load_scenario(o);
    if (!s.link) throw eband::ScenarioError("missing field 'link'");
    eband::BudgetReport r = s.rain ? eband::budget(*s.link, s.rain->context()) : eband::budget(*s.link);
    emit(o, budget_json(r).dump(2) + "\n");
    return r.feasible ? kExitOk : kExitInfeasible;
}

int cmd_range(const CommonOpts& o) {
    auto s = load_scenario(o);
    if (!s.link) throw eband::ScenarioError("missing field 'link'");
    if (!s.rain) throw eband::ScenarioError("missing field 'rain' (required for range solving)");
    auto r = eband::max_range(*s.link, s.rain->context());
    json j{{"max_range_m", r.distance_m}, {"feasible", r.feasible}, {"model_capped", r.model_capped}};
    emit(o, j.dump(2) + "\n");
    return r.feasible ? kExitOk : kExitInfeasible;
}

std::string mimo_capacity_csv(const eband::MimoSection& m, const std::vector<double>& rho_values,
                              unsigned threads) {
    eband::SystemPreset dish{eband::SystemKind::dish, m.dish_gain_dbi, 0, 1, 1, m.waterfilling, 0.0};
    eband::SystemPreset conv{eband::SystemKind::conv_mimo, 0, m.element_gain_dbi, m.n_antennas, 1, m.waterfilling, 0.0};
    eband::SystemPreset cap{eband::SystemKind::cap_mimo, m.dish_gain_dbi, 0, 1, m.beams, m.waterfilling, m.lens_loss_db};
    auto rows = eband::parallel_map<std::string>(rho_values.size(), threads, [&](std::size_t i) {
        const double rho = rho_values[i];
        return fmt(rho) + "," + fmt(eband::spectral_efficiency(dish, rho)) + "," +
               fmt(eband::spectral_efficiency(conv, rho)) + "," + fmt(eband::spectral_efficiency(cap, rho)) + "\n";
    });
    std::string out = "rho_db,dish_bps_hz,conv_mimo_bps_hz,cap_mimo_bps_hz\n";
    for (const auto& r : rows) out += r;
    return out;
}

int cmd_mimo_capacity(const CommonOpts& o) {
    auto s = load_scenario(o);
    if (!s.mimo) throw eband::ScenarioError("missing field 'mimo'");
    std::vector<double> rho;
    if (s.sweep && s.sweep->variable == "rho_db")
        rho = s.sweep->values();
    else
        rho = eband::SweepSpec{"rho_db", -40.0, 60.0, 101, false, 1}.values();
    emit(o, mimo_capacity_csv(*s.mimo, rho, o.threads));
    return kExitOk;
}

std::string pn_evm_csv(const eband::Scenario& s, const std::vector<double>& floor_values, int trials,
                       unsigned threads) {
    const auto& pn = *s.phase_noise;
    const auto base = pn.profile.scaled_by_multiplier(pn.multiplier);
    const std::size_t n_rates = pn.symbol_rates_hz.size();
    auto rows = eband::parallel_map<std::string>(floor_values.size() * n_rates, threads, [&](std::size_t idx) {
        const std::size_t pi = idx / n_rates;
        const std::size_t ri = idx % n_rates;
        const double floor_db = floor_values[pi];
        const auto profile = base.with_coeff(0, eband::db_to_linear(floor_db));
        eband::SynthesisConfig cfg;
        cfg.symbol_rate_hz = pn.symbol_rates_hz[ri];
        cfg.n_symbols = pn.n_symbols;
        cfg.stream = {s.master_seed, idx + 1};
        cfg.tracker = pn.tracker;
        const auto res = eband::evm_monte_carlo(profile, cfg, pn.snr_db, pn.modulation, trials);
        return fmt(floor_db) + "," + fmt(cfg.symbol_rate_hz) + "," + fmt(res.rms_evm_pct) + "," +
               fmt(res.ci_half_width_pct) + "\n";
    });
    std::string out = "floor_dbc_hz,symbol_rate_hz,evm_pct,ci_pct\n";
    for (const auto& r : rows) out += r;
    return out;
}

int cmd_pn_evm(const CommonOpts& o) {
    auto s = load_scenario(o);
    if (!s.phase_noise) throw eband::ScenarioError("missing field 'phase_noise'");
    const auto& pn = *s.phase_noise;
    const auto profile = pn.profile.scaled_by_multiplier(pn.multiplier);
    json out = json::array();
    std::size_t idx = 0;
    for (double rate : pn.symbol_rates_hz) {
        eband::SynthesisConfig cfg;
        cfg.symbol_rate_hz = rate;
        cfg.n_symbols = pn.n_symbols;
        cfg.stream = {s.master_seed, ++idx};
        cfg.tracker = pn.tracker;
        const auto res = eband::evm_monte_carlo(profile, cfg, pn.snr_db, pn.modulation, pn.trials);
        out.push_back(json{{"symbol_rate_hz", rate},
                           {"rms_evm_pct", res.rms_evm_pct},
                           {"ci_half_width_pct", res.ci_half_width_pct},
                           {"residual_phase_variance", res.residual_phase_variance},
                           {"tracker_diverged", res.tracker_diverged}});
    }
    emit(o, out.dump(2) + "\n");
    return kExitOk;
}

std::string si_sweep_csv(const eband::RelayChain& chain, const std::vector<double>& si_values, unsigned threads) {
    auto rows = eband::parallel_map<std::string>(si_values.size(), threads, [&](std::size_t i) {
        eband::RelayChain c = chain;
        c.self_interference_db = si_values[i];
        const auto r = eband::chain_throughput(c, chain.hops.front().bandwidth_hz);
        return fmt(si_values[i]) + "," + fmt(r.bps / 1e9) + "\n";
    });
    std::string out = "si_db,throughput_gbps\n";
    for (const auto& r : rows) out += r;
    return out;
}

std::string distance_sweep_csv(const eband::Scenario& s, const std::vector<double>& distances, unsigned threads) {
    auto rows = eband::parallel_map<std::string>(distances.size(), threads, [&](std::size_t i) {
        eband::LinkScenario link = *s.link;
        link.distance_m = distances[i];
        const auto r = s.rain ? eband::budget(link, s.rain->context()) : eband::budget(link);
        return fmt(distances[i]) + "," + fmt(r.fade_margin_db) + "," + fmt(r.availability_achieved_pct) + "," +
               fmt(r.data_rate_bps) + "\n";
    });
    std::string out = "distance_m,fade_margin_db,availability_pct,data_rate_bps\n";
    for (const auto& r : rows) out += r;
    return out;
}

int cmd_sweep(const CommonOpts& o) {
    auto s = load_scenario(o);
    if (!s.sweep) throw eband::ScenarioError("missing field 'sweep'");
    const auto& sw = *s.sweep;
    const auto values = sw.values();
    if (sw.variable == "rho_db") {
        if (!s.mimo) throw eband::ScenarioError("missing field 'mimo'");
        emit(o, mimo_capacity_csv(*s.mimo, values, o.threads));
    } else if (sw.variable == "floor_dbc_hz") {
        if (!s.phase_noise) throw eband::ScenarioError("missing field 'phase_noise'");
        emit(o, pn_evm_csv(s, values, sw.trials, o.threads));
    } else if (sw.variable == "si_db") {
        if (!s.relay) throw eband::ScenarioError("missing field 'relay'");
        emit(o, si_sweep_csv(*s.relay, values, o.threads));
    } else if (sw.variable == "distance_m") {
        if (!s.link) throw eband::ScenarioError("missing field 'link'");
        emit(o, distance_sweep_csv(s, values, o.threads));
    } else {
        throw eband::ScenarioError("unknown sweep variable '" + sw.variable + "'");
    }
    return kExitOk;
}

int cmd_relay(const CommonOpts& o) {
    auto s = load_scenario(o);
    if (!s.relay) throw eband::ScenarioError("missing field 'relay'");
    const auto r = eband::chain_throughput(*s.relay, s.relay->hops.front().bandwidth_hz);
    json j{{"throughput_bps", r.bps},
           {"bottleneck_hop", r.bottleneck_hop},
           {"feasible", r.feasible},
           {"per_hop_snr_db", r.per_hop_snr_db}};
    if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
    emit(o, j.dump(2) + "\n");
    return r.feasible ? kExitOk : kExitInfeasible;
}

int cmd_compliance(const CommonOpts& o) {
    auto s = load_scenario(o);
    if (!s.link) throw eband::ScenarioError("missing field 'link'");
    if (!s.regulatory) throw eband::ScenarioError("missing field 'regulatory'");
    const auto rep = eband::check_compliance(*s.link, *s.regulatory);
    json rules = json::array();
    for (const auto& r : rep.rules)
        rules.push_back(json{{"name", r.name}, {"limit", r.limit}, {"value", r.value}, {"pass", r.pass}});
    json j{{"domain", eband::domain_name(rep.domain)}, {"eirp_dbm", rep.eirp_dbm}, {"rules", rules}, {"pass", rep.pass}};
    emit(o, j.dump(2) + "\n");
    return rep.pass ? kExitOk : kExitInfeasible;
}

json plan_json(const eband::ChannelPlan& plan) {
    json channels = json::array();
    for (const auto& ch : plan.channels)
        channels.push_back(
            json{{"index", ch.index}, {"low_hz", ch.low_hz}, {"high_hz", ch.high_hz}, {"center_hz", ch.center_hz}});
    return json{{"band_low_hz", plan.band_low_hz},
                {"band_high_hz", plan.band_high_hz},
                {"guard_hz", plan.guard_hz},
                {"channels", channels}};
}

int cmd_channel_plan(const CommonOpts& o, const std::string& band, const std::string& domain) {
    const eband::EBand b = band == "low" ? eband::EBand::low : eband::EBand::high;
    const auto plan = eband::domain_from_name(domain) == eband::Domain::CEPT ? eband::cept_channel_plan(b)
                                                                             : eband::fcc_channel_plan(b);
    emit(o, plan_json(plan).dump(2) + "\n");
    return kExitOk;
}

int cmd_ingest(const CommonOpts& o, const std::string& csv_path) {
    auto s = load_scenario(o);
    if (!s.link) throw eband::ScenarioError("missing field 'link'");
    if (!s.rain) throw eband::ScenarioError("missing field 'rain'");
    const auto series = eband::AttenuationSeries::from_csv(csv_path);
    if (!series.has_measured()) throw eband::ScenarioError("series has no measured_atten_db column");
    const auto st = eband::residual_analysis(series, s.rain->model, s.link->freq_hz / 1e9, s.rain->polarization,
                                             s.link->distance_m / 1000.0);
    json percentiles;
    for (const auto& [p, v] : st.percentiles_db) percentiles[std::to_string(p)] = v;
    json j{{"n_samples", st.residuals_db.size()}, {"mean_residual_db", st.mean_db}, {"percentiles_db", percentiles}};
    std::cout << j.dump(2) << "\n";
    if (!o.out_path.empty()) {
        std::string csv = "timestamp,rain_mm_per_h,measured_atten_db,residual_db\n";
        for (std::size_t i = 0; i < series.size(); ++i)
            csv += series.timestamps[i] + "," + fmt(series.rain_mm_per_h[i]) + "," +
                   fmt(series.measured_atten_db[i]) + "," + fmt(st.residuals_db[i]) + "\n";
        std::ofstream out(o.out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + o.out_path);
        out << csv;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"E-band point-to-point link planning toolkit"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string band = "low", domain = "CEPT", csv_path;

    auto* budget = app.add_subcommand("budget", "Link budget report");
    add_common(budget, o);
    auto* range = app.add_subcommand("range", "Maximum range at the availability target");
    add_common(range, o);
    auto* sweep = app.add_subcommand("sweep", "Run the scenario's sweep section");
    add_common(sweep, o);
    auto* pn_evm = app.add_subcommand("pn-evm", "Phase-noise EVM Monte Carlo");
    add_common(pn_evm, o);
    auto* mimo = app.add_subcommand("mimo-capacity", "DISH / conventional MIMO / CAP-MIMO capacity sweep");
    add_common(mimo, o);
    auto* relay = app.add_subcommand("relay", "Relay chain throughput");
    add_common(relay, o);
    auto* compliance = app.add_subcommand("compliance", "Regulatory compliance check");
    add_common(compliance, o);
    auto* plan = app.add_subcommand("channel-plan", "Channel plan generation");
    add_common(plan, o, /*scenario_required=*/false);
    plan->add_option("--band", band, "low (71-76 GHz) or high (81-86 GHz)")->check(CLI::IsMember({"low", "high"}));
    plan->add_option("--domain", domain, "FCC or CEPT")->check(CLI::IsMember({"FCC", "CEPT", "fcc", "cept"}));
    auto* ingest = app.add_subcommand("ingest", "Measured-series residual analysis");
    add_common(ingest, o);
    ingest->add_option("--csv", csv_path, "Measurement CSV")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (budget->parsed()) return cmd_budget(o);
        if (range->parsed()) return cmd_range(o);
        if (sweep->parsed()) return cmd_sweep(o);
        if (pn_evm->parsed()) return cmd_pn_evm(o);
        if (mimo->parsed()) return cmd_mimo_capacity(o);
        if (relay->parsed()) return cmd_relay(o);
        if (compliance->parsed()) return cmd_compliance(o);
        if (plan->parsed()) return cmd_channel_plan(o, band, domain);
        if (ingest->parsed()) return cmd_ingest(o, csv_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
