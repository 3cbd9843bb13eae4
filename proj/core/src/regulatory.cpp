#include "eband/regulatory.hpp"

#include <stdexcept>

#include "eband/units.hpp"

namespace eband {

Domain domain_from_name(const std::string& name) {
    if (name == "FCC" || name == "fcc") return Domain::FCC;
    if (name == "CEPT" || name == "cept") return Domain::CEPT;
    throw std::domain_error("unknown regulatory domain: " + name);
}

std::string domain_name(Domain d) { return d == Domain::FCC ? "FCC" : "CEPT"; }

DomainLimits domain_limits(Domain d) {
    if (d == Domain::FCC) return {55.0, 35.0, 43.0, -13.0};
    return {55.0, 30.0, 38.0, -30.0};
}

ComplianceReport check_compliance(const LinkScenario& s, Domain d) {
    const DomainLimits lim = domain_limits(d);
    ComplianceReport rep;
    rep.domain = d;
    rep.eirp_dbm = s.tx_power_dbm + s.tx_gain_dbi;
    rep.rules.push_back(
        {"max_eirp_dbw", lim.max_eirp_dbw, dbm_to_dbw(rep.eirp_dbm), dbm_to_dbw(rep.eirp_dbm) <= lim.max_eirp_dbw});
    rep.rules.push_back({"max_tx_power_dbm", lim.max_tx_power_dbm, s.tx_power_dbm, s.tx_power_dbm <= lim.max_tx_power_dbm});
    rep.rules.push_back(
        {"min_antenna_gain_dbi", lim.min_antenna_gain_dbi, s.tx_gain_dbi, s.tx_gain_dbi >= lim.min_antenna_gain_dbi});
    if (s.oob_dbm) rep.rules.push_back({"max_oob_dbm", lim.max_oob_dbm, *s.oob_dbm, *s.oob_dbm <= lim.max_oob_dbm});
    rep.pass = true;
    for (const auto& r : rep.rules) rep.pass = rep.pass && r.pass;
    return rep;
}

namespace {

constexpr double kGhz = 1e9;

double band_low_edge(EBand band) { return band == EBand::low ? 71.0 * kGhz : 81.0 * kGhz; }

}  // namespace

ChannelPlan cept_channel_plan(EBand band) {
    constexpr double guard = 0.125 * kGhz;
    constexpr double width = 0.250 * kGhz;
    constexpr int n_channels = 19;
    ChannelPlan plan;
    plan.band_low_hz = band_low_edge(band);
    plan.band_high_hz = plan.band_low_hz + 5.0 * kGhz;
    plan.guard_hz = guard;
    for (int i = 1; i <= n_channels; ++i) {
        Channel ch;
        ch.index = i;
        ch.low_hz = plan.band_low_hz + guard + (i - 1) * width;
        ch.high_hz = ch.low_hz + width;
        ch.center_hz = ch.low_hz + width / 2.0;
        plan.channels.push_back(ch);
    }
    return plan;
}

ChannelPlan fcc_channel_plan(EBand band) {
    ChannelPlan plan;
    plan.band_low_hz = band_low_edge(band);
    plan.band_high_hz = plan.band_low_hz + 5.0 * kGhz;
    plan.guard_hz = 0.0;
    plan.channels.push_back({1, plan.band_low_hz, plan.band_high_hz, (plan.band_low_hz + plan.band_high_hz) / 2.0});
    return plan;
}

std::pair<Channel, Channel> fdd_pair(const ChannelPlan& low, const ChannelPlan& high, int index) {
    auto find = [index](const ChannelPlan& plan) -> const Channel& {
        for (const auto& ch : plan.channels)
            if (ch.index == index) return ch;
        throw std::out_of_range("fdd_pair: channel index " + std::to_string(index) + " out of range");
    };
    return {find(low), find(high)};
}

}  // namespace eband
