#include "eband/linkbudget.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eband/units.hpp"

namespace eband {

void LinkScenario::validate() const {
    if (!(freq_hz > 0.0)) throw std::invalid_argument("LinkScenario: freq_hz must be > 0");
    if (!(distance_m > 0.0)) throw std::invalid_argument("LinkScenario: distance_m must be > 0");
    if (!(availability_target_pct > 0.0 && availability_target_pct < 100.0))
        throw std::invalid_argument("LinkScenario: availability_target_pct must be in (0, 100)");
    for (double v : {tx_power_dbm, tx_gain_dbi, rx_gain_dbi, misc_loss_db, gas_db_per_km, excess_margin_db})
        if (!std::isfinite(v)) throw std::invalid_argument("LinkScenario: non-finite dB field");
}

double LinkScenario::threshold_dbm() const {
    if (rx_threshold_dbm) return *rx_threshold_dbm;
    if (!(bandwidth_hz > 0.0))
        throw std::invalid_argument("LinkScenario: bandwidth_hz required to derive the receiver threshold");
    return kThermalNoiseDbmHz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db +
           required_snr_db(modulation, target_ber);
}

namespace {

struct ClearSky {
    double fspl;
    double gas;
    double rx_dbm;
    double margin_db;
};

ClearSky clear_sky(const LinkScenario& s, double distance_m) {
    ClearSky c{};
    c.fspl = fspl_db(s.freq_hz, distance_m);
    c.gas = s.gas_db_per_km * distance_m / 1000.0;
    c.rx_dbm = s.tx_power_dbm + s.tx_gain_dbi + s.rx_gain_dbi - c.fspl - c.gas - s.misc_loss_db;
    c.margin_db = c.rx_dbm - s.threshold_dbm();
    return c;
}

double rain_attenuation(const LinkScenario& s, const RainContext& rain, double rain_rate, double distance_m) {
    if (rain_rate <= 0.0) return 0.0;
    return path_attenuation(rain.model, rain_rate, s.freq_hz / 1e9, rain.polarization, distance_m / 1000.0,
                            *rain.coeffs);
}

AvailabilityResult availability_at(const LinkScenario& s, const RainContext& rain, double distance_m) {
    const ClearSky c = clear_sky(s, distance_m);
    if (c.margin_db < 0.0) return {0.0, false};
    // usable margin against rain after the calibration offset
    const double margin = c.margin_db - s.excess_margin_db;
    if (margin <= 0.0) {
        // survives no rain at all: outage is the table's largest percent
        return {100.0 - rain.table.max_percent(), true};
    }
    const double r_max = std::min(200.0, rain.table.max_rain());
    if (rain_attenuation(s, rain, r_max, distance_m) <= margin) {
        // margin exceeds attenuation at the table's heaviest rain
        auto lk = rain.table.percent_exceeded(r_max);
        return {100.0 - lk.value, true};
    }
    // bisect for the rain rate whose attenuation equals the margin (0.01 dB)
    double lo = 0.0, hi = r_max;
    double r_star = 0.5 * (lo + hi);
    for (int i = 0; i < 200; ++i) {
        const double a = rain_attenuation(s, rain, r_star, distance_m);
        if (std::abs(a - margin) <= 0.01 || hi - lo < 1e-9) break;
        (a > margin ? hi : lo) = r_star;
        r_star = 0.5 * (lo + hi);
    }
    auto lk = rain.table.percent_exceeded(r_star);
    return {100.0 - lk.value, lk.clamped};
}

}  // namespace

AvailabilityResult availability(const LinkScenario& s, const RainContext& rain) {
    s.validate();
    return availability_at(s, rain, s.distance_m);
}

BudgetReport budget(const LinkScenario& s) {
    s.validate();
    const ClearSky c = clear_sky(s, s.distance_m);
    BudgetReport r;
    r.fspl_db = c.fspl;
    r.gas_db = c.gas;
    r.clear_sky_rx_dbm = c.rx_dbm;
    r.fade_margin_db = c.margin_db;
    r.eirp_dbm = s.tx_power_dbm + s.tx_gain_dbi;
    r.feasible = c.margin_db >= 0.0;
    r.availability_achieved_pct = r.feasible ? 100.0 : 0.0;
    r.data_rate_bps = r.feasible ? s.bandwidth_hz * bits_per_symbol(s.modulation) : 0.0;
    return r;
}

BudgetReport budget(const LinkScenario& s, const RainContext& rain) {
    BudgetReport r = budget(s);
    const double outage_pct = 100.0 - s.availability_target_pct;
    auto rate = rain.table.rain_rate(outage_pct);
    r.rain_db_at_target = rain_attenuation(s, rain, rate.value, s.distance_m) + s.excess_margin_db;
    auto av = availability_at(s, rain, s.distance_m);
    r.availability_achieved_pct = av.pct;
    r.availability_clamped = av.clamped;
    const bool meets = r.fade_margin_db >= r.rain_db_at_target;
    r.feasible = meets;
    r.data_rate_bps = meets ? s.bandwidth_hz * bits_per_symbol(s.modulation) : 0.0;
    return r;
}

RangeResult max_range(const LinkScenario& s, const RainContext& rain) {
    s.validate();
    const double d_cap = rain_model_max_distance_km(rain.model) * 1000.0;
    auto ok = [&](double d) { return availability_at(s, rain, d).pct >= s.availability_target_pct; };
    if (!ok(1.0)) return {0.0, false, false};
    if (ok(d_cap)) return {d_cap, true, true};
    double lo = 1.0, hi = d_cap;
    while (hi - lo > 1.0) {
        const double mid = 0.5 * (lo + hi);
        (ok(mid) ? lo : hi) = mid;
    }
    return {lo, true, false};
}

}  // namespace eband
