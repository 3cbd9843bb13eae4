#pragma once

#include <optional>

#include "eband/modulation.hpp"
#include "eband/propagation.hpp"
#include "eband/rain.hpp"

namespace eband {

struct LinkScenario {
    double freq_hz = 0.0;
    double distance_m = 0.0;
    double tx_power_dbm = 0.0;
    double tx_gain_dbi = 0.0;
    double rx_gain_dbi = 0.0;
    std::optional<double> rx_threshold_dbm;  // direct threshold takes precedence
    double misc_loss_db = 0.0;
    double gas_db_per_km = 0.0;
    double excess_margin_db = 0.0;  // calibration offset on top of model rain attenuation
    double bandwidth_hz = 0.0;
    Modulation modulation = Modulation::BPSK;
    double availability_target_pct = 99.999;
    double noise_figure_db = 0.0;
    double target_ber = 1e-6;
    std::optional<double> oob_dbm;  // declared out-of-band emission level

    void validate() const;

    /// Receiver threshold: the direct value when given, otherwise
    /// thermal floor + noise figure + required SNR at target_ber.
    double threshold_dbm() const;
};

/// Rain statistics bound to a scenario: model choice, polarization and
/// the exceedance table that maps rain rate to outage probability.
struct RainContext {
    RainModel model = RainModel::itu;
    Polarization polarization = Polarization::H;
    RainExceedanceTable table;
    const ItuRainCoefficients* coeffs = &ItuRainCoefficients::builtin();
};

struct BudgetReport {
    double fspl_db = 0.0;
    double gas_db = 0.0;
    double rain_db_at_target = 0.0;  // model rain + excess margin at the availability target
    double clear_sky_rx_dbm = 0.0;
    double fade_margin_db = 0.0;
    double availability_achieved_pct = 0.0;
    bool availability_clamped = false;
    double data_rate_bps = 0.0;
    double eirp_dbm = 0.0;
    bool feasible = false;
};

/// Budget chain without rain statistics: rain terms zero, availability
/// reported as 100 when the clear-sky margin is non-negative.
BudgetReport budget(const LinkScenario& s);

BudgetReport budget(const LinkScenario& s, const RainContext& rain);

struct AvailabilityResult {
    double pct = 0.0;
    bool clamped = false;
};

/// Availability implied by the fade margin: bisects for the rain rate
/// whose path attenuation (plus excess margin) equals the margin, then
/// maps it through the exceedance table. Negative margin -> 0%.
AvailabilityResult availability(const LinkScenario& s, const RainContext& rain);

struct RangeResult {
    double distance_m = 0.0;
    bool feasible = false;
    bool model_capped = false;  // still feasible at the rain model's max path
};

/// Largest distance meeting the availability target, bisection to 1 m.
RangeResult max_range(const LinkScenario& s, const RainContext& rain);

}  // namespace eband
