#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eband/linkbudget.hpp"

namespace eband {

enum class Domain { FCC, CEPT };

Domain domain_from_name(const std::string& name);
std::string domain_name(Domain d);

struct DomainLimits {
    double max_eirp_dbw;
    double max_tx_power_dbm;
    double min_antenna_gain_dbi;
    double max_oob_dbm;
};

/// FCC: 55 dBW EIRP, 35 dBm, 43 dBi, -13 dBm OOB.
/// CEPT: 55 dBW EIRP, 30 dBm, 38 dBi, -30 dBm OOB.
DomainLimits domain_limits(Domain d);

struct RuleCheck {
    std::string name;
    double limit;
    double value;
    bool pass;
};

struct ComplianceReport {
    Domain domain;
    double eirp_dbm;
    std::vector<RuleCheck> rules;
    bool pass;
};

/// EIRP = tx power + tx gain; each rule checked independently. The OOB
/// rule is included only when the scenario declares an emission level.
ComplianceReport check_compliance(const LinkScenario& s, Domain d);

struct Channel {
    int index;  // 1-based
    double low_hz;
    double high_hz;
    double center_hz;
};

struct ChannelPlan {
    double band_low_hz;
    double band_high_hz;
    double guard_hz;
    std::vector<Channel> channels;
};

enum class EBand { low, high };  // 71-76 / 81-86 GHz

/// CEPT plan: 125 MHz guard at each edge, 19 channels of 250 MHz.
ChannelPlan cept_channel_plan(EBand band);
/// FCC: no sub-channelization, a single full-band channel.
ChannelPlan fcc_channel_plan(EBand band);

/// FDD pairing of channel `index` across the two plans (10 GHz spacing
/// for the CEPT plans). Throws std::out_of_range on a bad index.
std::pair<Channel, Channel> fdd_pair(const ChannelPlan& low, const ChannelPlan& high, int index);

}  // namespace eband
