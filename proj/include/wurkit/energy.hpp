#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace wurkit::energy {

enum class Scenario { DL, DL_WUR, UL, UL_WUR, UL_GFA_WUR };

const char* to_string(Scenario s);
Scenario parse_scenario(std::string_view name);

// Power draw per radio state, watts.
struct PowerProfile {
  double p_tx = 80e-3;
  double p_listen = 60e-3;
  double p_active = 40e-3;
  double p_sleep = 20e-6;
  double p_wur = 1e-6;  // always-on wake-up receiver
  void validate() const;
};

// Durations in seconds, rates in bits/second.
struct TimingProfile {
  double t_ra = 10e-3;
  double t_ra_resp = 20e-3;
  double t_check = 10e-3;
  double t_sync = 5e-3;
  double t_ack = 1e-3;
  double r_ul = 1e3;
  double r_dl = 10e3;
  double r_wur = 1e6;
  double wur_address_bits = 64;
  // Control-channel search for random-access resources; negative means t_check.
  double t_ra_search = -1;

  double ra_search() const { return t_ra_search < 0 ? t_check : t_ra_search; }
  double wake_signal_time() const { return wur_address_bits / r_wur; }
  void validate() const;
};

struct TrafficProfile {
  double paging_rate = 0;   // downlink pagings per second
  double report_rate = 0;   // uplink reports per second
  double p_s = 0.9;         // uplink attempt success probability
  double payload_ul = 1000; // bits
  double payload_dl = 1000; // bits
  double check_period = 1;  // idle paging-check period without WuR, seconds
  void validate() const;
};

struct Profiles {
  PowerProfile power;
  TimingProfile timing;
  TrafficProfile traffic;
};

struct Phase {
  std::string name;
  double rate_hz = 0;    // occurrences per second
  double energy_j = 0;   // joules per occurrence
  double duration_s = 0; // seconds per occurrence
  double power_w() const { return rate_hz * energy_j; }
};

struct EnergyBreakdown {
  Scenario scenario = Scenario::DL;
  double baseline_w = 0;  // always-on draw (sleep, WuR)
  std::vector<Phase> phases;
  double duty_cycle = 0;  // fraction of time spent in phases
  double average_w = 0;   // baseline + sum of phase powers

  double phase_power_w() const { return average_w - baseline_w; }
};

// Average power of one procedure under the per-phase linear model (each
// phase costs state power times duration, repeated at its rate; uplink
// attempts repeat 1/p_s times on average). Throws InfeasibleError when the
// phases would overlap (duty cycle above 1) or a downlink paging rate
// exceeds the check rate.
EnergyBreakdown avg_power(Scenario scenario, const Profiles& profiles);

enum class ScenarioPair { Downlink, Uplink, UplinkGfa };
enum class SweepVariable { PagingRate, ReportRate };

const char* to_string(ScenarioPair p);
const char* to_string(SweepVariable v);
ScenarioPair parse_pair(std::string_view name);
SweepVariable parse_variable(std::string_view name);

// Without-WuR and with-WuR members of a pair.
Scenario without_wur(ScenarioPair p);
Scenario with_wur(ScenarioPair p);

struct SweepRow {
  double rate_hz = 0;
  double power_without_w = 0;
  double power_with_w = 0;
  double gap_w = 0;
  bool feasible = true;
};

// One row per rate, in input order. Rates must be strictly increasing.
std::vector<SweepRow> sweep(ScenarioPair pair, SweepVariable variable, std::span<const double> rates,
                            const Profiles& profiles);

struct TotalPower {
  double with_wur_w = 0;
  double without_wur_w = 0;
  double dl_with_w = 0, ul_with_w = 0;        // event terms, baseline excluded
  double dl_without_w = 0, ul_without_w = 0;
  double baseline_with_w = 0, baseline_without_w = 0;  // includes idle checks
};

// Uplink plus downlink, sharing one baseline. The without-WuR baseline
// includes the periodic paging checks.
TotalPower total_power(const Profiles& profiles);

// Flat JSON object, keys carry units (p_tx_w, t_ra_s, r_ul_bps, ...). Missing
// keys keep their defaults, unknown keys are rejected.
Profiles profiles_from_json(const nlohmann::json& doc);
nlohmann::ordered_json to_json(const Profiles& profiles);

}  // namespace wurkit::energy
