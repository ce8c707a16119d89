#include "wurkit/energy.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "wurkit/errors.hpp"

namespace wurkit::energy {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

bool positive(double x) { return std::isfinite(x) && x > 0; }
bool non_negative(double x) { return std::isfinite(x) && x >= 0; }

}  // namespace

void PowerProfile::validate() const {
  require(positive(p_tx) && positive(p_listen) && positive(p_active) && positive(p_sleep),
          "power profile: state powers must be positive");
  require(non_negative(p_wur), "power profile: p_wur must be non-negative");
  require(p_tx >= p_listen && p_listen >= p_active && p_active > p_sleep,
          "power profile: expected p_tx >= p_listen >= p_active > p_sleep");
}

void TimingProfile::validate() const {
  require(positive(t_ra) && positive(t_ra_resp) && positive(t_check) && positive(t_sync) && positive(t_ack),
          "timing profile: durations must be positive");
  require(positive(r_ul) && positive(r_dl) && positive(r_wur), "timing profile: bit rates must be positive");
  require(positive(wur_address_bits), "timing profile: wur_address_bits must be positive");
  require(std::isfinite(t_ra_search) && (t_ra_search < 0 || t_ra_search > 0),
          "timing profile: t_ra_search must be positive (or negative for the t_check default)");
}

void TrafficProfile::validate() const {
  require(non_negative(paging_rate) && non_negative(report_rate), "traffic profile: rates must be non-negative");
  require(std::isfinite(p_s) && p_s > 0 && p_s <= 1, "traffic profile: p_s must lie in (0, 1]");
  require(non_negative(payload_ul) && non_negative(payload_dl), "traffic profile: payloads must be non-negative");
  require(positive(check_period), "traffic profile: check_period must be positive");
}

const char* to_string(Scenario s) {
  switch (s) {
    case Scenario::DL: return "DL";
    case Scenario::DL_WUR: return "DL_WUR";
    case Scenario::UL: return "UL";
    case Scenario::UL_WUR: return "UL_WUR";
    case Scenario::UL_GFA_WUR: return "UL_GFA_WUR";
  }
  return "?";
}

Scenario parse_scenario(std::string_view name) {
  for (Scenario s : {Scenario::DL, Scenario::DL_WUR, Scenario::UL, Scenario::UL_WUR, Scenario::UL_GFA_WUR})
    if (name == to_string(s)) return s;
  throw ConfigError("unknown scenario '" + std::string(name) + "' (DL, DL_WUR, UL, UL_WUR, UL_GFA_WUR)");
}

namespace {

struct Builder {
  EnergyBreakdown out;

  void add(std::string name, double rate, double power_w, double duration_s) {
    out.phases.push_back({std::move(name), rate, power_w * duration_s, duration_s});
  }

  EnergyBreakdown finish() {
    double sum = out.baseline_w, duty = 0;
    for (const Phase& p : out.phases) {
      sum += p.power_w();
      duty += p.rate_hz * p.duration_s;
    }
    out.average_w = sum;
    out.duty_cycle = duty;
    if (duty > 1.0)
      throw InfeasibleError(std::string(to_string(out.scenario)) + ": duty cycle " + std::to_string(duty) +
                            " exceeds 1, events overlap");
    return std::move(out);
  }
};

}  // namespace

EnergyBreakdown avg_power(Scenario scenario, const Profiles& profiles) {
  const PowerProfile& pw = profiles.power;
  const TimingProfile& tm = profiles.timing;
  const TrafficProfile& tr = profiles.traffic;
  pw.validate();
  tm.validate();
  tr.validate();

  Builder b;
  b.out.scenario = scenario;
  const double paging = tr.paging_rate;
  const double attempts = tr.report_rate / tr.p_s;  // retransmissions repeat the whole attempt

  switch (scenario) {
    case Scenario::DL:
      if (paging > 1.0 / tr.check_period)
        throw InfeasibleError("DL: paging rate " + std::to_string(paging) + " Hz exceeds the check rate " +
                              std::to_string(1.0 / tr.check_period) + " Hz");
      b.out.baseline_w = pw.p_sleep;
      b.add("check", 1.0 / tr.check_period, pw.p_listen, tm.t_check);
      b.add("sync", paging, pw.p_active, tm.t_sync);
      b.add("data_rx", paging, pw.p_listen, tr.payload_dl / tm.r_dl);
      b.add("ack", paging, pw.p_tx, tm.t_ack);
      break;
    case Scenario::DL_WUR:
      b.out.baseline_w = pw.p_sleep + pw.p_wur;
      b.add("wake_signal", paging, pw.p_listen, tm.wake_signal_time());
      b.add("sync", paging, pw.p_active, tm.t_sync);
      b.add("data_rx", paging, pw.p_listen, tr.payload_dl / tm.r_dl);
      b.add("ack", paging, pw.p_tx, tm.t_ack);
      break;
    case Scenario::UL:
      b.out.baseline_w = pw.p_sleep;
      b.add("sync", attempts, pw.p_active, tm.t_sync);
      b.add("ra_search", attempts, pw.p_listen, tm.ra_search());
      b.add("ra", attempts, pw.p_tx, tm.t_ra);
      b.add("ra_response", attempts, pw.p_listen, tm.t_ra_resp);
      b.add("data_tx", attempts, pw.p_tx, tr.payload_ul / tm.r_ul);
      b.add("ack", attempts, pw.p_listen, tm.t_ack);
      break;
    case Scenario::UL_WUR:
      b.out.baseline_w = pw.p_sleep + pw.p_wur;
      b.add("sync", attempts, pw.p_active, tm.t_sync);
      b.add("ra_search", attempts, pw.p_listen, tm.ra_search());
      b.add("ra", attempts, pw.p_tx, tm.t_ra);
      b.add("ra_response_wait", attempts, pw.p_sleep + pw.p_wur, tm.t_ra_resp);
      b.add("wake_signal", attempts, pw.p_listen, tm.wake_signal_time());
      b.add("data_tx", attempts, pw.p_tx, tr.payload_ul / tm.r_ul);
      b.add("ack", attempts, pw.p_listen, tm.t_ack);
      break;
    case Scenario::UL_GFA_WUR:
      b.out.baseline_w = pw.p_sleep + pw.p_wur;
      b.add("sync", attempts, pw.p_active, tm.t_sync);
      b.add("data_tx", attempts, pw.p_tx, tr.payload_ul / tm.r_ul);
      b.add("wake_signal", attempts, pw.p_listen, tm.wake_signal_time());
      b.add("ack", attempts, pw.p_listen, tm.t_ack);
      break;
  }
  return b.finish();
}

const char* to_string(ScenarioPair p) {
  switch (p) {
    case ScenarioPair::Downlink: return "dl";
    case ScenarioPair::Uplink: return "ul";
    case ScenarioPair::UplinkGfa: return "ul-gfa";
  }
  return "?";
}

const char* to_string(SweepVariable v) { return v == SweepVariable::PagingRate ? "paging_rate" : "report_rate"; }

ScenarioPair parse_pair(std::string_view name) {
  for (ScenarioPair p : {ScenarioPair::Downlink, ScenarioPair::Uplink, ScenarioPair::UplinkGfa})
    if (name == to_string(p)) return p;
  throw ConfigError("unknown scenario pair '" + std::string(name) + "' (dl, ul, ul-gfa)");
}

SweepVariable parse_variable(std::string_view name) {
  for (SweepVariable v : {SweepVariable::PagingRate, SweepVariable::ReportRate})
    if (name == to_string(v)) return v;
  throw ConfigError("unknown sweep variable '" + std::string(name) + "' (paging_rate, report_rate)");
}

Scenario without_wur(ScenarioPair p) { return p == ScenarioPair::Downlink ? Scenario::DL : Scenario::UL; }

Scenario with_wur(ScenarioPair p) {
  switch (p) {
    case ScenarioPair::Downlink: return Scenario::DL_WUR;
    case ScenarioPair::Uplink: return Scenario::UL_WUR;
    case ScenarioPair::UplinkGfa: return Scenario::UL_GFA_WUR;
  }
  return Scenario::UL_WUR;
}

std::vector<SweepRow> sweep(ScenarioPair pair, SweepVariable variable, std::span<const double> rates,
                            const Profiles& profiles) {
  for (std::size_t i = 0; i < rates.size(); ++i) {
    if (!non_negative(rates[i])) throw ConfigError("sweep: rates must be finite and non-negative");
    if (i > 0 && !(rates[i] > rates[i - 1])) throw ConfigError("sweep: rates must be strictly increasing");
  }
  std::vector<SweepRow> rows;
  rows.reserve(rates.size());
  for (double rate : rates) {
    Profiles p = profiles;
    (variable == SweepVariable::PagingRate ? p.traffic.paging_rate : p.traffic.report_rate) = rate;
    SweepRow row;
    row.rate_hz = rate;
    try {
      row.power_without_w = avg_power(without_wur(pair), p).average_w;
      row.power_with_w = avg_power(with_wur(pair), p).average_w;
      row.gap_w = row.power_without_w - row.power_with_w;
    } catch (const InfeasibleError&) {
      row = SweepRow{rate, NAN, NAN, NAN, false};
    }
    rows.push_back(row);
  }
  return rows;
}

TotalPower total_power(const Profiles& profiles) {
  const EnergyBreakdown dl = avg_power(Scenario::DL, profiles);
  const EnergyBreakdown ul = avg_power(Scenario::UL, profiles);
  const EnergyBreakdown dl_w = avg_power(Scenario::DL_WUR, profiles);
  const EnergyBreakdown ul_w = avg_power(Scenario::UL_WUR, profiles);

  TotalPower t;
  // Periodic checks are idle overhead, not paging events.
  double checks = 0;
  for (const Phase& p : dl.phases)
    if (p.name == "check") checks += p.power_w();
  t.baseline_without_w = dl.baseline_w + checks;
  t.baseline_with_w = dl_w.baseline_w;
  t.dl_without_w = dl.phase_power_w() - checks;
  t.ul_without_w = ul.phase_power_w();
  t.dl_with_w = dl_w.phase_power_w();
  t.ul_with_w = ul_w.phase_power_w();
  t.without_wur_w = t.baseline_without_w + t.dl_without_w + t.ul_without_w;
  t.with_wur_w = t.baseline_with_w + t.dl_with_w + t.ul_with_w;
  const double duty_without = dl.duty_cycle + ul.duty_cycle, duty_with = dl_w.duty_cycle + ul_w.duty_cycle;
  if (duty_without > 1.0 || duty_with > 1.0)
    throw InfeasibleError("total_power: combined uplink and downlink duty cycle exceeds 1");
  return t;
}

namespace {

struct Field {
  const char* key;
  std::function<double&(Profiles&)> ref;
};

const std::vector<Field>& fields() {
  static const std::vector<Field> f = {
      {"p_tx_w", [](Profiles& p) -> double& { return p.power.p_tx; }},
      {"p_listen_w", [](Profiles& p) -> double& { return p.power.p_listen; }},
      {"p_active_w", [](Profiles& p) -> double& { return p.power.p_active; }},
      {"p_sleep_w", [](Profiles& p) -> double& { return p.power.p_sleep; }},
      {"p_wur_w", [](Profiles& p) -> double& { return p.power.p_wur; }},
      {"t_ra_s", [](Profiles& p) -> double& { return p.timing.t_ra; }},
      {"t_ra_resp_s", [](Profiles& p) -> double& { return p.timing.t_ra_resp; }},
      {"t_check_s", [](Profiles& p) -> double& { return p.timing.t_check; }},
      {"t_sync_s", [](Profiles& p) -> double& { return p.timing.t_sync; }},
      {"t_ack_s", [](Profiles& p) -> double& { return p.timing.t_ack; }},
      {"t_ra_search_s", [](Profiles& p) -> double& { return p.timing.t_ra_search; }},
      {"r_ul_bps", [](Profiles& p) -> double& { return p.timing.r_ul; }},
      {"r_dl_bps", [](Profiles& p) -> double& { return p.timing.r_dl; }},
      {"r_wur_bps", [](Profiles& p) -> double& { return p.timing.r_wur; }},
      {"wur_address_bits", [](Profiles& p) -> double& { return p.timing.wur_address_bits; }},
      {"paging_rate_hz", [](Profiles& p) -> double& { return p.traffic.paging_rate; }},
      {"report_rate_hz", [](Profiles& p) -> double& { return p.traffic.report_rate; }},
      {"p_s", [](Profiles& p) -> double& { return p.traffic.p_s; }},
      {"payload_ul_bits", [](Profiles& p) -> double& { return p.traffic.payload_ul; }},
      {"payload_dl_bits", [](Profiles& p) -> double& { return p.traffic.payload_dl; }},
      {"check_period_s", [](Profiles& p) -> double& { return p.traffic.check_period; }},
  };
  return f;
}

}  // namespace

Profiles profiles_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("profiles: expected a JSON object");
  Profiles p;
  for (const auto& [key, value] : doc.items()) {
    const Field* hit = nullptr;
    for (const Field& f : fields())
      if (key == f.key) hit = &f;
    if (!hit) throw ConfigError("profiles: unknown key '" + key + "'");
    if (!value.is_number()) throw ConfigError("profiles: '" + key + "' must be a number");
    hit->ref(p) = value.get<double>();
  }
  p.power.validate();
  p.timing.validate();
  p.traffic.validate();
  return p;
}

nlohmann::ordered_json to_json(const Profiles& profiles) {
  Profiles copy = profiles;
  if (copy.timing.t_ra_search < 0) copy.timing.t_ra_search = copy.timing.t_check;
  nlohmann::ordered_json out;
  for (const Field& f : fields()) out[f.key] = f.ref(copy);
  return out;
}

}  // namespace wurkit::energy
