#include "wurkit/power.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "wurkit/errors.hpp"

namespace wurkit {

void TechTiming::validate() const {
  if (!(t_gate > 0 && t_ff_enable > 0 && t_ff_toggle > 0)) throw ConfigError("timing constants must be positive");
  if (!(t_gate < t_ff_enable && t_ff_enable < t_ff_toggle))
    throw ConfigError("timing constants must satisfy t_gate < t_ff_enable < t_ff_toggle");
}

double TechTiming::legacy_offset(std::size_t n) const {
  return (std::log2(static_cast<double>(n)) + 1.0) * t_gate;
}

double TechTiming::lpsd_offset(std::size_t n) const {
  return static_cast<double>(n) * (t_ff_enable + 2.0 * t_gate) + t_gblock();
}

double max_delay(Architecture arch, std::size_t n, std::size_t m, const TechTiming& timing) {
  if (n < 1) throw ConfigError("max_delay: n must be at least 1");
  timing.validate();
  const double nn = static_cast<double>(n);
  if (arch == Architecture::Legacy) {
    if (m != 0) throw ConfigError("max_delay: legacy decoder has no redundant layers");
    return nn * timing.t_ff_toggle + timing.legacy_offset(n);
  }
  return nn * timing.t_ff_toggle + timing.lpsd_offset(n) + static_cast<double>(m) * timing.t_gate;
}

CellInventory cell_inventory(const DecoderConfig& config) {
  const std::uint64_t n = config.n;
  const std::uint64_t m = config.m;
  if (config.architecture == Architecture::Legacy) return {n, 2 * n - 1};
  return {n * (m + 1), 5 * n + 7 * n * m};
}

void PowerParams::validate() const {
  for (double v : {e_ff_toggle, e_ff_enable, e_ff_clock, e_gate_transition, p_static_per_cell})
    if (!(v >= 0) || !std::isfinite(v)) throw ConfigError("power coefficients must be finite and non-negative");
}

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts / 1e-3); }

PowerReport estimate_power(const ActivityReport& activity, double bit_rate_hz, const PowerParams& params,
                           const DecoderConfig& config) {
  if (activity.cycles == 0) throw ConfigError("estimate_power: activity report has zero cycles");
  if (!(bit_rate_hz > 0)) throw ConfigError("estimate_power: bit rate must be positive");
  params.validate();
  const ActivityDelta& e = activity.events;
  const double energy = static_cast<double>(e.ff_toggles) * params.e_ff_toggle +
                        static_cast<double>(e.ff_enable_events) * params.e_ff_enable +
                        static_cast<double>(e.ff_clock_events) * params.e_ff_clock +
                        static_cast<double>(e.gate_transitions) * params.e_gate_transition;
  PowerReport r;
  r.dynamic_w = energy / static_cast<double>(activity.cycles) * bit_rate_hz;
  r.static_w = static_cast<double>(cell_inventory(config).cells()) * params.p_static_per_cell;
  r.total_w = r.dynamic_w + r.static_w;
  r.total_dbm = watts_to_dbm(r.total_w);
  return r;
}

namespace {

constexpr std::array<double, 4> kAreaLengths = {8, 16, 32, 64};
// um^2, 65 nm synthesis.
constexpr std::array<double, 4> kLegacyArea = {137.88, 279.0, 561.6, 1126.6};
constexpr std::array<std::array<double, 4>, 3> kLpsdArea = {{
    {191.88, 430.92, 909.36, 1866.24},
    {528.48, 1156.32, 2366.64, 4925.52},
    {794.52, 1736.28, 3551.76, 7390.08},
}};

AreaEstimate row_area(const std::array<double, 4>& row, double n) {
  for (std::size_t i = 0; i < kAreaLengths.size(); ++i)
    if (n == kAreaLengths[i]) return {row[i], false};
  if (n > kAreaLengths.front() && n < kAreaLengths.back()) {
    std::size_t i = 0;
    while (kAreaLengths[i + 1] < n) ++i;
    const double f = (n - kAreaLengths[i]) / (kAreaLengths[i + 1] - kAreaLengths[i]);
    return {row[i] + f * (row[i + 1] - row[i]), false};
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    sx += kAreaLengths[i];
    sy += row[i];
    sxx += kAreaLengths[i] * kAreaLengths[i];
    sxy += kAreaLengths[i] * row[i];
  }
  const double k = static_cast<double>(row.size());
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / k;
  return {std::max(0.0, intercept + slope * n), true};
}

}  // namespace

AreaEstimate area(Architecture arch, std::size_t n, std::size_t m) {
  if (n < 1) throw ConfigError("area: n must be at least 1");
  const double nn = static_cast<double>(n);
  if (arch == Architecture::Legacy) {
    if (m != 0) throw ConfigError("area: legacy decoder has no redundant layers");
    return row_area(kLegacyArea, nn);
  }
  if (m <= 2) return row_area(kLpsdArea[m], nn);
  const AreaEstimate a1 = row_area(kLpsdArea[1], nn);
  const AreaEstimate a2 = row_area(kLpsdArea[2], nn);
  return {a2.um2 + static_cast<double>(m - 2) * (a2.um2 - a1.um2), true};
}

double eta(double decoder_power_w, double wur_total_power_w) {
  if (!(wur_total_power_w > 0)) throw ConfigError("eta: receiver power must be positive");
  return 100.0 * decoder_power_w / wur_total_power_w;
}

}  // namespace wurkit
