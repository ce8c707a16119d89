#include "wurkit/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wurkit/errors.hpp"
#include "wurkit/rng.hpp"

namespace wurkit {

ActivityReport recipe_activity(const DecoderConfig& config, const StreamRecipe& recipe, unsigned rounds) {
  if (rounds == 0) throw ConfigError("recipe_activity: rounds must be positive");
  ActivityReport total;
  for (unsigned r = 0; r < rounds; ++r) {
    Rng rng = derived_rng(recipe.seed, 2 * r + 1);
    const Address address(random_bits(rng, config.n), config.max_capacity);
    StreamRecipe round_recipe = recipe;
    round_recipe.seed = rng();
    const GeneratedStream stream = gen_test_stream(address, round_recipe);
    const RunResult run = run_stream(config, address, stream.bits);
    total.cycles += run.activity.cycles;
    total.wakes += run.activity.wakes;
    total.events += run.activity.events;
    if (total.occupancy.empty()) {
      total.occupancy = run.activity.occupancy;
    } else {
      for (std::size_t j = 0; j < total.occupancy.size(); ++j)
        for (std::size_t i = 0; i < total.occupancy[j].size(); ++i) total.occupancy[j][i] += run.activity.occupancy[j][i];
    }
  }
  return total;
}

double CalibrationResult::max_abs_residual() const {
  double worst = 0;
  for (double r : relative_residuals) worst = std::max(worst, std::abs(r));
  return worst;
}

PowerParams default_energy_shape() {
  // Gated flip-flops keep only a small clock-pin load; an enabled one costs
  // slightly more than a gate transition.
  PowerParams shape;
  shape.e_ff_toggle = 1.0e-15;
  shape.e_ff_enable = 1.4e-15;
  shape.e_ff_clock = 0.032e-15;
  shape.e_gate_transition = 1.0e-15;
  shape.p_static_per_cell = 1.0e-12;
  return shape;
}

std::vector<CalibrationTarget> published_anchors() {
  return {
      {"lpsd-64@1Mbps", DecoderConfig::lpsd(64), 1e6, StreamRecipe{}, 68e-9},
      {"lpsd-32@1kbps", DecoderConfig::lpsd(32), 1e3, StreamRecipe{}, 2e-9},
  };
}

namespace {

PowerParams scaled(const PowerParams& shape, double dyn, double stat) {
  PowerParams p = shape;
  p.e_ff_toggle *= dyn;
  p.e_ff_enable *= dyn;
  p.e_ff_clock *= dyn;
  p.e_gate_transition *= dyn;
  p.p_static_per_cell *= stat;
  return p;
}

}  // namespace

CalibrationResult calibrate(std::span<const CalibrationTarget> targets, const PowerParams& shape, unsigned rounds) {
  if (targets.size() < 2) throw ConfigError("calibrate: at least two anchors are required (got " +
                                            std::to_string(targets.size()) + ")");
  shape.validate();

  // Row i, scaled by 1/expected: [dynamic_i, static_i] . [a, b] = 1
  std::vector<double> dyn, stat;
  for (const CalibrationTarget& t : targets) {
    if (!(t.expected_w > 0)) throw ConfigError("calibrate: anchor '" + t.label + "' must have positive power");
    const ActivityReport act = recipe_activity(t.config, t.recipe, rounds);
    const PowerReport base = estimate_power(act, t.bit_rate_hz, shape, t.config);
    dyn.push_back(base.dynamic_w / t.expected_w);
    stat.push_back(base.static_w / t.expected_w);
  }

  double sdd = 0, sds = 0, sss = 0, sd1 = 0, ss1 = 0;
  for (std::size_t i = 0; i < dyn.size(); ++i) {
    sdd += dyn[i] * dyn[i];
    sds += dyn[i] * stat[i];
    sss += stat[i] * stat[i];
    sd1 += dyn[i];
    ss1 += stat[i];
  }
  const double det = sdd * sss - sds * sds;
  if (!(std::abs(det) > 1e-12 * sdd * sss))
    throw ConfigError("calibrate: anchors do not separate dynamic from static power (underdetermined)");
  const double a = (sd1 * sss - ss1 * sds) / det;
  const double b = (ss1 * sdd - sd1 * sds) / det;

  CalibrationResult result;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    result.labels.push_back(targets[i].label);
    result.expected_w.push_back(targets[i].expected_w);
    result.relative_residuals.push_back(a * dyn[i] + b * stat[i] - 1.0);
    result.predicted_w.push_back((1.0 + result.relative_residuals.back()) * targets[i].expected_w);
  }
  if (a < 0 || b < 0)
    throw InfeasibleError("calibrate: fit requires a negative " + std::string(a < 0 ? "dynamic" : "static") +
                              " coefficient",
                          result.relative_residuals);
  result.dynamic_scale = a;
  result.static_scale = b;
  result.params = scaled(shape, a, b);
  return result;
}

const PowerParams& default_power_params() {
  static const PowerParams params = [] {
    const auto anchors = published_anchors();
    return calibrate(anchors).params;
  }();
  return params;
}

nlohmann::json to_json(const PowerParams& p) {
  return {{"e_ff_toggle_j", p.e_ff_toggle},
          {"e_ff_enable_j", p.e_ff_enable},
          {"e_ff_clock_j", p.e_ff_clock},
          {"e_gate_transition_j", p.e_gate_transition},
          {"p_static_per_cell_w", p.p_static_per_cell}};
}

nlohmann::json to_json(const CalibrationResult& r) {
  nlohmann::json anchors = nlohmann::json::array();
  for (std::size_t i = 0; i < r.labels.size(); ++i)
    anchors.push_back({{"label", r.labels[i]},
                       {"expected_w", r.expected_w[i]},
                       {"predicted_w", r.predicted_w[i]},
                       {"relative_residual", r.relative_residuals[i]}});
  return {{"coefficients", to_json(r.params)},
          {"dynamic_scale", r.dynamic_scale},
          {"static_scale", r.static_scale},
          {"anchors", anchors}};
}

PowerParams power_params_from_json(const nlohmann::json& doc) {
  const nlohmann::json& c = doc.contains("coefficients") ? doc.at("coefficients") : doc;
  PowerParams p;
  try {
    p.e_ff_toggle = c.at("e_ff_toggle_j").get<double>();
    p.e_ff_enable = c.at("e_ff_enable_j").get<double>();
    p.e_ff_clock = c.at("e_ff_clock_j").get<double>();
    p.e_gate_transition = c.at("e_gate_transition_j").get<double>();
    p.p_static_per_cell = c.at("p_static_per_cell_w").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("power params: ") + e.what());
  }
  p.validate();
  return p;
}

}  // namespace wurkit
