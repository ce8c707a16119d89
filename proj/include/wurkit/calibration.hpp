#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "wurkit/decoder.hpp"
#include "wurkit/power.hpp"
#include "wurkit/stream_recipe.hpp"

namespace wurkit {

inline constexpr unsigned kDefaultMixRounds = 8;

// Activity summed over `rounds` independent mixed streams. Round r draws its
// own address and stream from (recipe.seed, r).
ActivityReport recipe_activity(const DecoderConfig& config, const StreamRecipe& recipe,
                               unsigned rounds = kDefaultMixRounds);

struct CalibrationTarget {
  std::string label;
  DecoderConfig config;
  double bit_rate_hz = 0;
  StreamRecipe recipe;
  double expected_w = 0;
};

struct CalibrationResult {
  PowerParams params;
  double dynamic_scale = 0;
  double static_scale = 0;
  std::vector<std::string> labels;
  std::vector<double> expected_w;
  std::vector<double> predicted_w;
  std::vector<double> relative_residuals;  // (predicted - expected) / expected

  double max_abs_residual() const;
};

// Relative event energies. Calibration scales the four dynamic coefficients
// by one common factor and the static coefficient by another.
PowerParams default_energy_shape();

// 64-bit LPSD at 1 Mbps drawing 68 nW, and 32-bit LPSD at 1 kbps drawing 2 nW.
std::vector<CalibrationTarget> published_anchors();

// Weighted least-squares fit of the two scale factors so that each target's
// estimated power matches its expectation in relative terms. Needs at least
// two targets with independent dynamic/static mixes; throws ConfigError when
// underdetermined and InfeasibleError (carrying residuals) when a negative
// scale would be required.
CalibrationResult calibrate(std::span<const CalibrationTarget> targets, const PowerParams& shape = default_energy_shape(),
                            unsigned rounds = kDefaultMixRounds);

// Parameters fitted to published_anchors(); computed once per process.
const PowerParams& default_power_params();

nlohmann::json to_json(const PowerParams& params);
nlohmann::json to_json(const CalibrationResult& result);
// Accepts either a bare coefficient object or a calibration document with a
// "coefficients" member.
PowerParams power_params_from_json(const nlohmann::json& doc);

}  // namespace wurkit
