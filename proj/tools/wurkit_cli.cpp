// wurkit: command-line front end. Every subcommand writes a few "# key=value"
// header lines (seed and all effective parameters) followed by CSV, or one
// JSON document with --format json.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wurkit/bits.hpp"
#include "wurkit/calibration.hpp"
#include "wurkit/channel.hpp"
#include "wurkit/codebook.hpp"
#include "wurkit/decoder.hpp"
#include "wurkit/energy.hpp"
#include "wurkit/errors.hpp"
#include "wurkit/power.hpp"
#include "wurkit/rng.hpp"
#include "wurkit/stream_recipe.hpp"

using namespace wurkit;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitResult = 1;  // infeasible point or failed check in the results
constexpr int kExitUsage = 2;

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_floating_point_v<T>)
      out += fmt(v[i]);
    else if constexpr (std::is_same_v<T, std::string>)
      out += v[i];
    else
      out += std::to_string(v[i]);
  }
  return out;
}

// Output document: header parameters plus one table.
struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<ojson>> rows;

  void param(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }
  void param(std::string key, double value) { param(std::move(key), fmt(value)); }
};

std::string cell_text(const ojson& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  if (v.is_number_integer()) return v.dump();
  return fmt(v.get<double>());
}

ojson number(double x) { return std::isfinite(x) ? ojson(x) : ojson(nullptr); }

void render(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    ojson doc;
    doc["command"] = r.command;
    doc["seed"] = r.seed;
    ojson params = ojson::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    doc["parameters"] = params;
    ojson rows = ojson::array();
    for (const auto& row : r.rows) {
      ojson obj;
      for (std::size_t i = 0; i < r.columns.size(); ++i) obj[r.columns[i]] = row[i];
      rows.push_back(obj);
    }
    doc["rows"] = rows;
    out << doc.dump(2) << '\n';
    return;
  }
  out << "# wurkit " << r.command << '\n' << "# seed=" << r.seed << '\n';
  for (const auto& [k, v] : r.params) out << "# " << k << '=' << v << '\n';
  out << join(r.columns) << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

struct Common {
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "csv";
};

std::uint64_t resolve_seed(const Common& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("WURKIT_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used, 0);
      if (used == std::char_traits<char>::length(env)) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError(std::string("WURKIT_SEED is not an unsigned integer: '") + env + "'");
  }
  return 1;
}

// Writes to --out or stdout.
void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file '" + c.out + "'");
  f << text;
}

void emit(const Common& c, const Report& r) {
  std::ostringstream s;
  render(r, c.format, s);
  emit(c, s.str());
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "Master RNG seed (falls back to WURKIT_SEED, then 1)");
  sub->add_option("--out", c.out, "Write output to this file instead of stdout");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

std::string describe(const StreamRecipe& r) {
  return "length=" + std::to_string(r.length) + " exact=" + fmt(r.fraction_exact) + " near=" + fmt(r.fraction_near) +
         " half=" + fmt(r.fraction_half) + " seed=" + std::to_string(r.seed);
}

// ---- decode ---------------------------------------------------------------

struct DecodeArgs {
  Common common;
  std::string address, stream, stream_file, arch = "lpsd";
  std::size_t m = 0;
  std::optional<std::size_t> len;
};

int cmd_decode(const DecodeArgs& a) {
  const std::uint64_t seed = resolve_seed(a.common);
  const Address address = Address::parse(a.address, std::max<std::size_t>(kDefaultMaxCapacity, a.address.size()));
  const BitStream stream = a.stream_file.empty() ? parse_bits(a.stream) : load_stream_file(a.stream_file);

  DecoderConfig config = parse_architecture(a.arch) == Architecture::Legacy ? DecoderConfig::legacy(address.size())
                                                                            : DecoderConfig::lpsd(address.size(), a.m);
  config.max_capacity = std::max(config.max_capacity, address.size());
  if (config.architecture == Architecture::Legacy && a.m != 0)
    throw ConfigError("the legacy decoder has no mismatch tolerance (m must be 0)");
  if (a.len) config = set_effective_length(config, *a.len);
  config.validate();

  const RunResult run = run_stream(config, address, stream);
  std::vector<std::size_t> wakes;
  for (std::size_t t = 0; t < run.wake_trace.size(); ++t)
    if (run.wake_trace[t]) wakes.push_back(t);

  Report r;
  r.command = "decode";
  r.seed = seed;
  r.param("arch", to_string(config.architecture));
  r.param("address", address.to_string());
  r.param("n", std::to_string(config.n));
  r.param("m", std::to_string(config.m));
  r.param("len", std::to_string(config.effective_length));
  r.param("stream_bits", std::to_string(stream.size()));
  r.columns = {"cycles", "wakes", "ff_toggles", "ff_enable_events", "ff_clock_events", "gate_transitions",
               "wake_indices"};
  std::string idx;
  for (std::size_t i = 0; i < wakes.size(); ++i) idx += (i ? " " : "") + std::to_string(wakes[i]);
  const ActivityDelta& e = run.activity.events;
  r.rows.push_back({run.activity.cycles, run.activity.wakes, e.ff_toggles, e.ff_enable_events, e.ff_clock_events,
                    e.gate_transitions, idx});
  emit(a.common, r);
  return kExitOk;
}

// ---- sweep-power ----------------------------------------------------------

struct SweepPowerArgs {
  Common common;
  std::vector<std::string> archs = {"legacy", "lpsd"};
  std::vector<std::size_t> ns = {8, 16, 32, 64};
  std::vector<std::size_t> ms = {0};
  std::vector<double> bit_rates = {1e6};
  std::size_t len = 5000;
  std::string params_file;
};

// Loads --params; a missing file falls back to the built-in calibration.
std::pair<PowerParams, std::string> load_params(const std::string& path) {
  if (path.empty()) return {default_power_params(), "built-in"};
  std::ifstream f(path);
  if (!f) {
    std::cerr << "warning: calibration file '" << path << "' not found, using built-in defaults\n";
    return {default_power_params(), "built-in (missing " + path + ")"};
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("calibration file '" + path + "': " + e.what(), 0);
  }
  return {power_params_from_json(doc), path};
}

int cmd_sweep_power(const SweepPowerArgs& a) {
  if (a.ns.empty() || a.ms.empty() || a.bit_rates.empty() || a.archs.empty())
    throw ConfigError("sweep-power: --n, --m, --bit-rate and --arch lists must be non-empty");
  const std::uint64_t seed = resolve_seed(a.common);
  const auto [params, source] = load_params(a.params_file);
  StreamRecipe recipe;
  recipe.length = a.len;
  recipe.seed = seed;
  recipe.validate();
  const TechTiming timing;

  Report r;
  r.command = "sweep-power";
  r.seed = seed;
  r.param("arch", join(a.archs));
  r.param("n", join(a.ns));
  r.param("m", join(a.ms));
  r.param("bit_rate_hz", join(a.bit_rates));
  r.param("recipe", describe(recipe));
  r.param("mix_rounds", std::to_string(kDefaultMixRounds));
  r.param("params", source);
  r.param("params_json", to_json(params).dump());
  r.param("timing", "t_ff_toggle_s=" + fmt(timing.t_ff_toggle) + " t_ff_enable_s=" + fmt(timing.t_ff_enable) +
                        " t_gate_s=" + fmt(timing.t_gate));
  r.param("note", "legacy rows exist only for m=0");
  r.columns = {"arch", "n", "m", "bit_rate_hz", "dynamic_w", "static_w", "total_w", "total_dbm", "delay_s",
               "area_um2", "area_extrapolated"};

  for (const std::string& arch_name : a.archs) {
    const Architecture arch = parse_architecture(arch_name);
    for (std::size_t n : a.ns)
      for (std::size_t m : a.ms) {
        if (arch == Architecture::Legacy && m != 0) continue;
        const DecoderConfig config = arch == Architecture::Legacy ? DecoderConfig::legacy(n) : DecoderConfig::lpsd(n, m);
        config.validate();
        const ActivityReport activity = recipe_activity(config, recipe);
        const AreaEstimate ar = area(arch, n, m);
        const double delay = max_delay(arch, n, m, timing);
        for (double rate : a.bit_rates) {
          const PowerReport p = estimate_power(activity, rate, params, config);
          r.rows.push_back({to_string(arch), n, m, number(rate), number(p.dynamic_w), number(p.static_w),
                            number(p.total_w), number(p.total_dbm), number(delay), number(ar.um2), ar.extrapolated});
        }
      }
  }
  emit(a.common, r);
  return kExitOk;
}

// ---- reliability ----------------------------------------------------------

struct ReliabilityArgs {
  Common common;
  std::size_t n = 16;
  std::vector<std::size_t> ms = {0, 1, 2};
  std::vector<double> p_bs = {0.01, 0.05, 0.1};
  std::size_t trials = 100000;
};

int cmd_reliability(const ReliabilityArgs& a) {
  if (a.trials < 100) throw ConfigError("reliability: --trials must be at least 100");
  if (a.ms.empty() || a.p_bs.empty()) throw ConfigError("reliability: --m and --p-b lists must be non-empty");
  const std::uint64_t seed = resolve_seed(a.common);
  Rng addr_rng = derived_rng(seed, 0);
  const Address address(random_bits(addr_rng, a.n), std::max(kDefaultMaxCapacity, a.n));

  Report r;
  r.command = "reliability";
  r.seed = seed;
  r.param("n", std::to_string(a.n));
  r.param("m", join(a.ms));
  r.param("p_b", join(a.p_bs));
  r.param("trials", std::to_string(a.trials));
  r.param("address", address.to_string());
  r.param("pass_rule", "|estimate-analytic| <= 3*max(stderr, analytic binomial stderr)");
  r.columns = {"n", "m", "p_b", "trials", "estimate", "stderr", "analytic", "pass"};

  bool all_pass = true;
  std::uint64_t point = 0;
  for (std::size_t m : a.ms)
    for (double p_b : a.p_bs) {
      DecoderConfig config = DecoderConfig::lpsd(a.n, m);
      config.max_capacity = std::max(config.max_capacity, a.n);
      config.validate();
      const std::uint64_t point_seed = derived_rng(seed, ++point)();
      const Estimate e = monte_carlo_detection(config, address, p_b, a.trials, point_seed);
      const double analytic = p_lpsd(a.n, m, p_b);
      const double sigma =
          std::max(e.stderr_, std::sqrt(analytic * (1 - analytic) / static_cast<double>(a.trials)));
      const bool pass = std::abs(e.value - analytic) <= 3 * sigma;
      all_pass = all_pass && pass;
      r.rows.push_back({a.n, m, number(p_b), a.trials, number(e.value), number(e.stderr_), number(analytic),
                        pass ? "pass" : "fail"});
    }
  emit(a.common, r);
  return all_pass ? kExitOk : kExitResult;
}

// ---- energy ---------------------------------------------------------------

struct EnergyArgs {
  Common common;
  std::string pair = "dl";
  std::string variable;
  std::vector<double> rates;
  std::string profiles_file;
};

energy::Profiles load_profiles(const std::string& path) {
  if (path.empty()) return {};
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open profiles file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("profiles file '" + path + "': " + e.what(), 0);
  }
  return energy::profiles_from_json(doc);
}

int cmd_energy(const EnergyArgs& a) {
  using namespace energy;
  const std::uint64_t seed = resolve_seed(a.common);
  const ScenarioPair pair = parse_pair(a.pair);
  const SweepVariable variable = a.variable.empty()
                                     ? (pair == ScenarioPair::Downlink ? SweepVariable::PagingRate
                                                                       : SweepVariable::ReportRate)
                                     : parse_variable(a.variable);
  std::vector<double> rates = a.rates;
  if (rates.empty())
    rates = variable == SweepVariable::PagingRate ? std::vector<double>{0.01, 0.02, 0.1, 0.5}
                                                  : std::vector<double>{0.001, 0.01, 0.1};
  const Profiles profiles = load_profiles(a.profiles_file);

  Report r;
  r.command = "energy";
  r.seed = seed;
  r.param("pair", to_string(pair));
  r.param("variable", to_string(variable));
  r.param("rates_hz", join(rates));
  r.param("profiles", a.profiles_file.empty() ? "defaults" : a.profiles_file);
  const nlohmann::ordered_json echoed = to_json(profiles);  // items() must not outlive it
  for (const auto& [k, v] : echoed.items()) r.param(k, v.get<double>());
  r.columns = {"scenario", "variable", "rate_hz", "power_without_w", "power_with_w", "gap_w", "status"};

  const std::string scenario = std::string(to_string(without_wur(pair))) + "/" + to_string(with_wur(pair));
  bool any_infeasible = false;
  for (const SweepRow& row : sweep(pair, variable, rates, profiles)) {
    any_infeasible = any_infeasible || !row.feasible;
    r.rows.push_back({scenario, to_string(variable), number(row.rate_hz), number(row.power_without_w),
                      number(row.power_with_w), number(row.gap_w), row.feasible ? "ok" : "infeasible"});
  }
  emit(a.common, r);
  return any_infeasible ? kExitResult : kExitOk;
}

// ---- delay / area ---------------------------------------------------------

struct GridArgs {
  Common common;
  std::vector<std::size_t> ns = {8, 16, 32, 64};
  std::vector<std::size_t> ms = {0, 1, 2};
  TechTiming timing;
};

int cmd_delay(const GridArgs& a) {
  if (a.ns.empty() || a.ms.empty()) throw ConfigError("delay: --n and --m lists must be non-empty");
  a.timing.validate();
  Report r;
  r.command = "delay";
  r.seed = resolve_seed(a.common);
  r.param("n", join(a.ns));
  r.param("m", join(a.ms));
  r.param("t_ff_toggle_s", a.timing.t_ff_toggle);
  r.param("t_ff_enable_s", a.timing.t_ff_enable);
  r.param("t_gate_s", a.timing.t_gate);
  r.columns = {"arch", "n", "m", "delay_s"};
  for (std::size_t n : a.ns) {
    if (n < 1) throw ConfigError("delay: n must be at least 1");
    r.rows.push_back({"legacy", n, 0, number(max_delay(Architecture::Legacy, n, 0, a.timing))});
    for (std::size_t m : a.ms) r.rows.push_back({"lpsd", n, m, number(max_delay(Architecture::Lpsd, n, m, a.timing))});
  }
  emit(a.common, r);
  return kExitOk;
}

int cmd_area(const GridArgs& a) {
  if (a.ns.empty() || a.ms.empty()) throw ConfigError("area: --n and --m lists must be non-empty");
  Report r;
  r.command = "area";
  r.seed = resolve_seed(a.common);
  r.param("n", join(a.ns));
  r.param("m", join(a.ms));
  r.columns = {"arch", "n", "m", "area_um2", "extrapolated"};
  for (std::size_t n : a.ns) {
    const AreaEstimate l = area(Architecture::Legacy, n, 0);
    r.rows.push_back({"legacy", n, 0, number(l.um2), l.extrapolated});
    for (std::size_t m : a.ms) {
      const AreaEstimate s = area(Architecture::Lpsd, n, m);
      r.rows.push_back({"lpsd", n, m, number(s.um2), s.extrapolated});
    }
  }
  emit(a.common, r);
  return kExitOk;
}

// ---- codebook -------------------------------------------------------------

struct CodebookArgs {
  Common common;
  std::size_t count = 2;
  std::size_t n = 8;
  std::size_t m = 1;
};

int cmd_codebook(const CodebookArgs& a) {
  const std::uint64_t seed = resolve_seed(a.common);
  const Codebook book = build_codebook(a.count, a.n, a.m);
  if (book.size() > 1 && book.measured_distance() < 2 * a.m + 1)
    throw InfeasibleError("codebook verification failed: distance " + std::to_string(book.measured_distance()));
  std::ostringstream s;
  if (a.common.format == "json") {
    ojson doc;
    doc["command"] = "codebook";
    doc["seed"] = seed;
    doc["n"] = a.n;
    doc["m"] = a.m;
    doc["min_distance"] = book.min_distance();
    doc["measured_distance"] = book.size() > 1 ? ojson(book.measured_distance()) : ojson(nullptr);
    ojson addrs = ojson::array();
    for (const Address& x : book.addresses()) addrs.push_back(x.to_string());
    doc["addresses"] = addrs;
    s << doc.dump(2) << '\n';
  } else {
    // Header first so the output is directly readable as a codebook file.
    book.write(s);
  }
  emit(a.common, s.str());
  return kExitOk;
}

// ---- calibrate ------------------------------------------------------------

struct CalibrateArgs {
  Common common;
  std::size_t len = 5000;
  unsigned rounds = kDefaultMixRounds;
};

int cmd_calibrate(const CalibrateArgs& a) {
  const std::uint64_t seed = resolve_seed(a.common);
  std::vector<CalibrationTarget> targets = published_anchors();
  for (CalibrationTarget& t : targets) {
    t.recipe.length = a.len;
    t.recipe.seed = seed;
  }
  const CalibrationResult result = calibrate(targets, default_energy_shape(), a.rounds);
  if (a.common.format == "csv") {
    Report r;
    r.command = "calibrate";
    r.seed = seed;
    r.param("recipe", describe(targets.front().recipe));
    r.param("mix_rounds", std::to_string(a.rounds));
    r.param("params_json", to_json(result.params).dump());
    r.param("dynamic_scale", result.dynamic_scale);
    r.param("static_scale", result.static_scale);
    r.columns = {"anchor", "expected_w", "predicted_w", "relative_residual"};
    for (std::size_t i = 0; i < result.labels.size(); ++i)
      r.rows.push_back({result.labels[i], number(result.expected_w[i]), number(result.predicted_w[i]),
                        number(result.relative_residuals[i])});
    emit(a.common, r);
  } else {
    ojson doc = ojson::parse(to_json(result).dump());
    doc["seed"] = seed;
    doc["recipe"] = describe(targets.front().recipe);
    doc["mix_rounds"] = a.rounds;
    emit(a.common, doc.dump(2) + "\n");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wurkit: wake-up receiver address decoder toolkit"};
  app.require_subcommand(1);

  DecodeArgs dec;
  auto* s_dec = app.add_subcommand("decode", "Run a decoder over a bit stream");
  add_common(s_dec, dec.common);
  s_dec->add_option("--address", dec.address, "Address bits, e.g. 10011101")->required();
  auto* o_stream = s_dec->add_option("--stream", dec.stream, "Stream bits");
  auto* o_file = s_dec->add_option("--stream-file", dec.stream_file, "Packed or ASCII stream file");
  o_stream->excludes(o_file);
  s_dec->add_option("--m", dec.m, "Mismatch tolerance (LPSD only)");
  s_dec->add_option("--len", dec.len, "Effective address length (trailing bits)");
  s_dec->add_option("--arch", dec.arch, "Decoder architecture")->check(CLI::IsMember({"lpsd", "legacy"}));

  SweepPowerArgs sp;
  auto* s_sp = app.add_subcommand("sweep-power", "Power, delay and area over a parameter grid");
  add_common(s_sp, sp.common);
  s_sp->add_option("--arch", sp.archs, "Architectures")->delimiter(',')->check(CLI::IsMember({"lpsd", "legacy"}));
  s_sp->add_option("--n", sp.ns, "Address lengths")->delimiter(',');
  s_sp->add_option("--m", sp.ms, "Mismatch tolerances")->delimiter(',');
  s_sp->add_option("--bit-rate", sp.bit_rates, "Bit rates in Hz")->delimiter(',');
  s_sp->add_option("--len", sp.len, "Test stream length per round");
  s_sp->add_option("--params", sp.params_file, "Calibration JSON from 'calibrate'");

  ReliabilityArgs rel;
  auto* s_rel = app.add_subcommand("reliability", "Monte Carlo detection probability against the analytic value");
  add_common(s_rel, rel.common);
  s_rel->add_option("--n", rel.n, "Address length");
  s_rel->add_option("--m", rel.ms, "Mismatch tolerances")->delimiter(',');
  s_rel->add_option("--p-b", rel.p_bs, "Bit error probabilities")->delimiter(',');
  s_rel->add_option("--trials", rel.trials, "Trials per point (>= 100)");

  EnergyArgs en;
  auto* s_en = app.add_subcommand("energy", "Device average power with and without a wake-up receiver");
  add_common(s_en, en.common);
  s_en->add_option("--pair", en.pair, "Scenario pair")->check(CLI::IsMember({"dl", "ul", "ul-gfa"}));
  s_en->add_option("--variable", en.variable, "Swept rate")->check(CLI::IsMember({"paging_rate", "report_rate"}));
  s_en->add_option("--rates", en.rates, "Rates in Hz, increasing")->delimiter(',');
  s_en->add_option("--profiles", en.profiles_file, "Profiles JSON (defaults when omitted)");

  GridArgs dl;
  auto* s_dl = app.add_subcommand("delay", "Worst-case decoding delay");
  add_common(s_dl, dl.common);
  s_dl->add_option("--n", dl.ns, "Address lengths")->delimiter(',');
  s_dl->add_option("--m", dl.ms, "Mismatch tolerances")->delimiter(',');
  s_dl->add_option("--t-ff-toggle", dl.timing.t_ff_toggle, "Flip-flop toggle delay, s");
  s_dl->add_option("--t-ff-enable", dl.timing.t_ff_enable, "Flip-flop enable delay, s");
  s_dl->add_option("--t-gate", dl.timing.t_gate, "Gate delay, s");

  GridArgs ar;
  auto* s_ar = app.add_subcommand("area", "Silicon area");
  add_common(s_ar, ar.common);
  s_ar->add_option("--n", ar.ns, "Address lengths")->delimiter(',');
  s_ar->add_option("--m", ar.ms, "Mismatch tolerances")->delimiter(',');

  CodebookArgs cb;
  auto* s_cb = app.add_subcommand("codebook", "Address codebook at distance 2m+1");
  add_common(s_cb, cb.common);
  s_cb->add_option("--count", cb.count, "Number of addresses");
  s_cb->add_option("--n", cb.n, "Address length");
  s_cb->add_option("--m", cb.m, "Mismatch tolerance");

  CalibrateArgs cal;
  cal.common.format = "json";
  auto* s_cal = app.add_subcommand("calibrate", "Fit power coefficients to the reference anchors");
  add_common(s_cal, cal.common);
  s_cal->add_option("--len", cal.len, "Test stream length per round");
  s_cal->add_option("--rounds", cal.rounds, "Mixed-stream rounds per target");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*s_dec) {
      if (dec.stream.empty() && dec.stream_file.empty()) throw ConfigError("decode: --stream or --stream-file required");
      return cmd_decode(dec);
    }
    if (*s_sp) return cmd_sweep_power(sp);
    if (*s_rel) return cmd_reliability(rel);
    if (*s_en) return cmd_energy(en);
    if (*s_dl) return cmd_delay(dl);
    if (*s_ar) return cmd_area(ar);
    if (*s_cb) return cmd_codebook(cb);
    if (*s_cal) return cmd_calibrate(cal);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitResult;
  }
  return kExitUsage;
}
