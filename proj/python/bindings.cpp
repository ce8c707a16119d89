#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "wurkit/bits.hpp"
#include "wurkit/calibration.hpp"
#include "wurkit/channel.hpp"
#include "wurkit/codebook.hpp"
#include "wurkit/decoder.hpp"
#include "wurkit/energy.hpp"
#include "wurkit/errors.hpp"
#include "wurkit/power.hpp"
#include "wurkit/stream_recipe.hpp"

namespace py = pybind11;
using namespace wurkit;

namespace {

DecoderConfig make_config(const std::string& arch, std::size_t n, std::size_t m, std::optional<std::size_t> len) {
  DecoderConfig c = parse_architecture(arch) == Architecture::Legacy ? DecoderConfig::legacy(n) : DecoderConfig::lpsd(n, m);
  c.max_capacity = std::max(c.max_capacity, n);
  if (parse_architecture(arch) == Architecture::Legacy && m != 0)
    throw ConfigError("the legacy decoder has no mismatch tolerance (m must be 0)");
  if (len) c = set_effective_length(c, *len);
  c.validate();
  return c;
}

py::dict activity_dict(const ActivityReport& a) {
  py::dict d;
  d["cycles"] = a.cycles;
  d["wakes"] = a.wakes;
  d["ff_toggles"] = a.events.ff_toggles;
  d["ff_enable_events"] = a.events.ff_enable_events;
  d["ff_clock_events"] = a.events.ff_clock_events;
  d["gate_transitions"] = a.events.gate_transitions;
  d["occupancy"] = a.occupancy;
  return d;
}

energy::Profiles profiles_from(const py::object& overrides) {
  if (overrides.is_none()) return {};
  const std::string text = py::str(py::module_::import("json").attr("dumps")(overrides));
  return energy::profiles_from_json(nlohmann::json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_wurkit, m) {
  m.doc() = "Wake-up receiver address decoder toolkit";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);

  m.def(
      "run_stream",
      [](const std::string& address, const std::string& stream, std::size_t mm, const std::string& arch,
         std::optional<std::size_t> len) {
        const Address a = Address::parse(address, std::max(kDefaultMaxCapacity, address.size()));
        const RunResult r = run_stream(make_config(arch, a.size(), mm, len), a, parse_bits(stream));
        return py::make_tuple(format_bits(r.wake_trace), activity_dict(r.activity));
      },
      py::arg("address"), py::arg("stream"), py::arg("m") = 0, py::arg("arch") = "lpsd", py::arg("len") = py::none(),
      "Decode a '0'/'1' stream; returns (wake trace string, activity dict).");

  m.def(
      "wake_oracle",
      [](const std::string& address, const std::string& stream, std::size_t mm, std::optional<std::size_t> len) {
        const Address a = Address::parse(address, std::max(kDefaultMaxCapacity, address.size()));
        return format_bits(wake_oracle(a, parse_bits(stream), mm, len.value_or(a.size())));
      },
      py::arg("address"), py::arg("stream"), py::arg("m") = 0, py::arg("len") = py::none());

  m.def(
      "gen_test_stream",
      [](const std::string& address, std::size_t length, double exact, double near, double half, std::uint64_t seed) {
        const Address a = Address::parse(address, std::max(kDefaultMaxCapacity, address.size()));
        const GeneratedStream g = gen_test_stream(a, StreamRecipe{length, exact, near, half, seed});
        py::list placements;
        for (const Placement& p : g.placements)
          placements.append(py::make_tuple(p.start, to_string(p.kind), p.flipped));
        return py::make_tuple(format_bits(g.bits), placements);
      },
      py::arg("address"), py::arg("length") = 5000, py::arg("exact") = 0.07, py::arg("near") = 0.10,
      py::arg("half") = 0.20, py::arg("seed") = 1);

  m.def("max_delay", [](const std::string& arch, std::size_t n, std::size_t mm) {
    return max_delay(parse_architecture(arch), n, mm);
  }, py::arg("arch"), py::arg("n"), py::arg("m") = 0);

  m.def("area", [](const std::string& arch, std::size_t n, std::size_t mm) {
    const AreaEstimate a = area(parse_architecture(arch), n, mm);
    return py::make_tuple(a.um2, a.extrapolated);
  }, py::arg("arch"), py::arg("n"), py::arg("m") = 0, "Returns (um2, extrapolated).");

  m.def(
      "estimate_power",
      [](const std::string& arch, std::size_t n, std::size_t mm, double bit_rate, std::size_t length,
         std::uint64_t seed) {
        const DecoderConfig c = make_config(arch, n, mm, std::nullopt);
        StreamRecipe recipe;
        recipe.length = length;
        recipe.seed = seed;
        const PowerReport p = estimate_power(recipe_activity(c, recipe), bit_rate, default_power_params(), c);
        py::dict d;
        d["dynamic_w"] = p.dynamic_w;
        d["static_w"] = p.static_w;
        d["total_w"] = p.total_w;
        d["total_dbm"] = p.total_dbm;
        return d;
      },
      py::arg("arch"), py::arg("n"), py::arg("m") = 0, py::arg("bit_rate") = 1e6, py::arg("length") = 5000,
      py::arg("seed") = 1, "Power on the mixed test stream with the built-in calibration.");

  m.def("calibrate", []() { return to_json(calibrate(published_anchors())).dump(); },
        "Fit the coefficients to the reference anchors; returns the JSON document.");

  m.def("eta", &eta, py::arg("decoder_w"), py::arg("wur_total_w"));
  m.def("ber", &ber, py::arg("c"), py::arg("lam"));
  m.def("p_conv", &p_conv, py::arg("n"), py::arg("p_b"));
  m.def("p_lpsd", &p_lpsd, py::arg("n"), py::arg("m"), py::arg("p_b"));

  m.def(
      "monte_carlo_detection",
      [](const std::string& address, std::size_t mm, double p_b, std::size_t trials, std::uint64_t seed) {
        const Address a = Address::parse(address, std::max(kDefaultMaxCapacity, address.size()));
        const Estimate e = monte_carlo_detection(make_config("lpsd", a.size(), mm, std::nullopt), a, p_b, trials, seed);
        return py::make_tuple(e.value, e.stderr_);
      },
      py::arg("address"), py::arg("m"), py::arg("p_b"), py::arg("trials"), py::arg("seed") = 1,
      "Returns (estimate, stderr).");

  m.def(
      "build_codebook",
      [](std::size_t count, std::size_t n, std::size_t mm) {
        std::vector<std::string> out;
        const Codebook book = build_codebook(count, n, mm);
        for (const Address& a : book.addresses()) out.push_back(a.to_string());
        return out;
      },
      py::arg("count"), py::arg("n"), py::arg("m"));

  m.def(
      "false_wake_rate",
      [](const std::vector<std::string>& addresses, std::size_t mm, double p_b, std::size_t trials,
         std::uint64_t seed) {
        if (addresses.empty()) throw ConfigError("false_wake_rate: empty codebook");
        std::vector<Address> parsed;
        for (const std::string& s : addresses) parsed.push_back(Address::parse(s, std::max(kDefaultMaxCapacity, s.size())));
        const std::size_t n = parsed.front().size();
        const Codebook book(n, 2 * mm + 1, std::move(parsed));
        const Estimate e = false_wake_rate(book, make_config("lpsd", n, mm, std::nullopt), p_b, trials, seed);
        return py::make_tuple(e.value, e.stderr_);
      },
      py::arg("addresses"), py::arg("m"), py::arg("p_b"), py::arg("trials"), py::arg("seed") = 1);

  m.def(
      "energy_avg_power",
      [](const std::string& scenario, const py::object& profiles) {
        return energy::avg_power(energy::parse_scenario(scenario), profiles_from(profiles)).average_w;
      },
      py::arg("scenario"), py::arg("profiles") = py::none(),
      "Average power in watts; profiles is a dict of overrides (e.g. {'paging_rate_hz': 0.1}).");

  m.def(
      "energy_sweep",
      [](const std::string& pair, const std::string& variable, const std::vector<double>& rates,
         const py::object& profiles) {
        py::list rows;
        for (const auto& r : energy::sweep(energy::parse_pair(pair), energy::parse_variable(variable), rates,
                                           profiles_from(profiles)))
          rows.append(py::make_tuple(r.rate_hz, r.power_without_w, r.power_with_w, r.gap_w, r.feasible));
        return rows;
      },
      py::arg("pair"), py::arg("variable"), py::arg("rates"), py::arg("profiles") = py::none(),
      "Rows of (rate_hz, power_without_w, power_with_w, gap_w, feasible).");

  m.def(
      "energy_total_power",
      [](const py::object& profiles) {
        const energy::TotalPower t = energy::total_power(profiles_from(profiles));
        return py::make_tuple(t.with_wur_w, t.without_wur_w);
      },
      py::arg("profiles") = py::none(), "Returns (with_wur_w, without_wur_w).");
}
