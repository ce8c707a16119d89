#pragma once

#include <cstddef>
#include <cstdint>

#include "wurkit/decoder.hpp"

namespace wurkit {

// Gate and flip-flop delays. Defaults keep the 64-bit decoders near n/8 ns.
struct TechTiming {
  double t_ff_toggle = 120e-12;
  double t_ff_enable = 10e-12;
  double t_gate = 5e-12;

  double t_gblock() const { return 4.0 * t_gate; }
  // Constant terms of the large-n approximations T ~ n*T_FF_t + t.
  double legacy_offset(std::size_t n) const;
  double lpsd_offset(std::size_t n) const;
  void validate() const;
};

// Worst-case propagation delay in seconds.
//   legacy: n*T_FF_t + (log2 n + 1)*T_Gate
//   LPSD:   n*(T_FF_t + T_FF_en + 2*T_Gate) + T_G + m*T_Gate
double max_delay(Architecture arch, std::size_t n, std::size_t m, const TechTiming& timing = {});

struct CellInventory {
  std::uint64_t flip_flops = 0;
  std::uint64_t gates = 0;
  std::uint64_t cells() const { return flip_flops + gates; }
};

// Standard-cell counts. Legacy: n flip-flops, n XNORs and an (n-1)-gate AND
// tree. LPSD: per stage a flip-flop, a 4-gate G-block and an enable XOR;
// every redundant layer adds a mismatch AND and a merging OR per stage.
// Bypassed stages are still instantiated.
CellInventory cell_inventory(const DecoderConfig& config);

struct PowerParams {
  double e_ff_toggle = 0;        // J per flip-flop output change
  double e_ff_enable = 0;        // J per enable assertion
  double e_ff_clock = 0;         // J per clock edge at a flip-flop clock pin
  double e_gate_transition = 0;  // J per gate output change
  double p_static_per_cell = 0;  // W per instantiated cell

  void validate() const;
};

struct PowerReport {
  double dynamic_w = 0;
  double static_w = 0;
  double total_w = 0;
  double total_dbm = 0;
};

double watts_to_dbm(double watts);

// Dynamic power is the mean event energy per cycle times the bit rate; static
// power is the cell count times the per-cell leakage.
PowerReport estimate_power(const ActivityReport& activity, double bit_rate_hz, const PowerParams& params,
                           const DecoderConfig& config);

struct AreaEstimate {
  double um2 = 0;
  bool extrapolated = false;  // outside the published grid
};

// Published synthesis areas for n in {8,16,32,64} and m in {0,1,2}, with
// piecewise-linear interpolation in n between grid points. Outside the grid a
// least-squares per-stage line is used in n, and a constant per-layer step
// in m above 2; both set `extrapolated`.
AreaEstimate area(Architecture arch, std::size_t n, std::size_t m);

// Share of the wake-up receiver's power drawn by the address decoder, in %.
double eta(double decoder_power_w, double wur_total_power_w);

}  // namespace wurkit
