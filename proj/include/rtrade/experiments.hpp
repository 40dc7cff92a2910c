#pragma once

#include <cstddef>
#include <vector>

#include "rtrade/deployment.hpp"
#include "rtrade/model.hpp"
#include "rtrade/optimizer.hpp"
#include "rtrade/result_table.hpp"
#include "rtrade/strategy.hpp"

namespace rtrade {

// Closed arithmetic progression {lo, lo+step, ...} up to hi.
struct RangeSpec {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;

  void validate() const;  // 0 < lo <= hi, step > 0
};

std::vector<double> linear_grid(const RangeSpec& range);

// `count` points log-spaced over [lo, hi], endpoints exact.  Requires
// 0 < lo < hi and count >= 2.
std::vector<double> log_grid(double lo, double hi, std::size_t count);

// Cap grid and quantization levels for an availability sweep.
struct SweepSpec {
  std::vector<double> caps;               // strictly increasing, all > 0
  std::vector<std::size_t> step_counts;   // ring counts, each >= 1; a
                                          // continuous column is always
                                          // appended

  void validate() const;
};

// 200 caps log-spaced over [1e-2, 1e1]; n in {2, 3, 4, 5, 10, 1000}.
SweepSpec default_sweep_spec();

// Per-axis energy table at a fixed gain: rows x = 0.1 .. 1.0, columns
//   energy_fixed_delay     = E(W = x, t = 1)
//   energy_fixed_bandwidth = E(W = 1, t = x).
// The default gain 4.0e-14 is the reference-table operating gain
// (N0/g = 2e-7, roughly the 1 km cell edge).
ResultTable axis_energy_table(const SystemParams& params,
                              double gain = 4.0e-14);

// e_total over the (bandwidth, delay) product grid, bandwidth-major rows.
ResultTable energy_surface(const SystemParams& params, double gain,
                           const RangeSpec& bandwidth_range,
                           const RangeSpec& delay_range);

RangeSpec surface_window_default();  // 0.1  .. 1.0, step 0.1
RangeSpec surface_window_low();      // 0.3  .. 0.5, step 0.005
RangeSpec surface_window_high();     // 0.5  .. 1.0, step 0.005

// Transmit-only and total energy along one resource axis, one column pair
// per site distance.
ResultTable distance_curves(const SystemParams& params, ResourceKind axis,
                            const std::vector<double>& site_distances,
                            const RangeSpec& range);

RangeSpec curve_range_default();     // 0.05 .. 1.0, step 0.005
std::vector<double> curve_distances_default();  // {600, 800, 1000} m

// Mean energy per bit over all users versus the availability cap: one column
// per ring count in spec.step_counts plus a final continuous column.
ResultTable availability_sweep(ResourceKind kind,
                               const Deployment& deployment,
                               const SweepSpec& spec,
                               const SystemParams& params,
                               const SolverConfig& solver = {});

// The deployment itself as a table: user_id, cell_id, x_m, y_m, distance_m.
ResultTable deployment_table(const Deployment& deployment);

}  // namespace rtrade
