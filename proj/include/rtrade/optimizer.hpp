#pragma once

#include <cstddef>

#include "rtrade/model.hpp"

namespace rtrade {

// Controls for the stationarity root finder.
struct SolverConfig {
  // Accepted stationarity residual, relative to the equation scale
  // max(1, |rhs|); also the relative bracket width at which bisection may
  // stop early.
  double relative_tolerance = 1e-12;
  std::size_t max_iterations = 200;   // bracket expansions + bisections
  double bracket_growth_factor = 2.0; // upper-bracket multiplier per expansion

  void validate() const;
};

// A solved minimum of one resource/energy curve.
struct OptimalPoint {
  double value = 0.0;       // minimizing W [Hz/bit] or t [s/bit]
  double energy = 0.0;      // total energy per bit at the minimum [J/bit]
  double residual = 0.0;    // raw stationarity residual at value
  std::size_t iterations = 0;
};

// Result of a brute-force scan of one resource axis.
struct GridMinimum {
  double argmin = 0.0;
  double energy = 0.0;
};

// Raw residual of the first-order optimality condition at x (W or t per
// kind): 2^(1/x) * (1 - ln2/x) - (1 - g*P/N0), where P is the overhead power
// charged against that resource (Pcir per Hz for bandwidth, Pcir + Psb for
// delay).  Negative left of the minimum, positive right of it; at x = ln2 the
// curvature term vanishes and the residual equals -(1 - g*P/N0).
double stationarity_residual(ResourceKind kind, double x, double gain,
                             const SystemParams& params);

// Minimum of the energy-vs-resource curve by bracketed bisection on the
// stationarity residual.  Throws UnboundedOptimumError when the overhead
// power charged against the resource is zero (the curve then has no interior
// minimum) and SolverError when the residual bound cannot be met.
OptimalPoint optimal_resource(ResourceKind kind, double gain,
                              const SystemParams& params,
                              const SolverConfig& config = {});

// optimal_resource for the bandwidth axis (t = 1 s/bit).
OptimalPoint optimal_bandwidth(double gain, const SystemParams& params,
                               const SolverConfig& config = {});

// optimal_resource for the delay axis (W = 1 Hz/bit).
OptimalPoint optimal_delay(double gain, const SystemParams& params,
                           const SolverConfig& config = {});

// Independent check on the solver: evaluate the energy curve on the closed
// grid {lo, lo+step, ...} up to hi and return the smallest sample.  Ties keep
// the leftmost argmin.  Requires 0 < lo <= hi and step > 0.
GridMinimum grid_min_oracle(ResourceKind kind, double gain,
                            const SystemParams& params, double lo, double hi,
                            double step);

}  // namespace rtrade
