#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "rtrade/deployment.hpp"
#include "rtrade/model.hpp"
#include "rtrade/optimizer.hpp"

namespace rtrade {

// Resource the network can actually offer each user.
struct AvailabilityCaps {
  double available_bandwidth = 1.0;  // Wa [Hz/bit]
  double acceptable_delay = 1.0;     // ta [s/bit]
};

// A quantized (or continuous) per-distance allocation policy: the cell is cut
// into n equal-width distance rings and every user in a ring is served at the
// ring's level, the optimal resource for a user sitting on the ring's outer
// edge.  kContinuous means no quantization: each user gets its own optimum.
struct StepStrategy {
  static constexpr std::size_t kContinuous =
      std::numeric_limits<std::size_t>::max();

  ResourceKind kind = ResourceKind::kBandwidth;
  std::size_t n_steps = kContinuous;
  double cell_radius = 0.0;          // R [m]
  double ring_width = 0.0;           // R / n_steps [m]; 0 when continuous
  std::vector<double> levels;        // per-ring optimum, outermost last; empty
                                     // when continuous
};

// Per-user outcome of applying a strategy under a cap.
struct Allocation {
  ResourceKind kind = ResourceKind::kBandwidth;
  std::vector<double> chosen;   // granted resource per user
  std::vector<double> energy;   // total energy per bit per user [J/bit]
  std::vector<bool> capped;     // cap was below the user's target level
};

// Precompute the per-ring levels for an n-ring policy (or an empty-level
// continuous policy when n_steps == StepStrategy::kContinuous).  Ring i
// (1-based) covers distances ((i-1)*R/n, i*R/n] and its level is the optimum
// at the ring's outer edge distance i*R/n.
StepStrategy step_levels(ResourceKind kind, std::size_t n_steps,
                         const DeploymentConfig& deployment,
                         const SystemParams& params,
                         const SolverConfig& solver = {});

// 1-based ring index for a distance: smallest i with d <= i*R/n.  Requires
// 0 < d <= R.
std::size_t assign_step(double distance, std::size_t n_steps,
                        double cell_radius);

// Serve every user: target = ring level (or own optimum when continuous),
// granted = min(cap, target); a cap strictly below the target marks the user
// capped.  Energy is charged on the curve the target came from -- the ring's
// outer-edge gain for a quantized policy, the user's own gain for the
// continuous one -- so each user moves along a single convex curve as the cap
// grows.
Allocation adaptive_bandwidth(const Deployment& deployment,
                              const AvailabilityCaps& caps,
                              const StepStrategy& strategy,
                              const SystemParams& params);
Allocation adaptive_delay(const Deployment& deployment,
                          const AvailabilityCaps& caps,
                          const StepStrategy& strategy,
                          const SystemParams& params);

// Arithmetic mean of the per-user energies [J/bit].  Throws on empty.
double mean_energy(const Allocation& allocation);

}  // namespace rtrade
