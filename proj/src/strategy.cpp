#include "rtrade/strategy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rtrade {

namespace {

// Shared body of adaptive_bandwidth / adaptive_delay.
Allocation serve(ResourceKind kind, const Deployment& deployment, double cap,
                 const StepStrategy& strategy, const SystemParams& params) {
  params.validate();
  if (deployment.users.empty())
    throw std::domain_error("adaptive allocation: deployment has no users");
  if (!(cap > 0) || !std::isfinite(cap))
    throw std::domain_error("adaptive allocation: cap must be positive");
  if (strategy.kind != kind)
    throw std::domain_error(
        "adaptive allocation: strategy was built for the other resource");
  const bool continuous = strategy.n_steps == StepStrategy::kContinuous;
  if (!continuous) {
    if (strategy.levels.size() != strategy.n_steps)
      throw std::domain_error(
          "adaptive allocation: strategy has wrong level count");
    if (strategy.cell_radius != deployment.config.cell_radius)
      throw std::domain_error(
          "adaptive allocation: strategy cell radius does not match "
          "deployment");
  }

  Allocation out;
  out.kind = kind;
  out.chosen.reserve(deployment.users.size());
  out.energy.reserve(deployment.users.size());
  out.capped.reserve(deployment.users.size());

  for (const User& user : deployment.users) {
    double target = 0.0;
    double curve_gain = 0.0;
    if (continuous) {
      curve_gain = channel_gain(user.distance, params);
      target = optimal_resource(kind, curve_gain, params).value;
    } else {
      const std::size_t ring = assign_step(user.distance, strategy.n_steps,
                                           strategy.cell_radius);
      target = strategy.levels[ring - 1];
      // Cost the user on the ring's own curve (outer-edge gain), the same
      // curve its level was optimized on.
      curve_gain = channel_gain(
          strategy.cell_radius * static_cast<double>(ring) /
              static_cast<double>(strategy.n_steps),
          params);
    }
    const bool capped = cap < target;
    const double granted = capped ? cap : target;
    out.chosen.push_back(granted);
    out.energy.push_back(
        resource_curve_energy(kind, granted, curve_gain, params));
    out.capped.push_back(capped);
  }
  return out;
}

}  // namespace

StepStrategy step_levels(ResourceKind kind, std::size_t n_steps,
                         const DeploymentConfig& deployment,
                         const SystemParams& params,
                         const SolverConfig& solver) {
  deployment.validate();
  params.validate();
  StepStrategy s;
  s.kind = kind;
  s.n_steps = n_steps;
  s.cell_radius = deployment.cell_radius;
  if (n_steps == StepStrategy::kContinuous) return s;
  if (n_steps == 0)
    throw std::domain_error("step_levels: n_steps must be > 0");
  s.ring_width = deployment.cell_radius / static_cast<double>(n_steps);
  s.levels.reserve(n_steps);
  for (std::size_t i = 1; i <= n_steps; ++i) {
    const double edge = deployment.cell_radius * static_cast<double>(i) /
                        static_cast<double>(n_steps);
    const double gain = channel_gain(edge, params);
    s.levels.push_back(optimal_resource(kind, gain, params, solver).value);
  }
  return s;
}

std::size_t assign_step(double distance, std::size_t n_steps,
                        double cell_radius) {
  if (n_steps == 0 || n_steps == StepStrategy::kContinuous)
    throw std::domain_error("assign_step: needs a finite ring count");
  if (!(cell_radius > 0))
    throw std::domain_error("assign_step: cell_radius must be positive");
  if (!(distance > 0) || distance > cell_radius)
    throw std::domain_error("assign_step: distance must be in (0, R]");
  // Smallest i with d <= i*R/n; an exact boundary hit stays in the inner
  // ring.
  for (std::size_t i = 1; i < n_steps; ++i) {
    if (distance <=
        cell_radius * static_cast<double>(i) / static_cast<double>(n_steps))
      return i;
  }
  return n_steps;
}

Allocation adaptive_bandwidth(const Deployment& deployment,
                              const AvailabilityCaps& caps,
                              const StepStrategy& strategy,
                              const SystemParams& params) {
  return serve(ResourceKind::kBandwidth, deployment,
               caps.available_bandwidth, strategy, params);
}

Allocation adaptive_delay(const Deployment& deployment,
                          const AvailabilityCaps& caps,
                          const StepStrategy& strategy,
                          const SystemParams& params) {
  return serve(ResourceKind::kDelay, deployment, caps.acceptable_delay,
               strategy, params);
}

double mean_energy(const Allocation& allocation) {
  if (allocation.energy.empty())
    throw std::domain_error("mean_energy: allocation is empty");
  double sum = 0.0;
  for (double e : allocation.energy) sum += e;
  return sum / static_cast<double>(allocation.energy.size());
}

}  // namespace rtrade
