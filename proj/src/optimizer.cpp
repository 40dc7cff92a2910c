#include "rtrade/optimizer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "rtrade/errors.hpp"

namespace rtrade {

namespace {

// Overhead power charged against the resource being optimized [W or W/Hz].
double overhead_power(ResourceKind kind, const SystemParams& params) {
  return kind == ResourceKind::kBandwidth
             ? params.circuit_power_per_hz
             : params.circuit_power_per_hz + params.static_power;
}

// Past this exponent ln2/x the left-hand side 2^(1/x)*(1 - ln2/x) underflows
// toward -inf faster than double range; its sign is certain, so clamp.
constexpr double kExpArgLimit = 700.0;

double residual_impl(double x, double rhs_offset) {
  const double a = kLn2 / x;
  if (a > kExpArgLimit) return -std::numeric_limits<double>::max();
  // 2^(1/x)*(1 - ln2/x) - 1 == expm1(a) - a*exp(a), grouped to cancel the
  // leading 1 exactly when a is tiny.
  return std::expm1(a) - a * std::exp(a) + rhs_offset;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(relative_tolerance > 0) || !std::isfinite(relative_tolerance))
    throw std::domain_error("SolverConfig: relative_tolerance must be > 0");
  if (max_iterations == 0)
    throw std::domain_error("SolverConfig: max_iterations must be > 0");
  if (!(bracket_growth_factor > 1) || !std::isfinite(bracket_growth_factor))
    throw std::domain_error("SolverConfig: bracket_growth_factor must be > 1");
}

double stationarity_residual(ResourceKind kind, double x, double gain,
                             const SystemParams& params) {
  params.validate();
  if (!(x > 0) || !std::isfinite(x))
    throw std::domain_error("stationarity_residual: x must be positive");
  if (!(gain > 0) || !std::isfinite(gain))
    throw std::domain_error("stationarity_residual: gain must be positive");
  // residual = LHS - RHS with RHS = 1 - g*P/N0, so the constant part folds
  // into the offset g*P/N0 - ... ; see residual_impl.
  const double offset =
      gain * overhead_power(kind, params) / params.noise_psd;
  return residual_impl(x, offset);
}

OptimalPoint optimal_resource(ResourceKind kind, double gain,
                              const SystemParams& params,
                              const SolverConfig& config) {
  params.validate();
  config.validate();
  if (!(gain > 0) || !std::isfinite(gain))
    throw std::domain_error("optimal_resource: gain must be positive");

  const double power = overhead_power(kind, params);
  if (power <= 0)
    throw UnboundedOptimumError(
        kind == ResourceKind::kBandwidth
            ? "optimal_resource: circuit power is zero; energy decreases "
              "monotonically in bandwidth and has no minimum"
            : "optimal_resource: circuit and standby power are both zero; "
              "energy decreases monotonically in delay and has no minimum");

  const double offset = gain * power / params.noise_psd;
  if (!std::isfinite(offset))
    throw std::domain_error("optimal_resource: g*P/N0 overflows");
  const double rhs = 1.0 - offset;
  const double scale = std::max(1.0, std::abs(rhs));
  const double bound = config.relative_tolerance * scale;

  auto f = [offset](double x) { return residual_impl(x, offset); };

  std::size_t iterations = 0;
  double lo = 1e-6;
  double hi = 1.0;
  double f_lo = f(lo);
  if (f_lo > 0)
    throw SolverError("optimal_resource: no bracket below x = 1e-6");
  double f_hi = f(hi);
  while (f_hi <= 0) {
    if (++iterations > config.max_iterations)
      throw SolverError(
          "optimal_resource: failed to bracket a sign change within " +
          std::to_string(config.max_iterations) + " expansions");
    lo = hi;
    f_lo = f_hi;
    hi *= config.bracket_growth_factor;
    if (!std::isfinite(hi))
      throw SolverError("optimal_resource: bracket expansion overflowed");
    f_hi = f(hi);
  }

  // Bisect until the bracket is tight and the residual bound holds, or until
  // the midpoint can no longer be distinguished from the endpoints.
  double best = lo;
  double f_best = f_lo;
  while (iterations < config.max_iterations) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ++iterations;
    const double f_mid = f(mid);
    if (std::abs(f_mid) < std::abs(f_best)) {
      best = mid;
      f_best = f_mid;
    }
    if (f_mid == 0.0) break;
    if (f_mid < 0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
    if (hi - lo <= config.relative_tolerance * mid &&
        std::abs(f_best) <= bound)
      break;
  }
  if (std::abs(f_hi) < std::abs(f_best)) {
    best = hi;
    f_best = f_hi;
  }
  if (std::abs(f_lo) < std::abs(f_best)) {
    best = lo;
    f_best = f_lo;
  }

  if (std::abs(f_best) > bound)
    throw SolverError(
        "optimal_resource: residual " + std::to_string(f_best) +
        " exceeds tolerance " + std::to_string(bound) + " after " +
        std::to_string(iterations) + " iterations");

  OptimalPoint out;
  out.value = best;
  out.residual = f_best;
  out.iterations = iterations;
  out.energy = resource_curve_energy(kind, best, gain, params);
  return out;
}

OptimalPoint optimal_bandwidth(double gain, const SystemParams& params,
                               const SolverConfig& config) {
  return optimal_resource(ResourceKind::kBandwidth, gain, params, config);
}

OptimalPoint optimal_delay(double gain, const SystemParams& params,
                           const SolverConfig& config) {
  return optimal_resource(ResourceKind::kDelay, gain, params, config);
}

GridMinimum grid_min_oracle(ResourceKind kind, double gain,
                            const SystemParams& params, double lo, double hi,
                            double step) {
  params.validate();
  if (!(lo > 0) || !(hi >= lo) || !(step > 0))
    throw std::domain_error(
        "grid_min_oracle: requires 0 < lo <= hi and step > 0");
  // Small forward nudge so hi itself is kept when (hi-lo)/step rounds just
  // under an integer.
  const std::size_t count =
      static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  GridMinimum best;
  best.argmin = lo;
  best.energy = resource_curve_energy(kind, lo, gain, params);
  for (std::size_t k = 1; k < count; ++k) {
    const double x = lo + static_cast<double>(k) * step;
    const double e = resource_curve_energy(kind, x, gain, params);
    if (e < best.energy) {
      best.argmin = x;
      best.energy = e;
    }
  }
  return best;
}

}  // namespace rtrade
