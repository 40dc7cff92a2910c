#include "rtrade/experiments.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace rtrade {

namespace {

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += fmt_g(values[i]);
  }
  return out;
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "0x%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

// Echo every system parameter plus a short content hash, so any table can be
// regenerated from its own header.
void echo_params(ResultTable& t, const SystemParams& p) {
  t.add_metadata("noise_psd_w_per_hz", p.noise_psd);
  t.add_metadata("circuit_power_w_per_hz", p.circuit_power_per_hz);
  t.add_metadata("static_power_w", p.static_power);
  t.add_metadata("tx_gain", p.tx_gain);
  t.add_metadata("rx_gain", p.rx_gain);
  t.add_metadata("wavelength_m", p.wavelength);
  t.add_metadata("system_loss", p.system_loss);
  t.add_metadata("path_loss_exponent", p.path_loss_exponent);
  const std::string canon =
      fmt_g(p.noise_psd) + ";" + fmt_g(p.circuit_power_per_hz) + ";" +
      fmt_g(p.static_power) + ";" + fmt_g(p.tx_gain) + ";" +
      fmt_g(p.rx_gain) + ";" + fmt_g(p.wavelength) + ";" +
      fmt_g(p.system_loss) + ";" + fmt_g(p.path_loss_exponent);
  t.add_metadata("params_hash", hex64(fnv1a64(canon)));
}

void echo_deployment(ResultTable& t, const DeploymentConfig& c) {
  t.add_metadata("rng", std::string(kRngAlgorithm));
  t.add_metadata("seed", static_cast<std::size_t>(c.rng_seed));
  t.add_metadata("cell_count", c.cell_count);
  t.add_metadata("cell_radius_m", c.cell_radius);
  t.add_metadata("user_count", c.user_count);
  t.add_metadata("min_user_distance_m", c.min_user_distance);
}

void echo_range(ResultTable& t, const std::string& prefix,
                const RangeSpec& r) {
  t.add_metadata(prefix + "_lo", r.lo);
  t.add_metadata(prefix + "_hi", r.hi);
  t.add_metadata(prefix + "_step", r.step);
}

}  // namespace

void RangeSpec::validate() const {
  if (!(lo > 0) || !(hi >= lo) || !(step > 0) || !std::isfinite(lo) ||
      !std::isfinite(hi) || !std::isfinite(step))
    throw std::domain_error("RangeSpec: requires 0 < lo <= hi and step > 0");
}

std::vector<double> linear_grid(const RangeSpec& range) {
  range.validate();
  // Forward nudge keeps hi when (hi-lo)/step lands just under an integer.
  const std::size_t count = static_cast<std::size_t>(std::floor(
                                (range.hi - range.lo) / range.step + 1e-9)) +
                            1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k)
    out.push_back(range.lo + static_cast<double>(k) * range.step);
  return out;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  if (!(lo > 0) || !(hi > lo))
    throw std::domain_error("log_grid: requires 0 < lo < hi");
  if (count < 2) throw std::domain_error("log_grid: count must be >= 2");
  std::vector<double> out;
  out.reserve(count);
  const double ratio = hi / lo;
  const double denom = static_cast<double>(count - 1);
  out.push_back(lo);
  for (std::size_t k = 1; k + 1 < count; ++k)
    out.push_back(lo * std::pow(ratio, static_cast<double>(k) / denom));
  out.push_back(hi);
  return out;
}

void SweepSpec::validate() const {
  if (caps.empty()) throw std::domain_error("SweepSpec: caps must be non-empty");
  double prev = 0.0;
  for (double c : caps) {
    if (!(c > prev) || !std::isfinite(c))
      throw std::domain_error(
          "SweepSpec: caps must be positive and strictly increasing");
    prev = c;
  }
  for (std::size_t n : step_counts)
    if (n == 0)
      throw std::domain_error("SweepSpec: step counts must be >= 1");
}

SweepSpec default_sweep_spec() {
  SweepSpec s;
  s.caps = log_grid(1e-2, 1e1, 200);
  s.step_counts = {2, 3, 4, 5, 10, 1000};
  return s;
}

ResultTable axis_energy_table(const SystemParams& params, double gain) {
  params.validate();
  if (!(gain > 0) || !std::isfinite(gain))
    throw std::domain_error("axis_energy_table: gain must be positive");
  ResultTable t;
  t.columns = {"x", "energy_fixed_delay", "energy_fixed_bandwidth"};
  t.add_metadata("experiment", "axis_energy_table");
  t.add_metadata("gain", gain);
  echo_params(t, params);
  t.add_metadata("column_energy_fixed_delay", "E(W=x, t=1) [J/bit]");
  t.add_metadata("column_energy_fixed_bandwidth", "E(W=1, t=x) [J/bit]");
  for (int k = 1; k <= 10; ++k) {
    const double x = static_cast<double>(k) / 10.0;
    t.rows.push_back({x,
                      resource_curve_energy(ResourceKind::kBandwidth, x, gain,
                                            params),
                      resource_curve_energy(ResourceKind::kDelay, x, gain,
                                            params)});
  }
  return t;
}

RangeSpec surface_window_default() { return {0.1, 1.0, 0.1}; }
RangeSpec surface_window_low() { return {0.3, 0.5, 0.005}; }
RangeSpec surface_window_high() { return {0.5, 1.0, 0.005}; }

ResultTable energy_surface(const SystemParams& params, double gain,
                           const RangeSpec& bandwidth_range,
                           const RangeSpec& delay_range) {
  params.validate();
  if (!(gain > 0) || !std::isfinite(gain))
    throw std::domain_error("energy_surface: gain must be positive");
  const std::vector<double> ws = linear_grid(bandwidth_range);
  const std::vector<double> ts = linear_grid(delay_range);
  ResultTable t;
  t.columns = {"bandwidth", "delay", "e_total"};
  t.add_metadata("experiment", "energy_surface");
  t.add_metadata("gain", gain);
  echo_params(t, params);
  echo_range(t, "bandwidth", bandwidth_range);
  echo_range(t, "delay", delay_range);
  t.add_metadata("row_order", "bandwidth-major");
  t.rows.reserve(ws.size() * ts.size());
  for (double w : ws)
    for (double d : ts) {
      const ResourcePoint rp{w, d};
      t.rows.push_back({w, d, total_energy_per_bit(rp, gain, params).total});
    }
  return t;
}

RangeSpec curve_range_default() { return {0.05, 1.0, 0.005}; }

std::vector<double> curve_distances_default() { return {600.0, 800.0, 1000.0}; }

ResultTable distance_curves(const SystemParams& params, ResourceKind axis,
                            const std::vector<double>& site_distances,
                            const RangeSpec& range) {
  params.validate();
  if (site_distances.empty())
    throw std::domain_error("distance_curves: need at least one distance");
  const std::vector<double> xs = linear_grid(range);
  ResultTable t;
  t.columns = {"x"};
  std::vector<double> gains;
  gains.reserve(site_distances.size());
  for (double d : site_distances) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", d);
    t.columns.push_back(std::string("transmit_d") + buf);
    t.columns.push_back(std::string("total_d") + buf);
    gains.push_back(channel_gain(d, params));
  }
  t.add_metadata("experiment", "distance_curves");
  t.add_metadata("axis", axis == ResourceKind::kBandwidth
                             ? "bandwidth"
                             : "delay");
  echo_params(t, params);
  t.add_metadata("site_distances_m", join(site_distances));
  t.add_metadata("gains", join(gains));
  echo_range(t, "x", range);
  for (double x : xs) {
    std::vector<double> row;
    row.reserve(t.columns.size());
    row.push_back(x);
    ResourcePoint rp;
    if (axis == ResourceKind::kBandwidth)
      rp.bandwidth = x;
    else
      rp.delay = x;
    for (double g : gains) {
      row.push_back(transmit_energy_per_bit(rp, g, params.noise_psd));
      row.push_back(total_energy_per_bit(rp, g, params).total);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

ResultTable availability_sweep(ResourceKind kind,
                               const Deployment& deployment,
                               const SweepSpec& spec,
                               const SystemParams& params,
                               const SolverConfig& solver) {
  params.validate();
  spec.validate();
  if (deployment.users.empty())
    throw std::domain_error("availability_sweep: deployment has no users");

  std::vector<StepStrategy> strategies;
  strategies.reserve(spec.step_counts.size() + 1);
  for (std::size_t n : spec.step_counts)
    strategies.push_back(
        step_levels(kind, n, deployment.config, params, solver));
  strategies.push_back(step_levels(kind, StepStrategy::kContinuous,
                                   deployment.config, params, solver));

  ResultTable t;
  t.columns = {"cap"};
  for (std::size_t n : spec.step_counts)
    t.columns.push_back("steps_" + std::to_string(n));
  t.columns.push_back("continuous");
  t.add_metadata("experiment", "availability_sweep");
  t.add_metadata("resource", kind == ResourceKind::kBandwidth
                                 ? "bandwidth"
                                 : "delay");
  echo_params(t, params);
  echo_deployment(t, deployment.config);
  t.add_metadata("step_counts", join(spec.step_counts));
  t.add_metadata("caps", join(spec.caps));

  for (double cap : spec.caps) {
    AvailabilityCaps caps;
    caps.available_bandwidth = cap;
    caps.acceptable_delay = cap;
    std::vector<double> row;
    row.reserve(t.columns.size());
    row.push_back(cap);
    for (const StepStrategy& strat : strategies) {
      const Allocation alloc =
          kind == ResourceKind::kBandwidth
              ? adaptive_bandwidth(deployment, caps, strat, params)
              : adaptive_delay(deployment, caps, strat, params);
      row.push_back(mean_energy(alloc));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

ResultTable deployment_table(const Deployment& deployment) {
  if (deployment.cells.size() != deployment.config.cell_count)
    throw std::domain_error("deployment_table: malformed deployment");
  ResultTable t;
  t.columns = {"user_id", "cell_id", "x_m", "y_m", "distance_m"};
  t.formats = {ColumnFormat::kInteger, ColumnFormat::kInteger,
               ColumnFormat::kScientific, ColumnFormat::kScientific,
               ColumnFormat::kScientific};
  t.add_metadata("experiment", "deployment");
  echo_deployment(t, deployment.config);
  t.rows.reserve(deployment.users.size());
  for (std::size_t i = 0; i < deployment.users.size(); ++i) {
    const User& u = deployment.users[i];
    t.rows.push_back({static_cast<double>(i),
                      static_cast<double>(u.cell_index), u.x, u.y,
                      u.distance});
  }
  return t;
}

}  // namespace rtrade
