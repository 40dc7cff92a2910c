#include "rtrade/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rtrade {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

void SystemParams::validate() const {
  require(noise_psd > 0 && std::isfinite(noise_psd),
          "SystemParams: noise_psd must be positive");
  require(circuit_power_per_hz >= 0 && std::isfinite(circuit_power_per_hz),
          "SystemParams: circuit_power_per_hz must be non-negative");
  require(static_power >= 0 && std::isfinite(static_power),
          "SystemParams: static_power must be non-negative");
  require(tx_gain > 0 && std::isfinite(tx_gain),
          "SystemParams: tx_gain must be positive");
  require(rx_gain > 0 && std::isfinite(rx_gain),
          "SystemParams: rx_gain must be positive");
  require(wavelength > 0 && std::isfinite(wavelength),
          "SystemParams: wavelength must be positive");
  require(system_loss >= 1.0 && std::isfinite(system_loss),
          "SystemParams: system_loss must be >= 1");
  require(path_loss_exponent >= 2.0 && std::isfinite(path_loss_exponent),
          "SystemParams: path_loss_exponent must be >= 2");
}

double wavelength_from_frequency(double carrier_frequency_hz) {
  require(carrier_frequency_hz > 0 && std::isfinite(carrier_frequency_hz),
          "wavelength_from_frequency: frequency must be positive");
  return kSpeedOfLight / carrier_frequency_hz;
}

double channel_gain(double distance, const SystemParams& params) {
  params.validate();
  require(distance > 0 && std::isfinite(distance),
          "channel_gain: distance must be positive");
  const double four_pi = 4.0 * kPi;
  return params.tx_gain * params.rx_gain * params.wavelength *
         params.wavelength /
         (four_pi * four_pi * std::pow(distance, params.path_loss_exponent) *
          params.system_loss);
}

void ResourcePoint::validate() const {
  require(bandwidth > 0 && std::isfinite(bandwidth),
          "ResourcePoint: bandwidth must be positive and finite");
  require(delay > 0 && std::isfinite(delay),
          "ResourcePoint: delay must be positive and finite");
}

double awgn_rate(double bandwidth, double tx_power, double gain,
                 double noise_psd) {
  require(bandwidth > 0, "awgn_rate: bandwidth must be positive");
  require(tx_power >= 0, "awgn_rate: tx_power must be non-negative");
  require(gain > 0, "awgn_rate: gain must be positive");
  require(noise_psd > 0, "awgn_rate: noise_psd must be positive");
  return bandwidth * std::log2(1.0 + tx_power * gain / (bandwidth * noise_psd));
}

double transmit_energy_per_bit(const ResourcePoint& rp, double gain,
                               double noise_psd) {
  rp.validate();
  require(gain > 0 && std::isfinite(gain),
          "transmit_energy_per_bit: gain must be positive");
  require(noise_psd > 0 && std::isfinite(noise_psd),
          "transmit_energy_per_bit: noise_psd must be positive");
  const double z = 1.0 / (rp.bandwidth * rp.delay);
  if (z > kMaxRateExponent)
    throw std::range_error(
        "transmit_energy_per_bit: 1/(W*t) = " + std::to_string(z) +
        " exceeds " + std::to_string(kMaxRateExponent) +
        "; 2^(1/(W*t)) overflows");
  // expm1 keeps precision when 1/(W*t) is small (2^z - 1 ~ z*ln2).
  const double energy =
      std::expm1(z * kLn2) * rp.bandwidth * noise_psd * rp.delay / gain;
  if (!std::isfinite(energy))
    throw std::range_error("transmit_energy_per_bit: result overflows");
  return energy;
}

EnergyBreakdown total_energy_per_bit(const ResourcePoint& rp, double gain,
                                     const SystemParams& params) {
  params.validate();
  EnergyBreakdown out;
  out.transmit = transmit_energy_per_bit(rp, gain, params.noise_psd);
  out.circuit = rp.bandwidth * params.circuit_power_per_hz * rp.delay +
                params.static_power * rp.delay;
  out.total = out.transmit + out.circuit;
  return out;
}

double resource_curve_energy(ResourceKind kind, double x, double gain,
                             const SystemParams& params) {
  ResourcePoint rp;
  if (kind == ResourceKind::kBandwidth)
    rp.bandwidth = x;
  else
    rp.delay = x;
  return total_energy_per_bit(rp, gain, params).total;
}

}  // namespace rtrade
