#pragma once

#include <cstdint>

namespace rtrade {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLn2 = 0.69314718055994530942;
inline constexpr double kSpeedOfLight = 2.99792458e8;  // m/s

// Largest 1/(W*t) for which 2^(1/(W*t)) still fits in a double; beyond this
// the transmit energy overflows and the model throws std::range_error.
inline constexpr double kMaxRateExponent = 1024.0;

// Which per-bit resource is being traded against energy.
enum class ResourceKind : std::uint8_t {
  kBandwidth,  // W, bandwidth per bit [Hz/bit], delay fixed at 1 s/bit
  kDelay,      // t, delay per bit [s/bit], bandwidth fixed at 1 Hz/bit
};

// Link and hardware parameters. Defaults describe the reference system: a
// 2.4 GHz carrier, third-power path loss, and per-Hz circuit plus standby
// overhead at the transmitter.
struct SystemParams {
  double noise_psd = 8e-21;              // N0, noise power spectral density [W/Hz]
  double circuit_power_per_hz = 1e-6;    // Pcir, circuit power per unit bandwidth [W/Hz]
  double static_power = 2e-6;            // Psb, standby power [W]
  double tx_gain = 1.0;                  // Gt, transmit antenna gain
  double rx_gain = 1.0;                  // Gr, receive antenna gain
  double wavelength = 0.125;             // lambda [m], 2.4 GHz carrier with c ~ 3e8 m/s
  double system_loss = 2.5;              // L, system loss factor (>= 1)
  double path_loss_exponent = 3.0;       // alpha

  // Throws std::domain_error unless every field is physical: positive powers
  // and gains, wavelength > 0, loss >= 1, path-loss exponent >= 2.
  void validate() const;
};

// lambda = c / f with the exact speed of light; f in Hz.
double wavelength_from_frequency(double carrier_frequency_hz);

// Deterministic path gain g(d) = Gt*Gr*lambda^2 / ((4*pi)^2 * d^alpha * L).
// Dimensionless; d in meters, d > 0.
double channel_gain(double distance, const SystemParams& params);

// One operating point on the resource/energy trade: both coordinates are
// per-bit quantities and must be positive and finite.
struct ResourcePoint {
  double bandwidth = 1.0;  // W [Hz/bit]
  double delay = 1.0;      // t [s/bit]

  void validate() const;
};

// Energy per bit split into its radiated and overhead parts [J/bit].
struct EnergyBreakdown {
  double transmit = 0.0;  // radiated energy
  double circuit = 0.0;   // circuit + standby overhead
  double total = 0.0;     // transmit + circuit, exactly
};

// Shannon rate over an AWGN channel [bit/s]: W * log2(1 + P*g / (W*N0)).
double awgn_rate(double bandwidth, double tx_power, double gain,
                 double noise_psd);

// Radiated energy needed to move one bit reliably at operating point rp:
//   (2^(1/(W*t)) - 1) * W * N0 * t / g.
// Throws std::range_error when 1/(W*t) > 1024 (value would overflow).
double transmit_energy_per_bit(const ResourcePoint& rp, double gain,
                               double noise_psd);

// Total energy per bit including circuit and standby overhead:
//   transmit + W*Pcir*t + Psb*t.
EnergyBreakdown total_energy_per_bit(const ResourcePoint& rp, double gain,
                                     const SystemParams& params);

// Total energy along one axis of the trade: x is W with t = 1 for kBandwidth,
// or t with W = 1 for kDelay.
double resource_curve_energy(ResourceKind kind, double x, double gain,
                             const SystemParams& params);

}  // namespace rtrade
