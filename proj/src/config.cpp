#include "rtrade/config.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rtrade/errors.hpp"

namespace rtrade {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

struct Location {
  const std::string& source;
  std::size_t line;

  std::string str() const {
    return source + ":" + std::to_string(line);
  }
};

[[noreturn]] void fail(const Location& loc, const std::string& msg) {
  throw ConfigError(loc.str() + ": " + msg);
}

double parse_double(const std::string& value, const std::string& key,
                    const Location& loc) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end != value.c_str() + value.size() || value.empty() || errno == ERANGE)
    fail(loc, "malformed number for key '" + key + "': '" + value + "'");
  return v;
}

std::uint64_t parse_u64(const std::string& value, const std::string& key,
                        const Location& loc) {
  if (value.empty() || value[0] == '-' || value[0] == '+')
    fail(loc, "malformed unsigned integer for key '" + key + "': '" + value +
                  "'");
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
  if (end != value.c_str() + value.size() || errno == ERANGE)
    fail(loc, "malformed unsigned integer for key '" + key + "': '" + value +
                  "'");
  return v;
}

std::size_t parse_count(const std::string& value, const std::string& key,
                        const Location& loc) {
  const std::uint64_t v = parse_u64(value, key, loc);
  if (v > std::numeric_limits<std::size_t>::max())
    fail(loc, "value out of range for key '" + key + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace

void RunConfig::validate() const {
  system.validate();
  deployment.validate();
  solver.validate();
  if (output_dir.empty())
    throw std::domain_error("RunConfig: output_dir must be non-empty");
}

const std::vector<ConfigKeyDoc>& config_key_docs() {
  static const std::vector<ConfigKeyDoc> docs = {
      {"noise_psd_w_per_hz",
       "noise power spectral density N0 [W/Hz] (default 8e-21)"},
      {"circuit_power_w_per_hz",
       "transmitter circuit power per unit bandwidth [W/Hz] (default 1e-6)"},
      {"static_power_w", "transmitter standby power [W] (default 2e-6)"},
      {"tx_gain", "transmit antenna gain [1] (default 1)"},
      {"rx_gain", "receive antenna gain [1] (default 1)"},
      {"wavelength_m",
       "carrier wavelength [m] (default 0.125); exclusive with "
       "carrier_frequency_hz"},
      {"carrier_frequency_hz",
       "carrier frequency [Hz]; stored as wavelength c/f with "
       "c = 2.99792458e8 m/s; exclusive with wavelength_m"},
      {"system_loss", "system loss factor L [1], >= 1 (default 2.5)"},
      {"path_loss_exponent", "path loss exponent alpha [1], >= 2 (default 3)"},
      {"cell_count", "number of hexagonal cells [1] (default 57)"},
      {"cell_radius_m", "cell circumradius R [m] (default 1000)"},
      {"user_count", "number of users dropped [1] (default 500)"},
      {"min_user_distance_m",
       "minimum user-to-site distance [m] (default 10)"},
      {"rng_seed", "pseudo-random seed [1] (default 1)"},
      {"solver_relative_tolerance",
       "root-finder relative tolerance [1] (default 1e-12)"},
      {"solver_max_iterations",
       "root-finder iteration budget [1] (default 200)"},
      {"solver_bracket_growth",
       "bracket expansion factor [1], > 1 (default 2)"},
      {"output_dir", "directory for CSV outputs [path] (default .)"},
  };
  return docs;
}

RunConfig parse_config_text(const std::string& text,
                            const std::string& source) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::istringstream stream(text);
  std::string raw;
  std::size_t line_no = 0;

  while (std::getline(stream, raw)) {
    ++line_no;
    const Location loc{source, line_no};
    const std::size_t hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos
                                      ? raw
                                      : raw.substr(0, hash));
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      fail(loc, "expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(loc, "empty key");
    if (value.empty()) fail(loc, "empty value for key '" + key + "'");
    if (!seen.insert(key).second) fail(loc, "duplicate key '" + key + "'");
    if (key == "wavelength_m" && seen.count("carrier_frequency_hz"))
      fail(loc, "key 'wavelength_m' conflicts with 'carrier_frequency_hz'");
    if (key == "carrier_frequency_hz" && seen.count("wavelength_m"))
      fail(loc, "key 'carrier_frequency_hz' conflicts with 'wavelength_m'");

    // Per-key range checks run here so the offending key and line appear in
    // the message; cross-field constraints are checked after the last line.
    const auto check = [&](bool ok, const char* what) {
      if (!ok)
        fail(loc, "invalid value for key '" + key + "': must be " + what);
    };
    const auto num = [&] { return parse_double(value, key, loc); };

    if (key == "noise_psd_w_per_hz") {
      cfg.system.noise_psd = num();
      check(cfg.system.noise_psd > 0 && std::isfinite(cfg.system.noise_psd),
            "positive");
    } else if (key == "circuit_power_w_per_hz") {
      cfg.system.circuit_power_per_hz = num();
      check(cfg.system.circuit_power_per_hz >= 0 &&
                std::isfinite(cfg.system.circuit_power_per_hz),
            "non-negative");
    } else if (key == "static_power_w") {
      cfg.system.static_power = num();
      check(cfg.system.static_power >= 0 &&
                std::isfinite(cfg.system.static_power),
            "non-negative");
    } else if (key == "tx_gain") {
      cfg.system.tx_gain = num();
      check(cfg.system.tx_gain > 0 && std::isfinite(cfg.system.tx_gain),
            "positive");
    } else if (key == "rx_gain") {
      cfg.system.rx_gain = num();
      check(cfg.system.rx_gain > 0 && std::isfinite(cfg.system.rx_gain),
            "positive");
    } else if (key == "wavelength_m") {
      cfg.system.wavelength = num();
      check(cfg.system.wavelength > 0 && std::isfinite(cfg.system.wavelength),
            "positive");
    } else if (key == "carrier_frequency_hz") {
      const double f = num();
      check(f > 0 && std::isfinite(f), "positive");
      cfg.system.wavelength = wavelength_from_frequency(f);
    } else if (key == "system_loss") {
      cfg.system.system_loss = num();
      check(cfg.system.system_loss >= 1 &&
                std::isfinite(cfg.system.system_loss),
            ">= 1");
    } else if (key == "path_loss_exponent") {
      cfg.system.path_loss_exponent = num();
      check(cfg.system.path_loss_exponent >= 2 &&
                std::isfinite(cfg.system.path_loss_exponent),
            ">= 2");
    } else if (key == "cell_count") {
      cfg.deployment.cell_count = parse_count(value, key, loc);
      check(cfg.deployment.cell_count >= 1, ">= 1");
    } else if (key == "cell_radius_m") {
      cfg.deployment.cell_radius = num();
      check(cfg.deployment.cell_radius > 0 &&
                std::isfinite(cfg.deployment.cell_radius),
            "positive");
    } else if (key == "user_count") {
      cfg.deployment.user_count = parse_count(value, key, loc);
    } else if (key == "min_user_distance_m") {
      cfg.deployment.min_user_distance = num();
      check(cfg.deployment.min_user_distance >= 0 &&
                std::isfinite(cfg.deployment.min_user_distance),
            "non-negative");
    } else if (key == "rng_seed") {
      cfg.deployment.rng_seed = parse_u64(value, key, loc);
    } else if (key == "solver_relative_tolerance") {
      cfg.solver.relative_tolerance = num();
      check(cfg.solver.relative_tolerance > 0 &&
                std::isfinite(cfg.solver.relative_tolerance),
            "positive");
    } else if (key == "solver_max_iterations") {
      cfg.solver.max_iterations = parse_count(value, key, loc);
      check(cfg.solver.max_iterations >= 1, ">= 1");
    } else if (key == "solver_bracket_growth") {
      cfg.solver.bracket_growth_factor = num();
      check(cfg.solver.bracket_growth_factor > 1 &&
                std::isfinite(cfg.solver.bracket_growth_factor),
            "> 1");
    } else if (key == "output_dir") {
      cfg.output_dir = value;
    } else {
      fail(loc, "unknown key '" + key + "'");
    }
  }

  try {
    cfg.validate();
  } catch (const std::domain_error& e) {
    throw ConfigError(source + ": " + e.what());
  }
  return cfg;
}

RunConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path.string());
}

}  // namespace rtrade
