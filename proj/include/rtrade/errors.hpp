#pragma once

#include <stdexcept>
#include <string>

namespace rtrade {

// The minimum-energy operating point does not exist: with zero overhead power
// the energy per bit decreases monotonically as the resource grows, so the
// stationarity equation has no root.
class UnboundedOptimumError : public std::domain_error {
 public:
  explicit UnboundedOptimumError(const std::string& what)
      : std::domain_error(what) {}
};

// Root finder failed to bracket or to meet its residual bound.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed run configuration file; the message names the offending key and
// line number.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rtrade
