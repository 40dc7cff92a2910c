#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rtrade/deployment.hpp"
#include "rtrade/model.hpp"
#include "rtrade/optimizer.hpp"

namespace rtrade {

// Everything a run needs; defaults describe the reference system.
struct RunConfig {
  SystemParams system;
  DeploymentConfig deployment;
  SolverConfig solver;
  std::string output_dir = ".";

  void validate() const;
};

// One accepted config key and its human-readable description (with units).
struct ConfigKeyDoc {
  const char* key;
  const char* doc;
};

// All accepted keys, in help/display order.
const std::vector<ConfigKeyDoc>& config_key_docs();

// Parse flat `key = value` text ('#' starts a comment, blank lines ignored).
// Missing keys keep their defaults.  Unknown keys, duplicate keys, malformed
// numbers, and out-of-range values raise ConfigError naming the key and the
// 1-based line; `source` labels the input in messages.
RunConfig parse_config_text(const std::string& text,
                            const std::string& source = "<config>");

RunConfig parse_config_file(const std::filesystem::path& path);

}  // namespace rtrade
