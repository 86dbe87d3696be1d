// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "emobee/model.hpp"
#include "emobee/scenarios.hpp"

namespace emobee {

/// Everything a CLI invocation needs. Unset keys keep the published
/// experiment settings.
struct ExperimentConfig {
  GridDims grid{20, 20};
  int scenario = 1;
  std::vector<double> levels_a = kDefaultLevels;
  std::vector<double> levels_v = kDefaultLevels;
  double frac_a = 0.1;
  double frac_b = 0.1;
  double baseline_v_b = 0.5;
  double baseline_a_b = 0.5;
  ModelParams params;
  double emotion_sd = 0.05;
  std::size_t n_runs = 200;
  std::size_t max_steps = 500;
  std::uint64_t base_seed = 1;
  std::string out_dir = "out";
  bool emit_timeseries = false;

  /// Throws ConfigRangeError naming the first offending key.
  void validate() const;

  ScenarioDefaults scenario_defaults() const;
  GroupEmotionSpec baseline_b() const { return {baseline_v_b, baseline_a_b, emotion_sd}; }

  bool operator==(const ExperimentConfig&) const = default;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigFileMissing : public ConfigError {
 public:
  explicit ConfigFileMissing(const std::string& path)
      : ConfigError("config file not found: " + path) {}
};

class ConfigSyntaxError : public ConfigError {
 public:
  ConfigSyntaxError(std::size_t line, const std::string& what)
      : ConfigError("config line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class UnknownConfigKey : public ConfigError {
 public:
  explicit UnknownConfigKey(const std::string& key)
      : ConfigError("unknown config key '" + key + "'"), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

class ConfigRangeError : public ConfigError {
 public:
  ConfigRangeError(const std::string& key, const std::string& what)
      : ConfigError("config key '" + key + "': " + what), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Parses `key = value` lines. '#' starts a comment; blank lines are ignored.
ExperimentConfig parse_config(std::string_view text);

ExperimentConfig load_config(const std::filesystem::path& path);

/// Inverse of parse_config: every key, one per line, in schema order.
std::string format_config(const ExperimentConfig& cfg);

/// Schema keys in canonical order.
const std::vector<std::string>& config_keys();

}  // namespace emobee
