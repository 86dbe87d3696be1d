// SPDX-License-Identifier: Apache-2.0
#include "emobee/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "format.hpp"

namespace emobee {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view key, std::string_view text) {
  double x = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), x);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ConfigRangeError(std::string(key), "not a real number: '" + std::string(text) + "'");
  }
  return x;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view text) {
  std::uint64_t x = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), x);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ConfigRangeError(std::string(key),
                           "not a non-negative integer: '" + std::string(text) + "'");
  }
  return x;
}

int parse_int(std::string_view key, std::string_view text) {
  int x = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), x);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ConfigRangeError(std::string(key), "not an integer: '" + std::string(text) + "'");
  }
  return x;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigRangeError(std::string(key), "not a boolean: '" + std::string(text) + "'");
}

std::vector<double> parse_list(std::string_view key, std::string_view text) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_real(key, trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_list(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += detail::format_double(xs[i]);
  }
  return out;
}

void require(bool ok, const char* key, const char* what) {
  if (!ok) throw ConfigRangeError(key, what);
}

using Setter = std::function<void(ExperimentConfig&, std::string_view key, std::string_view value)>;

struct Field {
  Setter set;
  std::function<std::string(const ExperimentConfig&)> get;
};

#define EMOBEE_REAL(name, member)                                                             \
  {                                                                                           \
    name, {                                                                                   \
      [](ExperimentConfig& c, std::string_view k, std::string_view v) { c.member = parse_real(k, v); }, \
      [](const ExperimentConfig& c) { return detail::format_double(c.member); }             \
    }                                                                                         \
  }

const std::vector<std::pair<std::string, Field>>& schema() {
  static const std::vector<std::pair<std::string, Field>> fields{
      {"grid_width",
       {[](ExperimentConfig& c, std::string_view k, std::string_view v) { c.grid.width = parse_int(k, v); },
        [](const ExperimentConfig& c) { return std::to_string(c.grid.width); }}},
      {"grid_height",
       {[](ExperimentConfig& c, std::string_view k, std::string_view v) { c.grid.height = parse_int(k, v); },
        [](const ExperimentConfig& c) { return std::to_string(c.grid.height); }}},
      {"scenario",
       {[](ExperimentConfig& c, std::string_view k, std::string_view v) { c.scenario = parse_int(k, v); },
        [](const ExperimentConfig& c) { return std::to_string(c.scenario); }}},
      {"levels_a",
       {[](ExperimentConfig& c, std::string_view k, std::string_view v) { c.levels_a = parse_list(k, v); },
        [](const ExperimentConfig& c) { return format_list(c.levels_a); }}},
      {"levels_v",
       {[](ExperimentConfig& c, std::string_view k, std::string_view v) { c.levels_v = parse_list(k, v); },
        [](const ExperimentConfig& c) { return format_list(c.levels_v); }}},
      EMOBEE_REAL("frac_a", frac_a),
      EMOBEE_REAL("frac_b", frac_b),
      EMOBEE_REAL("baseline_v_b", baseline_v_b),
      EMOBEE_REAL("baseline_a_b", baseline_a_b),
      EMOBEE_REAL("r0", params.r0),
      EMOBEE_REAL("sigma0", params.sigma0),
      EMOBEE_REAL("alpha_v", params.alpha_v),
      EMOBEE_REAL("alpha_a", params.alpha_a),
      EMOBEE_REAL("beta_v", params.beta_v),
      EMOBEE_REAL("beta_a", params.beta_a),
      EMOBEE_REAL("gamma_v", params.gamma_v),
      EMOBEE_REAL("gamma_a", params.gamma_a),
      EMOBEE_REAL("emotion_sd", emotion_sd),
      {"n_runs",
       {[](ExperimentConfig& c, std::string_view k, std::string_view v) { c.n_runs = parse_unsigned(k, v); },
        [](const ExperimentConfig& c) { return std::to_string(c.n_runs); }}},
      {"max_steps",
       {[](ExperimentConfig& c, std::string_view k, std::string_view v) { c.max_steps = parse_unsigned(k, v); },
        [](const ExperimentConfig& c) { return std::to_string(c.max_steps); }}},
      {"base_seed",
       {[](ExperimentConfig& c, std::string_view k, std::string_view v) { c.base_seed = parse_unsigned(k, v); },
        [](const ExperimentConfig& c) { return std::to_string(c.base_seed); }}},
      {"out_dir",
       {[](ExperimentConfig& c, std::string_view, std::string_view v) { c.out_dir = std::string(v); },
        [](const ExperimentConfig& c) { return c.out_dir; }}},
      {"emit_timeseries",
       {[](ExperimentConfig& c, std::string_view k, std::string_view v) { c.emit_timeseries = parse_bool(k, v); },
        [](const ExperimentConfig& c) { return std::string(c.emit_timeseries ? "true" : "false"); }}},
  };
  return fields;
}

#undef EMOBEE_REAL

const Field* find_field(std::string_view key) {
  for (const auto& [name, field] : schema()) {
    if (name == key) return &field;
  }
  return nullptr;
}

}  // namespace

void ExperimentConfig::validate() const {
  require(grid.width >= 3, "grid_width", "must be >= 3");
  require(grid.height >= 3, "grid_height", "must be >= 3");
  require(scenario >= 1 && scenario <= 3, "scenario", "must be 1, 2 or 3");
  require(!levels_a.empty(), "levels_a", "must not be empty");
  require(!levels_v.empty(), "levels_v", "must not be empty");
  for (double a : levels_a) require(a >= 0.0 && a <= 1.0, "levels_a", "arousal levels must lie in [0, 1]");
  for (double v : levels_v) require(v >= -1.0 && v <= 1.0, "levels_v", "valence levels must lie in [-1, 1]");
  require(frac_a >= 0.0 && frac_a <= 1.0, "frac_a", "must lie in [0, 1]");
  require(frac_b >= 0.0 && frac_b <= 1.0, "frac_b", "must lie in [0, 1]");
  require(frac_a + frac_b <= 1.0, "frac_b", "frac_a + frac_b must not exceed 1");
  require(baseline_v_b >= -1.0 && baseline_v_b <= 1.0, "baseline_v_b", "must lie in [-1, 1]");
  require(baseline_a_b >= 0.0 && baseline_a_b <= 1.0, "baseline_a_b", "must lie in [0, 1]");
  require(params.r0 >= 0.0, "r0", "must be >= 0");
  require(params.sigma0 >= 0.0, "sigma0", "must be >= 0");
  require(std::isfinite(params.alpha_v), "alpha_v", "must be finite");
  require(std::isfinite(params.alpha_a), "alpha_a", "must be finite");
  require(std::isfinite(params.beta_v), "beta_v", "must be finite");
  require(std::isfinite(params.beta_a), "beta_a", "must be finite");
  require(params.gamma_v >= 0.0 && params.gamma_v <= 1.0, "gamma_v", "must lie in [0, 1]");
  require(params.gamma_a >= 0.0 && params.gamma_a <= 1.0, "gamma_a", "must lie in [0, 1]");
  require(emotion_sd >= 0.0 && std::isfinite(emotion_sd), "emotion_sd", "must be >= 0");
  require(n_runs >= 1, "n_runs", "must be >= 1");
  require(max_steps >= 1, "max_steps", "must be >= 1");
  require(!out_dir.empty(), "out_dir", "must not be empty");
}

ScenarioDefaults ExperimentConfig::scenario_defaults() const {
  return {params, frac_a, frac_b, emotion_sd, n_runs, max_steps};
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const auto& [name, field] : schema()) out.push_back(name);
    return out;
  }();
  return keys;
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig cfg;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigSyntaxError(line_no, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigSyntaxError(line_no, "missing key");
    if (value.empty()) throw ConfigSyntaxError(line_no, "missing value for '" + std::string(key) + "'");

    const Field* field = find_field(key);
    if (!field) throw UnknownConfigKey(std::string(key));
    if (!seen.emplace(key).second) {
      throw ConfigSyntaxError(line_no, "duplicate key '" + std::string(key) + "'");
    }
    field->set(cfg, key, value);
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigFileMissing(path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string format_config(const ExperimentConfig& cfg) {
  std::string out;
  for (const auto& [name, field] : schema()) out += name + " = " + field.get(cfg) + "\n";
  return out;
}

}  // namespace emobee
