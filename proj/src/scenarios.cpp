// SPDX-License-Identifier: Apache-2.0
#include "emobee/scenarios.hpp"

#include <cstdio>

#include "emobee/error.hpp"

namespace emobee {

namespace {

std::string level_id(const char* prefix, double a, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_aA%.2f_vA%.2f", prefix, a, v);
  return buf;
}

void check_levels(std::span<const double> levels_a, std::span<const double> levels_v) {
  if (levels_a.empty() || levels_v.empty()) throw DomainError("level lists must be non-empty");
  for (double a : levels_a) {
    if (!(a >= 0.0 && a <= 1.0)) throw DomainError("arousal level outside [0, 1]");
  }
  for (double v : levels_v) {
    if (!(v >= -1.0 && v <= 1.0)) throw DomainError("valence level outside [-1, 1]");
  }
}

Condition base_condition(const ScenarioDefaults& d) {
  Condition c;
  c.params = d.params;
  c.n_runs = d.n_runs;
  c.max_steps = d.max_steps;
  c.init.frac_a = d.frac_a;
  c.init.frac_b = d.frac_b;
  return c;
}

}  // namespace

std::vector<Condition> scenario1_conditions(std::span<const double> levels_a,
                                            std::span<const double> levels_v,
                                            const GroupEmotionSpec& baseline_b,
                                            const ScenarioDefaults& defaults) {
  check_levels(levels_a, levels_v);
  baseline_b.validate();
  std::vector<Condition> out;
  for (double a : levels_a) {
    for (double v : levels_v) {
      Condition c = base_condition(defaults);
      c.id = level_id("s1", a, v);
      c.init.emotion_a = {v, a, defaults.emotion_sd};
      c.init.emotion_b = baseline_b;
      c.init.validate();
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Condition> scenario2_conditions(std::span<const double> levels_a,
                                            std::span<const double> levels_v, double baseline_a_b,
                                            const ScenarioDefaults& defaults) {
  check_levels(levels_a, levels_v);
  std::vector<Condition> out;
  for (double a : levels_a) {
    for (double v : levels_v) {
      Condition c = base_condition(defaults);
      c.id = level_id("s2", a, v);
      c.init.emotion_a = {v, a, defaults.emotion_sd};
      c.init.emotion_b = {v, baseline_a_b, defaults.emotion_sd};
      c.init.validate();
      out.push_back(std::move(c));
    }
  }
  return out;
}

Condition scenario3_condition(const ScenarioDefaults& defaults) {
  Condition c = base_condition(defaults);
  c.id = "s3_balanced";
  c.init.frac_b = c.init.frac_a;
  c.init.emotion_a = {0.5, 0.5, defaults.emotion_sd};
  c.init.emotion_b = c.init.emotion_a;
  c.init.validate();
  return c;
}

}  // namespace emobee
