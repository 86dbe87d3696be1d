// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "emobee/model.hpp"

namespace emobee {

/// One experimental cell: an initial condition plus run settings.
struct Condition {
  std::string id;
  InitSpec init;
  ModelParams params;
  std::size_t n_runs = 200;
  std::size_t max_steps = 500;
  bool operator==(const Condition&) const = default;
};

/// Settings shared by every condition a builder produces.
struct ScenarioDefaults {
  ModelParams params;
  double frac_a = 0.1;
  double frac_b = 0.1;
  double emotion_sd = 0.05;
  std::size_t n_runs = 200;
  std::size_t max_steps = 500;
};

inline const std::vector<double> kDefaultLevels{0.2, 0.5, 0.8, 1.0};

/// Joint valence/arousal sweep: A group takes every (a_A, v_A) pair, arousal
/// outer and valence inner; the B group is fixed at `baseline_b`.
std::vector<Condition> scenario1_conditions(std::span<const double> levels_a,
                                            std::span<const double> levels_v,
                                            const GroupEmotionSpec& baseline_b,
                                            const ScenarioDefaults& defaults);

/// Arousal sweep with matched valence: B group gets (v_A, baseline_a_b).
std::vector<Condition> scenario2_conditions(std::span<const double> levels_a,
                                            std::span<const double> levels_v, double baseline_a_b,
                                            const ScenarioDefaults& defaults);

/// Fully balanced start: equal fractions (frac_a of the defaults is used for
/// both) and identical (0.5, 0.5) emotions.
Condition scenario3_condition(const ScenarioDefaults& defaults);

}  // namespace emobee
