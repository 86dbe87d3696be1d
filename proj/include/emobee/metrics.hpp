// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emobee/trajectory.hpp"

namespace emobee {

enum class Winner { A, B, None };

const char* to_string(Winner w);
Winner swapped(Winner w);

/// First step with phi_A = 1 or phi_B = 1.
std::optional<std::size_t> consensus_time(const Trajectory& traj);

/// Consensus option if reached, else the strictly larger final share,
/// else None.
Winner winner(const Trajectory& traj);

/// First step at which the winner's share reaches 0.5. Empty for Winner::None.
std::optional<std::size_t> half_life(const Trajectory& traj, Winner w);

/// Time-normalized area between the commitment curves: the mean over
/// recorded steps of phi_A - phi_B. Lies in [-1, 1].
double auc_difference(const Trajectory& traj);

struct EmotionPoint {
  DecisionState group;
  std::size_t step;
  double mean_v;
  double mean_a;
  bool operator==(const EmotionPoint&) const = default;
};

/// Long-format per-group mean emotion series, step-major with groups in the
/// order A, B, U. Steps where a group is empty are omitted.
std::vector<EmotionPoint> emotional_trajectory(const Trajectory& traj);

struct RunSummary {
  std::uint64_t seed = 0;
  Winner winner = Winner::None;
  std::optional<std::size_t> consensus_time;
  std::optional<std::size_t> half_life;
  double auc_diff = 0.0;
  Fractions final_fractions;
  bool operator==(const RunSummary&) const = default;
};

RunSummary summarize_run(const Trajectory& traj, std::uint64_t seed);

struct CurvePoint {
  std::size_t step;
  double mean;
  double ci_lo;
  double ci_hi;
  bool operator==(const CurvePoint&) const = default;
};

struct ConditionSummary {
  std::string id;
  std::size_t n_runs = 0;
  double win_rate_a = 0.0;
  /// Over runs that reached consensus; empty if none did.
  std::optional<double> mean_consensus_time;
  double mean_auc_diff = 0.0;
  /// Per-step mean of max(phi_A, phi_B) with a 95% normal-approximation band.
  std::vector<CurvePoint> max_commitment;
};

/// Per-condition statistics. Trajectories shorter than the longest one are
/// extended by holding their last record (consensus is absorbing).
/// Throws DomainError for an empty run list or mismatched lengths.
ConditionSummary aggregate(std::span<const RunSummary> runs, std::span<const Trajectory> trajs,
                           std::string id = {});

}  // namespace emobee
