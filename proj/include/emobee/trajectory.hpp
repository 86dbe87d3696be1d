// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "emobee/model.hpp"

namespace emobee {

/// State of the population after a step (step 0 is the initial condition).
struct StepRecord {
  std::size_t step = 0;
  Counts counts;
  Fractions fractions;
  /// Mean emotion per group, indexed by index_of(DecisionState); empty when
  /// the group has no members.
  std::array<std::optional<EmotionState>, kNumStates> group_mean;

  const std::optional<EmotionState>& mean(DecisionState d) const { return group_mean[index_of(d)]; }
  bool operator==(const StepRecord&) const = default;
};

/// Contiguous per-step records starting at step 0.
struct Trajectory {
  std::vector<StepRecord> records;

  bool empty() const { return records.empty(); }
  std::size_t size() const { return records.size(); }
  const StepRecord& back() const { return records.back(); }
  bool operator==(const Trajectory&) const = default;
};

/// Snapshot of a population as a record.
StepRecord record_of(const Population& pop, std::size_t step);

/// Trajectory with A and B relabeled everywhere.
Trajectory mirrored(const Trajectory& traj);

}  // namespace emobee
