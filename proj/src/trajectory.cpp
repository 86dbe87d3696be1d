// SPDX-License-Identifier: Apache-2.0
#include "emobee/trajectory.hpp"

#include <utility>

#include "emobee/kernels.hpp"

namespace emobee {

StepRecord record_of(const Population& pop, std::size_t step) {
  StepRecord rec;
  rec.step = step;
  rec.counts = pop.counts();
  rec.fractions = fractions(rec.counts);
  const kernels::GroupSums sums =
      kernels::group_sums(pop.decision_codes(), pop.valences(), pop.arousals());
  for (std::size_t g = 0; g < kNumStates; ++g) {
    if (sums.count[g] == 0) continue;
    const auto n = static_cast<double>(sums.count[g]);
    rec.group_mean[g] = EmotionState{sums.valence[g] / n, sums.arousal[g] / n};
  }
  return rec;
}

Trajectory mirrored(const Trajectory& traj) {
  Trajectory out = traj;
  for (StepRecord& r : out.records) {
    std::swap(r.counts.a, r.counts.b);
    std::swap(r.fractions.phi_a, r.fractions.phi_b);
    std::swap(r.group_mean[index_of(DecisionState::A)], r.group_mean[index_of(DecisionState::B)]);
  }
  return out;
}

}  // namespace emobee
