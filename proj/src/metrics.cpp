// SPDX-License-Identifier: Apache-2.0
#include "emobee/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "emobee/error.hpp"
#include "emobee/kernels.hpp"

namespace emobee {

namespace {

void require_nonempty(const Trajectory& traj) {
  if (traj.empty()) throw DomainError("trajectory is empty");
}

double share(const StepRecord& r, Winner w) {
  return w == Winner::A ? r.fractions.phi_a : r.fractions.phi_b;
}

}  // namespace

const char* to_string(Winner w) {
  switch (w) {
    case Winner::A: return "A";
    case Winner::B: return "B";
    default: return "none";
  }
}

Winner swapped(Winner w) {
  switch (w) {
    case Winner::A: return Winner::B;
    case Winner::B: return Winner::A;
    default: return Winner::None;
  }
}

std::optional<std::size_t> consensus_time(const Trajectory& traj) {
  require_nonempty(traj);
  for (const StepRecord& r : traj.records) {
    if (r.fractions.phi_a == 1.0 || r.fractions.phi_b == 1.0) return r.step;
  }
  return std::nullopt;
}

Winner winner(const Trajectory& traj) {
  require_nonempty(traj);
  const Fractions& f = traj.back().fractions;
  if (f.phi_a > f.phi_b) return Winner::A;
  if (f.phi_b > f.phi_a) return Winner::B;
  return Winner::None;
}

std::optional<std::size_t> half_life(const Trajectory& traj, Winner w) {
  if (w == Winner::None) return std::nullopt;
  for (const StepRecord& r : traj.records) {
    if (share(r, w) >= 0.5) return r.step;
  }
  return std::nullopt;
}

double auc_difference(const Trajectory& traj) {
  require_nonempty(traj);
  double sum = 0.0;
  for (const StepRecord& r : traj.records) sum += r.fractions.phi_a - r.fractions.phi_b;
  return sum / static_cast<double>(traj.size());
}

std::vector<EmotionPoint> emotional_trajectory(const Trajectory& traj) {
  std::vector<EmotionPoint> out;
  for (const StepRecord& r : traj.records) {
    for (DecisionState g : {DecisionState::A, DecisionState::B, DecisionState::U}) {
      if (const auto& m = r.mean(g)) out.push_back({g, r.step, m->valence, m->arousal});
    }
  }
  return out;
}

RunSummary summarize_run(const Trajectory& traj, std::uint64_t seed) {
  RunSummary s;
  s.seed = seed;
  s.winner = winner(traj);
  s.consensus_time = consensus_time(traj);
  s.half_life = half_life(traj, s.winner);
  s.auc_diff = auc_difference(traj);
  s.final_fractions = traj.back().fractions;
  return s;
}

ConditionSummary aggregate(std::span<const RunSummary> runs, std::span<const Trajectory> trajs,
                           std::string id) {
  if (runs.empty()) throw DomainError("aggregate needs at least one run");
  if (runs.size() != trajs.size()) throw DomainError("one trajectory per run summary required");

  ConditionSummary out;
  out.id = std::move(id);
  out.n_runs = runs.size();

  std::size_t wins_a = 0;
  std::size_t converged = 0;
  double t_sum = 0.0;
  double auc_sum = 0.0;
  for (const RunSummary& r : runs) {
    if (r.winner == Winner::A) ++wins_a;
    if (r.consensus_time) {
      ++converged;
      t_sum += static_cast<double>(*r.consensus_time);
    }
    auc_sum += r.auc_diff;
  }
  const auto n = static_cast<double>(runs.size());
  out.win_rate_a = static_cast<double>(wins_a) / n;
  if (converged > 0) out.mean_consensus_time = t_sum / static_cast<double>(converged);
  out.mean_auc_diff = auc_sum / n;

  std::size_t len = 0;
  for (const Trajectory& t : trajs) {
    require_nonempty(t);
    len = std::max(len, t.size());
  }

  const kernels::KernelTable& k = kernels::active();
  std::vector<double> phi_a(len), phi_b(len), row(len), mean(len, 0.0), m2(len, 0.0);
  for (std::size_t r = 0; r < trajs.size(); ++r) {
    const auto& recs = trajs[r].records;
    for (std::size_t s = 0; s < len; ++s) {
      const StepRecord& rec = recs[std::min(s, recs.size() - 1)];
      phi_a[s] = rec.fractions.phi_a;
      phi_b[s] = rec.fractions.phi_b;
    }
    k.pairwise_max(phi_a.data(), phi_b.data(), row.data(), len);
    k.welford(mean.data(), m2.data(), row.data(), len, r + 1);
  }

  out.max_commitment.reserve(len);
  for (std::size_t s = 0; s < len; ++s) {
    const double sd = runs.size() > 1 ? std::sqrt(m2[s] / (n - 1.0)) : 0.0;
    const double half = 1.96 * sd / std::sqrt(n);
    out.max_commitment.push_back({s, mean[s], mean[s] - half, mean[s] + half});
  }
  return out;
}

}  // namespace emobee
