// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "emobee/model.hpp"
#include "emobee/rng.hpp"
#include "emobee/trajectory.hpp"

namespace emobee {

/// Emotion-modulated recruitment probability of a committed recruiter:
/// r0 * (1 + alpha_v * v + alpha_a * a), clamped to [0, 1].
double recruitment_rate(const ModelParams& params, const EmotionState& recruiter);

/// Cross-inhibition probability. The target's valence protects it, the
/// inhibitor's arousal strengthens the stop signal:
/// sigma0 * (1 - beta_v * v_target + beta_a * a_inhibitor), clamped to [0, 1].
double inhibition_rate(const ModelParams& params, double target_valence, double inhibitor_arousal);

/// Linear pull of the target's emotion toward the influencer's.
EmotionState apply_contagion(const EmotionState& influencer, const EmotionState& target,
                             double gamma_v, double gamma_a);

struct StepEvents {
  std::size_t recruitments_a = 0;
  std::size_t recruitments_b = 0;
  std::size_t inhibitions_to_u = 0;
  std::size_t contagion_applications = 0;

  StepEvents& operator+=(const StepEvents& o);
  bool operator==(const StepEvents&) const = default;
};

enum class Outcome : std::uint8_t { None, Recruited, Inhibited };

/// One initiator -> target interaction, for diagnostics and tests.
struct Interaction {
  std::uint32_t initiator;
  std::uint32_t target;
  Outcome outcome;
  bool operator==(const Interaction&) const = default;
};

/// Asynchronous update engine. Holds the permutation buffer so repeated
/// steps do not allocate.
///
/// Each step visits all agents in a fresh uniform random order. A committed
/// agent picks one of its 8 neighbors uniformly; an uncommitted neighbor is
/// recruited with recruitment_rate, an opposite-committed one reverts to U
/// with inhibition_rate, a same-option neighbor is left alone. Contagion from
/// the initiator to the neighbor follows every interaction. Changes are
/// visible immediately to agents later in the order.
class StepEngine {
 public:
  StepEvents step(Population& pop, const ModelParams& params, Rng& rng);

  /// When set, every interaction of subsequent steps is appended to `log`.
  void set_log(std::vector<Interaction>* log) { log_ = log; }

 private:
  std::vector<std::uint32_t> order_;
  std::vector<Interaction>* log_ = nullptr;
};

/// Convenience single step.
StepEvents step(Population& pop, const ModelParams& params, Rng& rng);

inline bool at_consensus(const Counts& c) { return c.a == c.total() || c.b == c.total(); }

struct RunOptions {
  bool stop_at_consensus = true;
  /// Called after every step with the step index (1-based), the population
  /// and that step's events.
  std::function<void(std::size_t, const Population&, const StepEvents&)> observer;
};

struct SimResult {
  Trajectory trajectory;
  StepEvents totals;
  Population final_population;
};

/// Runs from an existing population, recording step 0 then up to max_steps
/// further steps.
SimResult run_from(Population pop, const ModelParams& params, std::size_t max_steps, Rng& rng,
                   const RunOptions& options = {});

/// Initializes from Rng(seed) and runs. Pure function of its arguments.
SimResult run_sim(const GridDims& dims, const InitSpec& spec, const ModelParams& params,
                  std::size_t max_steps, std::uint64_t seed, const RunOptions& options = {});

}  // namespace emobee
