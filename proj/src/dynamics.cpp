// SPDX-License-Identifier: Apache-2.0
#include "emobee/dynamics.hpp"

#include <algorithm>
#include <numeric>

#include "emobee/error.hpp"

namespace emobee {

namespace {

double clamp_probability(double p) { return std::min(std::max(p, 0.0), 1.0); }

}  // namespace

double recruitment_rate(const ModelParams& params, const EmotionState& recruiter) {
  return clamp_probability(
      params.r0 * (1.0 + params.alpha_v * recruiter.valence + params.alpha_a * recruiter.arousal));
}

double inhibition_rate(const ModelParams& params, double target_valence, double inhibitor_arousal) {
  return clamp_probability(
      params.sigma0 * (1.0 - params.beta_v * target_valence + params.beta_a * inhibitor_arousal));
}

EmotionState apply_contagion(const EmotionState& influencer, const EmotionState& target,
                             double gamma_v, double gamma_a) {
  const double v = target.valence + gamma_v * (influencer.valence - target.valence);
  const double a = target.arousal + gamma_a * (influencer.arousal - target.arousal);
  // Convex combination; the clamp only absorbs rounding at the boundary.
  return {std::min(std::max(v, -1.0), 1.0), std::min(std::max(a, 0.0), 1.0)};
}

StepEvents& StepEvents::operator+=(const StepEvents& o) {
  recruitments_a += o.recruitments_a;
  recruitments_b += o.recruitments_b;
  inhibitions_to_u += o.inhibitions_to_u;
  contagion_applications += o.contagion_applications;
  return *this;
}

StepEvents StepEngine::step(Population& pop, const ModelParams& params, Rng& rng) {
  const std::size_t n = pop.size();
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0u);
  for (std::size_t k = n - 1; k > 0; --k) {
    std::swap(order_[k], order_[rng.below(static_cast<std::uint32_t>(k + 1))]);
  }

  StepEvents ev;
  for (const std::uint32_t i : order_) {
    const DecisionState di = pop.decision(i);
    if (!is_committed(di)) continue;

    const std::size_t j = pop.neighbor(i, rng.below(8));
    const DecisionState dj = pop.decision(j);
    const EmotionState ei = pop.emotion(i);
    const EmotionState ej = pop.emotion(j);

    Outcome outcome = Outcome::None;
    if (dj == DecisionState::U) {
      if (rng.uniform() < recruitment_rate(params, ei)) {
        pop.set_decision(j, di);
        ++(di == DecisionState::A ? ev.recruitments_a : ev.recruitments_b);
        outcome = Outcome::Recruited;
      }
    } else if (dj != di) {
      if (rng.uniform() < inhibition_rate(params, ej.valence, ei.arousal)) {
        pop.set_decision(j, DecisionState::U);
        ++ev.inhibitions_to_u;
        outcome = Outcome::Inhibited;
      }
    }
    if (log_) log_->push_back({i, static_cast<std::uint32_t>(j), outcome});
    pop.set_emotion(j, apply_contagion(ei, ej, params.gamma_v, params.gamma_a));
    ++ev.contagion_applications;
  }
  return ev;
}

StepEvents step(Population& pop, const ModelParams& params, Rng& rng) {
  StepEngine engine;
  return engine.step(pop, params, rng);
}

SimResult run_from(Population pop, const ModelParams& params, std::size_t max_steps, Rng& rng,
                   const RunOptions& options) {
  if (max_steps < 1) throw DomainError("max_steps must be >= 1");
  params.validate();

  SimResult result{Trajectory{}, StepEvents{}, std::move(pop)};
  Population& p = result.final_population;
  result.trajectory.records.reserve(max_steps + 1);
  result.trajectory.records.push_back(record_of(p, 0));

  StepEngine engine;
  for (std::size_t t = 1; t <= max_steps; ++t) {
    if (options.stop_at_consensus && at_consensus(p.counts())) break;
    const StepEvents ev = engine.step(p, params, rng);
    result.totals += ev;
    result.trajectory.records.push_back(record_of(p, t));
    if (options.observer) options.observer(t, p, ev);
  }
  return result;
}

SimResult run_sim(const GridDims& dims, const InitSpec& spec, const ModelParams& params,
                  std::size_t max_steps, std::uint64_t seed, const RunOptions& options) {
  Rng rng(seed);
  Population pop = init_population(dims, spec, rng);
  return run_from(std::move(pop), params, max_steps, rng, options);
}

}  // namespace emobee
