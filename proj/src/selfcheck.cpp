// SPDX-License-Identifier: Apache-2.0
#include "emobee/selfcheck.hpp"

#include <cmath>
#include <cstring>
#include <functional>
#include <set>

#include "emobee/dynamics.hpp"
#include "emobee/kernels.hpp"
#include "emobee/meanfield.hpp"
#include "emobee/model.hpp"

namespace emobee {

namespace {

using Check = std::function<std::string()>;  // empty string on success

std::string neighborhood() {
  for (GridDims dims : {GridDims{3, 3}, GridDims{5, 4}, GridDims{20, 20}}) {
    Population pop(dims);
    for (std::size_t i = 0; i < pop.size(); ++i) {
      std::set<std::size_t> seen;
      for (unsigned k = 0; k < 8; ++k) {
        const std::size_t j = pop.neighbor(i, k);
        if (j == i) return "cell is its own neighbor";
        seen.insert(j);
        bool back = false;
        for (unsigned m = 0; m < 8; ++m) back = back || pop.neighbor(j, m) == i;
        if (!back) return "neighbor relation not symmetric";
      }
      if (seen.size() != 8) return "neighborhood does not have 8 distinct cells";
    }
  }
  return {};
}

std::string rates() {
  const ModelParams p;
  if (recruitment_rate(p, {0.0, 0.0}) != 0.02) return "neutral recruitment != r0";
  if (recruitment_rate(p, {1.0, 1.0}) != 0.04) return "recruitment(1, 1) != 0.04";
  if (inhibition_rate(p, 1.0, 0.0) != 0.01) return "inhibition(v=1, a=0) != 0.01";
  Rng rng(7);
  ModelParams wild{0.9, 0.9, 3.0, 3.0, 3.0, 3.0, 0.1, 0.1};
  for (int i = 0; i < 1000; ++i) {
    const EmotionState e{2.0 * rng.uniform() - 1.0, rng.uniform()};
    const double r = recruitment_rate(wild, e);
    const double s = inhibition_rate(wild, e.valence, e.arousal);
    if (!(r >= 0.0 && r <= 1.0 && s >= 0.0 && s <= 1.0)) return "rate outside [0, 1]";
  }
  return {};
}

std::string contagion() {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const EmotionState src{2.0 * rng.uniform() - 1.0, rng.uniform()};
    const EmotionState dst{2.0 * rng.uniform() - 1.0, rng.uniform()};
    const double g = rng.uniform();
    const EmotionState out = apply_contagion(src, dst, g, g);
    if (!out.valid()) return "contagion left the valid range";
    if (std::abs(std::abs(src.valence - out.valence) - (1.0 - g) * std::abs(src.valence - dst.valence)) > 1e-12) {
      return "valence contraction violated";
    }
  }
  return {};
}

std::string conservation() {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    Population pop = init_population({20, 20}, InitSpec{}, rng);
    StepEngine engine;
    for (int t = 0; t < 200; ++t) {
      engine.step(pop, ModelParams{}, rng);
      if (pop.counts() != pop.recount()) return "cached counts disagree with recount";
      if (pop.counts().total() != pop.size()) return "agent count not conserved";
      for (std::size_t i = 0; i < pop.size(); ++i) {
        if (!pop.emotion(i).valid()) return "emotion out of range";
      }
    }
  }
  return {};
}

std::string determinism() {
  const SimResult a = run_sim({10, 10}, InitSpec{}, ModelParams{}, 100, 99);
  const SimResult b = run_sim({10, 10}, InitSpec{}, ModelParams{}, 100, 99);
  if (!(a.trajectory == b.trajectory)) return "identical inputs gave different trajectories";
  return {};
}

std::string mean_field() {
  const meanfield::Params p{0.02, 0.02};
  const auto traj = meanfield::integrate({0.1, 0.1}, p, 0.1, 2000);
  for (const auto& s : traj) {
    if (std::abs(s.phi_a - s.phi_b) > 1e-12) return "symmetric start lost symmetry";
  }
  const auto eq = meanfield::symmetric_equilibrium(p);
  const auto d = meanfield::bee_rhs(eq, p);
  if (std::abs(d.d_phi_a) > 1e-15 || std::abs(d.d_phi_b) > 1e-15) return "rhs nonzero at equilibrium";
  return {};
}

std::string kernel_equivalence() {
  Rng rng(5);
  constexpr std::size_t n = 403;
  std::vector<std::uint8_t> codes(n);
  std::vector<double> v(n), a(n), v2(n), a2(n);
  for (std::size_t i = 0; i < n; ++i) {
    codes[i] = static_cast<std::uint8_t>(rng.below(3));
    v[i] = 2.0 * rng.uniform() - 1.0;
    a[i] = rng.uniform();
    v2[i] = 2.0 * rng.uniform() - 1.0;
    a2[i] = rng.uniform();
  }
  const auto& ref = kernels::table(kernels::Isa::Scalar);
  kernels::GroupSums expect;
  ref.group_sums(codes.data(), v.data(), a.data(), n, expect);
  for (kernels::Isa isa : kernels::available()) {
    const auto& k = kernels::table(isa);
    kernels::GroupSums got;
    k.group_sums(codes.data(), v.data(), a.data(), n, got);
    if (got.count != expect.count || got.valence != expect.valence || got.arousal != expect.arousal) {
      return std::string(kernels::name(isa)) + " group_sums differs from scalar";
    }
    auto tv = v2, ta = a2, rv = v2, ra = a2;
    k.contagion(v.data(), a.data(), tv.data(), ta.data(), n, 0.1, 0.3);
    ref.contagion(v.data(), a.data(), rv.data(), ra.data(), n, 0.1, 0.3);
    if (std::memcmp(tv.data(), rv.data(), n * sizeof(double)) != 0 ||
        std::memcmp(ta.data(), ra.data(), n * sizeof(double)) != 0) {
      return std::string(kernels::name(isa)) + " contagion differs from scalar";
    }
  }
  return {};
}

}  // namespace

std::vector<CheckResult> run_self_checks() {
  const std::vector<std::pair<std::string, Check>> checks{
      {"moore-neighborhood", neighborhood},   {"rate-functions", rates},
      {"contagion-contraction", contagion},   {"conservation", conservation},
      {"determinism", determinism},           {"mean-field", mean_field},
      {"kernel-equivalence", kernel_equivalence},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, check] : checks) {
    CheckResult r{name, false, {}};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace emobee
