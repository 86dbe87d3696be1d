// SPDX-License-Identifier: Apache-2.0
#include "emobee/meanfield.hpp"

#include <algorithm>
#include <string>

#include "emobee/error.hpp"

namespace emobee::meanfield {

namespace {

constexpr double kSimplexSlack = 1e-6;

void validate(const State& s) {
  if (!(s.phi_a >= 0.0 && s.phi_b >= 0.0 && s.phi_a + s.phi_b <= 1.0)) {
    throw DomainError("mean-field state outside the simplex");
  }
}

void validate(const Params& p) {
  if (!(p.r >= 0.0) || !(p.sigma >= 0.0)) throw DomainError("rates must be non-negative");
}

State axpy(const State& s, double h, const Derivative& k) {
  return {s.phi_a + h * k.d_phi_a, s.phi_b + h * k.d_phi_b};
}

// Pulls a state that drifted out of the simplex by rounding back onto it.
State project(State s, std::size_t step) {
  const double sum = s.phi_a + s.phi_b;
  if (s.phi_a < -kSimplexSlack || s.phi_b < -kSimplexSlack || sum > 1.0 + kSimplexSlack) {
    throw NumericalInstability("state left the simplex at step " + std::to_string(step) +
                               "; reduce dt");
  }
  s.phi_a = std::max(s.phi_a, 0.0);
  s.phi_b = std::max(s.phi_b, 0.0);
  if (s.phi_a + s.phi_b > 1.0) {
    const double scale = 1.0 / (s.phi_a + s.phi_b);
    s.phi_a *= scale;
    s.phi_b *= scale;
  }
  return s;
}

}  // namespace

Derivative bee_rhs(const State& s, const Params& p) {
  const double u = s.u();
  // phi_a * phi_b first: commutative, so the cross term is identical for
  // both options and swapping them mirrors the result exactly.
  const double cross = p.sigma * (s.phi_a * s.phi_b);
  return {p.r * s.phi_a * u - cross, p.r * s.phi_b * u - cross};
}

std::vector<State> integrate(const State& initial, const Params& p, double dt,
                             std::size_t n_steps) {
  if (!(dt > 0.0)) throw DomainError("dt must be positive");
  if (n_steps < 1) throw DomainError("n_steps must be >= 1");
  validate(initial);
  validate(p);

  std::vector<State> out;
  out.reserve(n_steps + 1);
  out.push_back(initial);
  State s = initial;
  for (std::size_t k = 1; k <= n_steps; ++k) {
    const Derivative k1 = bee_rhs(s, p);
    const Derivative k2 = bee_rhs(axpy(s, 0.5 * dt, k1), p);
    const Derivative k3 = bee_rhs(axpy(s, 0.5 * dt, k2), p);
    const Derivative k4 = bee_rhs(axpy(s, dt, k3), p);
    const double w = dt / 6.0;
    s = {s.phi_a + w * (k1.d_phi_a + 2.0 * k2.d_phi_a + 2.0 * k3.d_phi_a + k4.d_phi_a),
         s.phi_b + w * (k1.d_phi_b + 2.0 * k2.d_phi_b + 2.0 * k3.d_phi_b + k4.d_phi_b)};
    s = project(s, k);
    out.push_back(s);
  }
  return out;
}

State symmetric_equilibrium(const Params& p) {
  validate(p);
  if (!(p.r > 0.0)) throw DomainError("no interior equilibrium without recruitment (r = 0)");
  const double phi = p.r / (2.0 * p.r + p.sigma);
  return {phi, phi};
}

}  // namespace emobee::meanfield
