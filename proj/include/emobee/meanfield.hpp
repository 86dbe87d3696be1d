// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace emobee::meanfield {

/// Committed fractions; u = 1 - phi_a - phi_b.
struct State {
  double phi_a = 0.0;
  double phi_b = 0.0;

  // Parenthesised so the value is invariant under swapping the two options.
  double u() const { return 1.0 - (phi_a + phi_b); }
  bool operator==(const State&) const = default;
};

/// Recruitment rate r and cross-inhibition rate sigma, per unit time.
struct Params {
  double r = 0.02;
  double sigma = 0.02;
};

struct Derivative {
  double d_phi_a = 0.0;
  double d_phi_b = 0.0;
};

/// Reduced bee equation:
///   dphi_A/dt = r phi_A u - sigma phi_A phi_B
///   dphi_B/dt = r phi_B u - sigma phi_A phi_B
Derivative bee_rhs(const State& s, const Params& p);

/// Fixed-step classical RK4. Returns n_steps + 1 states starting with
/// `initial`. Rounding excursions below 1e-6 outside the simplex are clipped;
/// anything larger throws NumericalInstability.
std::vector<State> integrate(const State& initial, const Params& p, double dt,
                             std::size_t n_steps);

/// Interior symmetric fixed point phi_A = phi_B = r / (2r + sigma).
/// Throws DomainError for r <= 0.
State symmetric_equilibrium(const Params& p);

}  // namespace emobee::meanfield
