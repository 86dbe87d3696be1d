// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "emobee/error.hpp"
#include "emobee/meanfield.hpp"

using namespace emobee;
using namespace emobee::meanfield;

TEST_CASE("bee_rhs by direct substitution") {
  const Derivative d = bee_rhs({0.1, 0.1}, {0.02, 0.02});
  CHECK(d.d_phi_a == doctest::Approx(0.0014).epsilon(1e-12));
  CHECK(d.d_phi_b == doctest::Approx(0.0014).epsilon(1e-12));
  CHECK(std::abs(d.d_phi_a - 0.0014) <= 1e-15);

  for (Params p : {Params{0.02, 0.02}, Params{1.0, 3.0}, Params{0.0, 0.5}}) {
    for (State s : {State{1, 0}, State{0, 1}, State{0, 0}}) {
      const Derivative z = bee_rhs(s, p);
      CHECK(z.d_phi_a == 0.0);
      CHECK(z.d_phi_b == 0.0);
    }
  }
}

TEST_CASE("bee_rhs is exactly A/B symmetric") {
  for (double a = 0.0; a <= 1.0; a += 0.05) {
    for (double b = 0.0; a + b <= 1.0; b += 0.05) {
      const Params p{0.03, 0.07};
      const Derivative d = bee_rhs({a, b}, p);
      const Derivative e = bee_rhs({b, a}, p);
      CHECK(d.d_phi_a == e.d_phi_b);
      CHECK(d.d_phi_b == e.d_phi_a);
    }
  }
}

TEST_CASE("symmetric equilibrium") {
  State s = symmetric_equilibrium({0.02, 0.02});
  CHECK(s.phi_a == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(s.u() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  s = symmetric_equilibrium({0.02, 0.0});
  CHECK(s.phi_a == 0.5);
  CHECK(s.u() == 0.0);
  s = symmetric_equilibrium({0.02, 0.04});
  CHECK(s.phi_a == doctest::Approx(0.25).epsilon(1e-15));
  for (Params p : {Params{0.02, 0.02}, Params{0.02, 0.04}, Params{0.3, 0.01}}) {
    const Derivative d = bee_rhs(symmetric_equilibrium(p), p);
    CHECK(std::abs(d.d_phi_a) <= 1e-15);
    CHECK(std::abs(d.d_phi_b) <= 1e-15);
  }
  CHECK_THROWS_AS(symmetric_equilibrium({0.0, 0.02}), DomainError);
}

TEST_CASE("integration from zero stays at zero") {
  const auto traj = integrate({0, 0}, {0.02, 0.02}, 0.1, 100);
  REQUIRE(traj.size() == 101);
  for (const State& s : traj) CHECK(s == State{0, 0});
}

TEST_CASE("symmetric start keeps phi_A = phi_B") {
  const auto traj = integrate({0.1, 0.1}, {0.02, 0.02}, 0.1, 10000);
  for (const State& s : traj) CHECK(std::abs(s.phi_a - s.phi_b) <= 1e-12);
}

TEST_CASE("symmetric trajectory converges to the algebraic fixed point") {
  // Oracle: r u* = sigma phi* with 2 phi* + u* = 1.
  const double r = 0.02, sigma = 0.02;
  const double phi_star = r / (2.0 * r + sigma);
  const auto traj = integrate({0.1, 0.1}, {r, sigma}, 0.1, 100000);  // t = 10^4
  const State end = traj.back();
  CHECK(end.phi_a == doctest::Approx(phi_star).epsilon(1e-6));
  CHECK(end.u() == doctest::Approx(1.0 - 2.0 * phi_star).epsilon(1e-6));
  const Derivative d = bee_rhs(end, {r, sigma});
  CHECK(std::abs(d.d_phi_a) < 1e-9);
}

TEST_CASE("simplex is preserved for reasonable steps") {
  const auto traj = integrate({0.3, 0.05}, {0.5, 1.0}, 0.05, 4000);
  for (const State& s : traj) {
    CHECK(s.phi_a >= 0.0);
    CHECK(s.phi_b >= 0.0);
    CHECK(s.phi_a + s.phi_b <= 1.0 + 1e-9);
  }
}

TEST_CASE("fourth-order convergence") {
  const Params p{1.0, 0.5};
  const State s0{0.12, 0.08};
  const double t_end = 8.0;
  auto end = [&](double dt) {
    return integrate(s0, p, dt, static_cast<std::size_t>(std::lround(t_end / dt))).back();
  };
  const double dt = 0.2;
  const State ref = end(dt / 100.0);
  const State coarse = end(dt);
  const State fine = end(dt / 2.0);
  const double e1 = std::hypot(coarse.phi_a - ref.phi_a, coarse.phi_b - ref.phi_b);
  const double e2 = std::hypot(fine.phi_a - ref.phi_a, fine.phi_b - ref.phi_b);
  CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.15));
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(integrate({0.1, 0.1}, {0.02, 0.02}, 0.0, 10), DomainError);
  CHECK_THROWS_AS(integrate({0.1, 0.1}, {0.02, 0.02}, 0.1, 0), DomainError);
  CHECK_THROWS_AS(integrate({0.7, 0.7}, {0.02, 0.02}, 0.1, 10), DomainError);
  CHECK_THROWS_AS(integrate({0.1, 0.1}, {-1.0, 0.02}, 0.1, 10), DomainError);
}

TEST_CASE("a step that is far too large is reported") {
  CHECK_THROWS_AS(integrate({0.45, 0.45}, {5.0, 50.0}, 1.0, 10), NumericalInstability);
}
