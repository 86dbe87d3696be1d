// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "emobee/dynamics.hpp"
#include "emobee/error.hpp"
#include "emobee/scenarios.hpp"

using namespace emobee;

TEST_CASE("scenario 1 default grid follows the table row order") {
  const GroupEmotionSpec b{0.5, 0.5, 0.05};
  const auto conds = scenario1_conditions(kDefaultLevels, kDefaultLevels, b, ScenarioDefaults{});
  REQUIRE(conds.size() == 16);
  const double levels[] = {0.2, 0.5, 0.8, 1.0};
  std::set<std::string> ids;
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(conds[i].init.emotion_a.mean_a == levels[i / 4]);
    CHECK(conds[i].init.emotion_a.mean_v == levels[i % 4]);
    CHECK(conds[i].init.emotion_a.sd == 0.05);
    CHECK(conds[i].init.emotion_b == b);
    CHECK(conds[i].n_runs == 200);
    CHECK(conds[i].max_steps == 500);
    CHECK(conds[i].params == ModelParams{});
    CHECK_NOTHROW(conds[i].init.validate());
    ids.insert(conds[i].id);
  }
  CHECK(ids.size() == 16);
  CHECK(conds.front().id == "s1_aA0.20_vA0.20");
  CHECK(conds.back().id == "s1_aA1.00_vA1.00");
}

TEST_CASE("scenario 1 single level and custom baseline") {
  const std::vector<double> one{0.5};
  const GroupEmotionSpec b{-0.2, 0.9, 0.05};
  const auto conds = scenario1_conditions(one, one, b, ScenarioDefaults{});
  REQUIRE(conds.size() == 1);
  CHECK(conds[0].init.emotion_b == b);
}

TEST_CASE("scenario 2 matches valence across groups") {
  const auto conds = scenario2_conditions(kDefaultLevels, kDefaultLevels, 0.5, ScenarioDefaults{});
  CHECK(conds.size() == 16);
  for (const Condition& c : conds) {
    CHECK(c.init.emotion_b.mean_v == c.init.emotion_a.mean_v);
    CHECK(c.init.emotion_b.mean_a == 0.5);
  }
  const std::vector<double> v{0.2};
  const std::vector<double> a{0.2, 1.0};
  const auto two = scenario2_conditions(a, v, 0.5, ScenarioDefaults{});
  REQUIRE(two.size() == 2);
  CHECK(two[0].init.emotion_a.mean_v == two[1].init.emotion_a.mean_v);
  CHECK(two[0].init.emotion_a.mean_a != two[1].init.emotion_a.mean_a);
  CHECK(two[0].init.emotion_b == two[1].init.emotion_b);
}

TEST_CASE("condition count is the product of the level lists") {
  const std::vector<double> a{0.1, 0.2, 0.3};
  const std::vector<double> v{-0.5, 0.5};
  CHECK(scenario1_conditions(a, v, {}, ScenarioDefaults{}).size() == 6);
  CHECK(scenario2_conditions(a, v, 0.5, ScenarioDefaults{}).size() == 6);
}

TEST_CASE("invalid levels are rejected") {
  const std::vector<double> ok{0.5};
  const std::vector<double> bad_a{1.2};
  const std::vector<double> bad_v{-1.5};
  const std::vector<double> empty;
  CHECK_THROWS_AS(scenario1_conditions(bad_a, ok, {}, ScenarioDefaults{}), DomainError);
  CHECK_THROWS_AS(scenario1_conditions(ok, bad_v, {}, ScenarioDefaults{}), DomainError);
  CHECK_THROWS_AS(scenario2_conditions(empty, ok, 0.5, ScenarioDefaults{}), DomainError);
  CHECK_THROWS_AS(scenario2_conditions(ok, ok, 1.5, ScenarioDefaults{}), DomainError);
  CHECK_THROWS_AS(scenario1_conditions(ok, ok, {0.0, 2.0, 0.05}, ScenarioDefaults{}), DomainError);
}

TEST_CASE("scenario 3 is exactly symmetric") {
  const Condition c = scenario3_condition(ScenarioDefaults{});
  CHECK(c.init.frac_a == 0.1);
  CHECK(c.init.frac_b == 0.1);
  CHECK(c.init.emotion_a == GroupEmotionSpec{0.5, 0.5, 0.05});
  CHECK(c.init.emotion_a == c.init.emotion_b);
  CHECK(c.init.swapped() == c.init);

  ScenarioDefaults d;
  d.frac_a = 0.25;
  d.frac_b = 0.05;
  const Condition c2 = scenario3_condition(d);
  CHECK(c2.init.frac_a == c2.init.frac_b);
}

TEST_CASE("scenario 3 label-swapped initializer mirrors the run") {
  // Swapping labels in the initial population and replaying the same random
  // stream yields the mirrored trajectory.
  const Condition c = scenario3_condition(ScenarioDefaults{});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng rng(seed);
    const Population pop = init_population({8, 8}, c.init, rng);
    Rng replay = rng;
    const SimResult a = run_from(pop, c.params, 150, rng);
    const SimResult b = run_from(mirrored(pop), c.params, 150, replay);
    CHECK(mirrored(a.trajectory) == b.trajectory);
  }
}
