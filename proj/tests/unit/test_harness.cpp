// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "emobee/dynamics.hpp"
#include "emobee/error.hpp"
#include "emobee/harness.hpp"

using namespace emobee;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string first_line(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  return line;
}

std::size_t line_count(const fs::path& p) {
  std::ifstream in(p);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("emobee_harness_" + name);
  fs::remove_all(dir);
  return dir;
}

Condition small_condition(std::size_t runs) {
  Condition c = scenario3_condition(ScenarioDefaults{});
  c.n_runs = runs;
  c.max_steps = 120;
  c.params.r0 = 0.2;
  return c;
}

}  // namespace

TEST_CASE("one replication equals a direct run") {
  const Condition c = small_condition(1);
  const Replications reps = run_replications(c, {10, 10}, 42, 1);
  REQUIRE(reps.runs.size() == 1);
  const SimResult direct = run_sim({10, 10}, c.init, c.params, c.max_steps, 42);
  CHECK(reps.trajectories[0] == direct.trajectory);
  CHECK(reps.runs[0] == summarize_run(direct.trajectory, 42));
}

TEST_CASE("results are independent of worker count and ordered by replication") {
  const Condition c = small_condition(23);
  const Replications serial = run_replications(c, {10, 10}, 7, 1);
  for (std::size_t workers : {2u, 3u, 8u, 64u}) {
    const Replications par = run_replications(c, {10, 10}, 7, workers);
    CHECK(par.runs == serial.runs);
    CHECK(par.trajectories == serial.trajectories);
  }
  for (std::size_t k = 0; k < serial.runs.size(); ++k) CHECK(serial.runs[k].seed == 7 + k);
}

TEST_CASE("output schemas are fixed") {
  CHECK(std::string(kRunsHeader) ==
        "run_id,seed,winner,consensus_time,half_life,auc_diff,final_phi_A,final_phi_B");
  CHECK(std::string(kTimeseriesHeader) ==
        "run_id,step,phi_A,phi_B,u,mean_v_A,mean_a_A,mean_v_B,mean_a_B,mean_v_U,mean_a_U");
  CHECK(std::string(kConditionSummaryHeader) == "a_A,v_A,win_A,mean_t_cons,mean_auc_diff");
  CHECK(std::string(kCurveHeader) == "step,mean_max_phi,ci_lo,ci_hi");
  CHECK(std::string(kMeanfieldHeader) == "t,phi_A,phi_B,u");
}

TEST_CASE("runs.csv golden content") {
  const fs::path dir = scratch("golden");
  fs::create_directories(dir);
  std::vector<RunSummary> runs(2);
  runs[0] = {5, Winner::A, 312, 140, 0.25, {1.0, 0.0, 0.0}};
  runs[1] = {6, Winner::None, std::nullopt, std::nullopt, -0.125, {0.4, 0.4, 0.2}};
  write_runs_csv(dir / "runs.csv", runs);
  CHECK(slurp(dir / "runs.csv") ==
        "run_id,seed,winner,consensus_time,half_life,auc_diff,final_phi_A,final_phi_B\n"
        "0,5,A,312,140,0.25,1,0\n"
        "1,6,none,,,-0.125,0.4,0.4\n");
  fs::remove_all(dir);
}

TEST_CASE("timeseries.csv leaves empty-group cells blank") {
  const fs::path dir = scratch("ts");
  fs::create_directories(dir);
  Population pop({3, 3});
  pop.set_decision(0, DecisionState::A);
  pop.set_emotion(0, {0.5, 0.25});
  Trajectory t;
  t.records.push_back(record_of(pop, 0));
  write_timeseries_csv(dir / "timeseries.csv", std::span(&t, 1));
  // 1 A of 9: phi_A = 1/9.
  CHECK(slurp(dir / "timeseries.csv") ==
        std::string(kTimeseriesHeader) + "\n0,0,0.1111111111111111,0,0.8888888888888888,0.5,0.25,,,0,0.5\n");
  fs::remove_all(dir);
}

TEST_CASE("write_outputs produces the file set") {
  const Condition c = small_condition(6);
  const Replications reps = run_replications(c, {10, 10}, 1, 2);
  const ConditionSummary s = aggregate(reps.runs, reps.trajectories, c.id);

  SUBCASE("without timeseries") {
    const fs::path dir = scratch("files");
    write_outputs(dir, c, reps, s, false);
    CHECK(fs::exists(dir / "runs.csv"));
    CHECK(fs::exists(dir / "condition_summary.csv"));
    CHECK(fs::exists(dir / "max_commit_curve.csv"));
    CHECK_FALSE(fs::exists(dir / "timeseries.csv"));
    CHECK(line_count(dir / "runs.csv") == 7);
    CHECK(line_count(dir / "condition_summary.csv") == 2);
    CHECK(line_count(dir / "max_commit_curve.csv") == s.max_commitment.size() + 1);
    CHECK(first_line(dir / "max_commit_curve.csv") == kCurveHeader);
    fs::remove_all(dir);
  }
  SUBCASE("with timeseries") {
    const fs::path dir = scratch("files_ts");
    write_outputs(dir, c, reps, s, true);
    std::size_t records = 0;
    for (const auto& t : reps.trajectories) records += t.size();
    CHECK(line_count(dir / "timeseries.csv") == records + 1);
    fs::remove_all(dir);
  }
  SUBCASE("empty replication set with the flag off writes no timeseries") {
    const fs::path dir = scratch("files_empty");
    Replications none;
    write_outputs(dir, c, none, s, false);
    CHECK_FALSE(fs::exists(dir / "timeseries.csv"));
    CHECK(line_count(dir / "runs.csv") == 1);
    fs::remove_all(dir);
  }
}

TEST_CASE("every row has the header's field count and '.' decimals") {
  const Condition c = small_condition(4);
  const Replications reps = run_replications(c, {10, 10}, 3, 1);
  const ConditionSummary s = aggregate(reps.runs, reps.trajectories, c.id);
  const fs::path dir = scratch("format");
  write_outputs(dir, c, reps, s, true);
  for (const char* name : {"runs.csv", "timeseries.csv", "condition_summary.csv", "max_commit_curve.csv"}) {
    // Missing values are empty fields, so a row may end in ','; what must hold
    // is the field count.
    std::ifstream in(dir / name);
    std::string header;
    std::getline(in, header);
    const auto fields = std::count(header.begin(), header.end(), ',');
    CHECK(header.back() != ',');
    for (std::string line; std::getline(in, line);) {
      REQUIRE_FALSE(line.empty());
      CHECK(std::count(line.begin(), line.end(), ',') == fields);
      CHECK(line.find(';') == std::string::npos);
    }
  }
  fs::remove_all(dir);
}

TEST_CASE("IO failures name the path") {
  std::vector<RunSummary> runs(1);
  try {
    write_runs_csv("/proc/emobee/forbidden/runs.csv", runs);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("/proc/emobee/forbidden/runs.csv") != std::string::npos);
  }
  const Condition c = small_condition(1);
  const Replications reps = run_replications(c, {5, 5}, 1, 1);
  const ConditionSummary s = aggregate(reps.runs, reps.trajectories);
  CHECK_THROWS_AS(write_outputs("/proc/emobee/forbidden", c, reps, s, false), IoError);
}

TEST_CASE("sweep writes one directory per condition and a summary table") {
  ExperimentConfig cfg;
  cfg.grid = {8, 8};
  cfg.levels_a = {0.2, 1.0};
  cfg.levels_v = {0.5};
  cfg.n_runs = 3;
  cfg.max_steps = 50;
  cfg.out_dir = scratch("sweep").string();
  const auto summaries = run_sweep(cfg, 2, 2);
  CHECK(summaries.size() == 2);
  const fs::path root(cfg.out_dir);
  CHECK(line_count(root / "condition_summary.csv") == 3);
  for (const Condition& c : conditions_for(cfg, 2)) {
    CHECK(fs::exists(root / c.id / "runs.csv"));
    CHECK(fs::exists(root / c.id / "max_commit_curve.csv"));
  }
  std::ifstream in(root / "condition_summary.csv");
  std::string header, row1;
  std::getline(in, header);
  std::getline(in, row1);
  CHECK(row1.rfind("0.2,0.5,", 0) == 0);
  fs::remove_all(root);
}

TEST_CASE("balanced condition curve starts at the committed fraction and climbs to 1") {
  // Fast rates so every run reaches consensus inside the horizon.
  Condition c = scenario3_condition(ScenarioDefaults{});
  c.params.r0 = 0.3;
  c.params.sigma0 = 0.3;
  c.n_runs = 20;
  c.max_steps = 2000;
  const Replications reps = run_replications(c, {10, 10}, 11, 1);
  const ConditionSummary s = aggregate(reps.runs, reps.trajectories);
  std::size_t converged = 0;
  for (const RunSummary& r : reps.runs) converged += r.consensus_time.has_value();
  REQUIRE(converged == reps.runs.size());
  CHECK(s.max_commitment.front().mean == doctest::Approx(0.1));
  CHECK(s.max_commitment.back().mean == 1.0);
}
