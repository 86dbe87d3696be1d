// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "emobee/config.hpp"
#include "emobee/metrics.hpp"
#include "emobee/scenarios.hpp"
#include "emobee/trajectory.hpp"

namespace emobee {

struct Replications {
  std::vector<RunSummary> runs;
  std::vector<Trajectory> trajectories;
};

/// Runs replication k with seed base_seed + k for k in [0, n_runs) on up to
/// `workers` threads. Results are ordered by k and identical for any worker
/// count.
Replications run_replications(const Condition& cond, const GridDims& dims,
                              std::uint64_t base_seed, std::size_t workers);

//---------------------------------------------------------------------------//
// CSV output. Fixed schemas, header row, blank field for a missing value.
//---------------------------------------------------------------------------//

inline constexpr const char* kRunsHeader =
    "run_id,seed,winner,consensus_time,half_life,auc_diff,final_phi_A,final_phi_B";
inline constexpr const char* kTimeseriesHeader =
    "run_id,step,phi_A,phi_B,u,mean_v_A,mean_a_A,mean_v_B,mean_a_B,mean_v_U,mean_a_U";
inline constexpr const char* kConditionSummaryHeader = "a_A,v_A,win_A,mean_t_cons,mean_auc_diff";
inline constexpr const char* kCurveHeader = "step,mean_max_phi,ci_lo,ci_hi";
inline constexpr const char* kMeanfieldHeader = "t,phi_A,phi_B,u";

void write_runs_csv(const std::filesystem::path& path, std::span<const RunSummary> runs);
void write_timeseries_csv(const std::filesystem::path& path, std::span<const Trajectory> trajs);
void write_curve_csv(const std::filesystem::path& path, const ConditionSummary& summary);

struct SummaryRow {
  const Condition* condition;
  const ConditionSummary* summary;
};
void write_condition_summary_csv(const std::filesystem::path& path,
                                 std::span<const SummaryRow> rows);

/// Writes runs.csv, max_commit_curve.csv, a one-row condition_summary.csv and,
/// when `emit_timeseries` is set, timeseries.csv into `outdir` (created if
/// needed). Throws IoError naming the path on failure.
void write_outputs(const std::filesystem::path& outdir, const Condition& cond,
                   const Replications& reps, const ConditionSummary& summary,
                   bool emit_timeseries);

//---------------------------------------------------------------------------//
// Experiment drivers used by the CLI
//---------------------------------------------------------------------------//

/// Runs one condition and writes its files into `outdir`.
ConditionSummary run_condition(const ExperimentConfig& cfg, const Condition& cond,
                               const std::filesystem::path& outdir, std::size_t workers);

/// Scenario 1 or 2 sweep: one subdirectory per condition plus a
/// condition_summary.csv with one row per condition at the top of `outdir`.
std::vector<ConditionSummary> run_sweep(const ExperimentConfig& cfg, int scenario,
                                        std::size_t workers);

/// Conditions the config describes for a scenario (1 and 2 sweep the level
/// lists, 3 is the single balanced condition).
std::vector<Condition> conditions_for(const ExperimentConfig& cfg, int scenario);

}  // namespace emobee
