// SPDX-License-Identifier: Apache-2.0
#include "emobee/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "emobee/dynamics.hpp"
#include "emobee/error.hpp"
#include "format.hpp"

namespace emobee {

namespace fs = std::filesystem;

namespace {

using detail::format_double;

std::string field(const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : ""; }

std::string field(const std::optional<double>& x) { return x ? format_double(*x) : ""; }

void append_emotion(std::string& line, const std::optional<EmotionState>& m) {
  line += ',';
  if (m) line += format_double(m->valence);
  line += ',';
  if (m) line += format_double(m->arousal);
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError(dir.string(), ec.message());
}

// Buffered CSV file that reports failures with its path.
class CsvFile {
 public:
  CsvFile(const fs::path& path, const char* header) : path_(path), out_(path, std::ios::binary) {
    if (!out_) throw IoError(path.string(), "cannot open for writing");
    line(header);
  }

  void line(std::string_view row) {
    out_.write(row.data(), static_cast<std::streamsize>(row.size()));
    out_.put('\n');
  }

  void close() {
    out_.close();
    if (!out_) throw IoError(path_.string(), "write failed");
  }

 private:
  fs::path path_;
  std::ofstream out_;
};

}  // namespace

Replications run_replications(const Condition& cond, const GridDims& dims,
                              std::uint64_t base_seed, std::size_t workers) {
  cond.init.validate();
  cond.params.validate();
  const std::size_t n = cond.n_runs;
  Replications out;
  out.runs.resize(n);
  out.trajectories.resize(n);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::size_t k = next.fetch_add(1); k < n; k = next.fetch_add(1)) {
      try {
        const std::uint64_t seed = base_seed + k;
        SimResult res = run_sim(dims, cond.init, cond.params, cond.max_steps, seed);
        out.runs[k] = summarize_run(res.trajectory, seed);
        out.trajectories[k] = std::move(res.trajectory);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n);
      }
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

void write_runs_csv(const fs::path& path, std::span<const RunSummary> runs) {
  CsvFile csv(path, kRunsHeader);
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const RunSummary& r = runs[k];
    csv.line(std::to_string(k) + ',' + std::to_string(r.seed) + ',' + to_string(r.winner) + ',' +
             field(r.consensus_time) + ',' + field(r.half_life) + ',' + format_double(r.auc_diff) +
             ',' + format_double(r.final_fractions.phi_a) + ',' +
             format_double(r.final_fractions.phi_b));
  }
  csv.close();
}

void write_timeseries_csv(const fs::path& path, std::span<const Trajectory> trajs) {
  CsvFile csv(path, kTimeseriesHeader);
  std::string line;
  for (std::size_t k = 0; k < trajs.size(); ++k) {
    for (const StepRecord& rec : trajs[k].records) {
      line = std::to_string(k) + ',' + std::to_string(rec.step) + ',' +
             format_double(rec.fractions.phi_a) + ',' + format_double(rec.fractions.phi_b) + ',' +
             format_double(rec.fractions.u);
      append_emotion(line, rec.mean(DecisionState::A));
      append_emotion(line, rec.mean(DecisionState::B));
      append_emotion(line, rec.mean(DecisionState::U));
      csv.line(line);
    }
  }
  csv.close();
}

void write_curve_csv(const fs::path& path, const ConditionSummary& summary) {
  CsvFile csv(path, kCurveHeader);
  for (const CurvePoint& p : summary.max_commitment) {
    csv.line(std::to_string(p.step) + ',' + format_double(p.mean) + ',' + format_double(p.ci_lo) +
             ',' + format_double(p.ci_hi));
  }
  csv.close();
}

void write_condition_summary_csv(const fs::path& path, std::span<const SummaryRow> rows) {
  CsvFile csv(path, kConditionSummaryHeader);
  for (const SummaryRow& row : rows) {
    const GroupEmotionSpec& a = row.condition->init.emotion_a;
    csv.line(format_double(a.mean_a) + ',' + format_double(a.mean_v) + ',' +
             format_double(row.summary->win_rate_a) + ',' +
             field(row.summary->mean_consensus_time) + ',' +
             format_double(row.summary->mean_auc_diff));
  }
  csv.close();
}

void write_outputs(const fs::path& outdir, const Condition& cond, const Replications& reps,
                   const ConditionSummary& summary, bool emit_timeseries) {
  ensure_dir(outdir);
  write_runs_csv(outdir / "runs.csv", reps.runs);
  if (emit_timeseries) write_timeseries_csv(outdir / "timeseries.csv", reps.trajectories);
  const SummaryRow row{&cond, &summary};
  write_condition_summary_csv(outdir / "condition_summary.csv", std::span(&row, 1));
  write_curve_csv(outdir / "max_commit_curve.csv", summary);
}

ConditionSummary run_condition(const ExperimentConfig& cfg, const Condition& cond,
                               const fs::path& outdir, std::size_t workers) {
  const Replications reps = run_replications(cond, cfg.grid, cfg.base_seed, workers);
  ConditionSummary summary = aggregate(reps.runs, reps.trajectories, cond.id);
  write_outputs(outdir, cond, reps, summary, cfg.emit_timeseries);
  return summary;
}

std::vector<Condition> conditions_for(const ExperimentConfig& cfg, int scenario) {
  cfg.validate();
  const ScenarioDefaults defaults = cfg.scenario_defaults();
  switch (scenario) {
    case 1: return scenario1_conditions(cfg.levels_a, cfg.levels_v, cfg.baseline_b(), defaults);
    case 2: return scenario2_conditions(cfg.levels_a, cfg.levels_v, cfg.baseline_a_b, defaults);
    case 3: return {scenario3_condition(defaults)};
    default: throw DomainError("scenario must be 1, 2 or 3");
  }
}

std::vector<ConditionSummary> run_sweep(const ExperimentConfig& cfg, int scenario,
                                        std::size_t workers) {
  const std::vector<Condition> conds = conditions_for(cfg, scenario);
  const fs::path root(cfg.out_dir);
  ensure_dir(root);

  std::vector<ConditionSummary> summaries;
  summaries.reserve(conds.size());
  for (const Condition& c : conds) summaries.push_back(run_condition(cfg, c, root / c.id, workers));

  std::vector<SummaryRow> rows;
  for (std::size_t i = 0; i < conds.size(); ++i) rows.push_back({&conds[i], &summaries[i]});
  write_condition_summary_csv(root / "condition_summary.csv", rows);
  return summaries;
}

}  // namespace emobee
