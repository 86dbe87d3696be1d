// SPDX-License-Identifier: Apache-2.0
#include "emobee/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <thread>

#include "emobee/config.hpp"
#include "emobee/error.hpp"
#include "emobee/harness.hpp"
#include "emobee/kernels.hpp"
#include "emobee/meanfield.hpp"
#include "emobee/selfcheck.hpp"
#include "format.hpp"

namespace emobee {

namespace fs = std::filesystem;

namespace {

struct GlobalFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> runs;
  std::optional<std::string> out;
  bool emit_timeseries = false;
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
};

struct MeanfieldFlags {
  std::optional<double> r, sigma, phi_a, phi_b;
  double dt = 0.1;
  std::size_t steps = 5000;
};

ExperimentConfig resolve_config(const GlobalFlags& g) {
  ExperimentConfig cfg = g.config_path.empty() ? ExperimentConfig{} : load_config(g.config_path);
  if (g.seed) cfg.base_seed = *g.seed;
  if (g.runs) cfg.n_runs = *g.runs;
  if (g.out) cfg.out_dir = *g.out;
  if (g.emit_timeseries) cfg.emit_timeseries = true;
  cfg.validate();
  return cfg;
}

void report(std::ostream& out, const ConditionSummary& s) {
  out << s.id << ": runs=" << s.n_runs << " win_A=" << detail::format_double(s.win_rate_a)
      << " mean_t_cons="
      << (s.mean_consensus_time ? detail::format_double(*s.mean_consensus_time) : "-")
      << " mean_auc_diff=" << detail::format_double(s.mean_auc_diff) << '\n';
}

void write_meanfield(const fs::path& dir, const std::vector<meanfield::State>& traj, double dt) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError(dir.string(), ec.message());
  const fs::path path = dir / "meanfield.csv";
  std::ofstream csv(path, std::ios::binary);
  if (!csv) throw IoError(path.string(), "cannot open for writing");
  csv << kMeanfieldHeader << '\n';
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const auto& s = traj[k];
    csv << detail::format_double(static_cast<double>(k) * dt) << ',' << detail::format_double(s.phi_a)
        << ',' << detail::format_double(s.phi_b) << ',' << detail::format_double(s.u()) << '\n';
  }
  csv.close();
  if (!csv) throw IoError(path.string(), "write failed");
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Emotion-modulated bee-equation swarm decision simulator"};
  app.name("emobee");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--config", g.config_path, "key = value configuration file");
  app.add_option("--seed", g.seed, "base seed; replication k uses seed + k");
  app.add_option("--runs", g.runs, "replications per condition")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "output directory");
  app.add_flag("--emit-timeseries", g.emit_timeseries, "also write timeseries.csv");
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber);

  auto* run = app.add_subcommand("run", "run the first condition of the configured scenario");
  auto* sweep = app.add_subcommand("sweep", "run a scenario 1 or 2 condition grid");
  std::optional<int> sweep_scenario;
  sweep->add_option("--scenario", sweep_scenario, "1 or 2")->check(CLI::IsMember({1, 2}));
  auto* snowball = app.add_subcommand("snowball", "run the balanced scenario 3 condition");
  auto* mf = app.add_subcommand("meanfield", "integrate the mean-field bee equation");
  MeanfieldFlags m;
  mf->add_option("--r", m.r, "recruitment rate (default: r0)");
  mf->add_option("--sigma", m.sigma, "cross-inhibition rate (default: sigma0)");
  mf->add_option("--phi-a", m.phi_a, "initial phi_A (default: frac_a)");
  mf->add_option("--phi-b", m.phi_b, "initial phi_B (default: frac_b)");
  mf->add_option("--dt", m.dt, "RK4 step");
  mf->add_option("--steps", m.steps, "number of steps");
  auto* validate = app.add_subcommand("validate", "run the invariant self-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) {
      bool ok = true;
      out << "kernels: " << kernels::name(kernels::active().isa) << '\n';
      for (const CheckResult& r : run_self_checks()) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.passed) out << ": " << r.detail;
        out << '\n';
        ok = ok && r.passed;
      }
      return ok ? kExitOk : kExitCheckFailed;
    }

    const ExperimentConfig cfg = resolve_config(g);

    if (mf->parsed()) {
      const meanfield::Params p{m.r.value_or(cfg.params.r0), m.sigma.value_or(cfg.params.sigma0)};
      const meanfield::State s0{m.phi_a.value_or(cfg.frac_a), m.phi_b.value_or(cfg.frac_b)};
      write_meanfield(cfg.out_dir, meanfield::integrate(s0, p, m.dt, m.steps), m.dt);
      out << "wrote " << (fs::path(cfg.out_dir) / "meanfield.csv").string() << '\n';
      return kExitOk;
    }
    if (sweep->parsed()) {
      const int scenario = sweep_scenario.value_or(cfg.scenario);
      if (scenario != 1 && scenario != 2) {
        err << "sweep needs scenario 1 or 2\n";
        return kExitUsage;
      }
      for (const ConditionSummary& s : run_sweep(cfg, scenario, g.workers)) report(out, s);
      return kExitOk;
    }
    if (snowball->parsed()) {
      const Condition cond = conditions_for(cfg, 3).front();
      report(out, run_condition(cfg, cond, cfg.out_dir, g.workers));
      return kExitOk;
    }
    if (run->parsed()) {
      const Condition cond = conditions_for(cfg, cfg.scenario).front();
      report(out, run_condition(cfg, cond, cfg.out_dir, g.workers));
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalInstability& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace emobee
