#include "dagscope/cli/commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace dagscope::cli {

namespace {

void add_output(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--out", out.out_root, "Root under which run directories are created")->capture_default_str();
  cmd->add_option("--run-dir", out.run_dir, "Exact run directory (overrides the derived label)");
}

void add_solver(CLI::App* cmd, SolverOptions& s) {
  cmd->add_option("--loss", s.loss, "ls | golem-ev | golem-nv | weighted")->capture_default_str();
  cmd->add_option("--lambda", s.lambda, "L1 penalty weight")->capture_default_str();
  cmd->add_option("--sigma", s.sigma, "Noise covariance CSV for the weighted loss");
  cmd->add_flag("--sigma-from-truth", s.sigma_from_truth, "Weighted loss: take Sigma from the truth file");
  cmd->add_option("--rho-init", s.rho_init)->capture_default_str();
  cmd->add_option("--rho-max", s.rho_max)->capture_default_str();
  cmd->add_option("--rho-multiplier", s.rho_multiplier)->capture_default_str();
  cmd->add_option("--alpha-init", s.alpha_init)->capture_default_str();
  cmd->add_option("--h-tol", s.h_tolerance)->capture_default_str();
  cmd->add_option("--progress-ratio", s.progress_ratio)->capture_default_str();
  cmd->add_option("--max-outer", s.max_outer)->capture_default_str();
  cmd->add_option("--memory", s.memory, "L-BFGS history length")->capture_default_str();
  cmd->add_option("--max-inner", s.max_inner)->capture_default_str();
  cmd->add_option("--gtol", s.gradient_tolerance)->capture_default_str();
  cmd->add_option("--omega", s.omega, "Threshold on |w|")->capture_default_str();
  cmd->add_flag("--repair", s.repair, "Greedily remove weakest cycle edges after thresholding");
}

void report(const std::filesystem::path& dir) { std::cout << dir.string() << '\n'; }

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Linear SEM simulation and continuous DAG learning"};
  app.set_version_flag("--version", std::string("dagscope ") + kToolVersion);
  app.set_config("--config", "", "TOML/INI file; options of a command go in a [command] section");
  app.require_subcommand(1);

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Simulate a linear SEM dataset");
  simulate->add_option("--preset", sim.preset, "fig1-like");
  simulate->add_option("--nodes", sim.nodes)->capture_default_str();
  simulate->add_option("--edges", sim.edges, "Expected (or exact) edge count")->capture_default_str();
  simulate->add_flag("--exact-edges", sim.exact_edges);
  simulate->add_option("--noise", sim.noise, "uniform | gaussian")->capture_default_str();
  simulate->add_option("--noise-scale", sim.noise_scale, "Half-width or std; one value or one per node")
      ->capture_default_str();
  simulate->add_option("--samples", sim.samples)->capture_default_str();
  simulate->add_option("--seed", sim.seed)->capture_default_str();
  simulate->add_option("--weight-low", sim.weight_low)->capture_default_str();
  simulate->add_option("--weight-high", sim.weight_high)->capture_default_str();
  simulate->add_option("--target-stds", sim.target_stds, "Post-scale columns to these stds");
  simulate->add_option("--toy-gamma", sim.toy_gamma, "Two-variable pair X1 = gamma * X0");
  add_output(simulate, sim.output);

  FitOptions fit;
  auto* fitc = app.add_subcommand("fit", "Fit a DAG to a dataset");
  fitc->add_option("--data", fit.data)->required();
  fitc->add_option("--truth", fit.truth, "Truth JSON; enables metrics.json");
  fitc->add_option("--scale", fit.scale, "none | center | standardize")->capture_default_str();
  fitc->add_flag("--snapshots", fit.snapshots, "Write W after every inner solve");
  add_solver(fitc, fit.solver);
  add_output(fitc, fit.output);

  SweepOptions sweep;
  auto* sweepc = app.add_subcommand("sweep", "Refit under a sequence of column rescalings");
  sweepc->add_option("--data", sweep.data)->required();
  sweepc->add_option("--truth", sweep.truth);
  sweepc->add_option("--scale", sweep.scale)->capture_default_str();
  sweepc->add_option("--mode", sweep.mode, "target | incremental")->capture_default_str();
  sweepc->add_option("--target", sweep.target)->capture_default_str();
  sweepc->add_option("--factors", sweep.factors)->capture_default_str();
  sweepc->add_option("--factor-kind", sweep.factor_kind, "std | variance")->capture_default_str();
  sweepc->add_option("--steps", sweep.steps)->capture_default_str();
  sweepc->add_option("--threads", sweep.threads, "0: DAGSCOPE_THREADS or all cores")->capture_default_str();
  add_solver(sweepc, sweep.solver);
  add_output(sweepc, sweep.output);

  ReproduceOptions repro;
  auto* reproc = app.add_subcommand("reproduce", "Regenerate a figure");
  reproc->add_option("figure", repro.figure, "fig2 | fig3 | fig4 | flip")->required();
  reproc->add_option("--seed", repro.seed)->capture_default_str();
  reproc->add_option("--max-seeds", repro.max_seeds)->capture_default_str();
  reproc->add_option("--threads", repro.threads)->capture_default_str();
  add_output(reproc, repro.output);

  std::string manifest;
  OutputOptions replay_out;
  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("manifest", manifest)->required()->check(CLI::ExistingFile);
  add_output(replay, replay_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*simulate) report(cmd_simulate(sim));
    else if (*fitc) report(cmd_fit(fit));
    else if (*sweepc) report(cmd_sweep(sweep));
    else if (*reproc) report(cmd_reproduce(repro));
    else if (*replay) report(cmd_replay(manifest, replay_out));
    return kSuccess;
  } catch (const NotFoundError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPresetNotFound;
  } catch (const SolverError& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kSolverFailure;
  } catch (const SpecError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what();
    if (e.line() > 0) std::cerr << " (line " << e.line() << ", column " << e.column() << ')';
    std::cerr << '\n';
    return kDataError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kDataError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("dagscope");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace dagscope::cli
