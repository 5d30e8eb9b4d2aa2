#pragma once

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dagscope::cli {

/// Where a command writes. With `run_dir` empty the run directory is
/// <out_root>/<command>-<digest of the resolved configuration>.
struct OutputOptions {
  std::string out_root = "out";
  std::string run_dir;
};

struct SimulateOptions {
  std::string preset;  // "" or "fig1-like"
  std::size_t nodes = 4;
  double edges = 4.0;
  bool exact_edges = false;
  std::string noise = "uniform";
  std::vector<double> noise_scale{1.0};
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  double weight_low = 0.5;
  double weight_high = 2.0;
  std::vector<double> target_stds;
  double toy_gamma = 0.0;  // > 0 selects the two-variable toy pair
  OutputOptions output;
};

/// Solver and thresholding flags shared by fit, sweep and reproduce.
struct SolverOptions {
  std::string loss = "ls";
  double lambda = 0.0;
  std::string sigma;           // CSV path for the weighted loss
  bool sigma_from_truth = false;  // derive Sigma from the truth file instead
  double rho_init = 1.0;
  double rho_max = 1e16;
  double rho_multiplier = 10.0;
  double alpha_init = 0.0;
  double h_tolerance = 1e-8;
  double progress_ratio = 0.25;
  std::size_t max_outer = 100;
  std::size_t memory = 10;
  std::size_t max_inner = 500;
  double gradient_tolerance = 1e-7;
  double omega = 0.3;
  bool repair = false;
};

struct FitOptions {
  std::string data;
  std::string truth;
  std::string scale = "center";
  SolverOptions solver;
  bool snapshots = false;
  OutputOptions output;
};

struct SweepOptions {
  std::string data;
  std::string truth;
  std::string scale = "center";
  std::string mode = "target";  // "target" | "incremental"
  std::size_t target = 3;
  std::vector<double> factors{1, 2, 4, 8, 16, 32};
  std::string factor_kind = "std";  // "std": column *= f; "variance": column *= sqrt(f)
  std::size_t steps = 5;            // incremental mode
  std::size_t threads = 0;          // 0: DAGSCOPE_THREADS or hardware concurrency
  SolverOptions solver;
  OutputOptions output;
};

struct ReproduceOptions {
  std::string figure;  // fig2 | fig3 | fig4 | flip
  std::uint64_t seed = 0;
  std::size_t max_seeds = 50;
  std::size_t threads = 0;
  OutputOptions output;
};

nlohmann::json to_json(const SimulateOptions& o);
nlohmann::json to_json(const SolverOptions& o);
nlohmann::json to_json(const FitOptions& o);
nlohmann::json to_json(const SweepOptions& o);
nlohmann::json to_json(const ReproduceOptions& o);

SimulateOptions simulate_options_from_json(const nlohmann::json& j);
SolverOptions solver_options_from_json(const nlohmann::json& j);
FitOptions fit_options_from_json(const nlohmann::json& j);
SweepOptions sweep_options_from_json(const nlohmann::json& j);
ReproduceOptions reproduce_options_from_json(const nlohmann::json& j);

}  // namespace dagscope::cli
