#include "dagscope/cli/options.hpp"

namespace dagscope::cli {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(OutputOptions, out_root, run_dir)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(SimulateOptions, preset, nodes, edges, exact_edges,
                                                noise, noise_scale, samples, seed, weight_low,
                                                weight_high, target_stds, toy_gamma)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(SolverOptions, loss, lambda, sigma, sigma_from_truth,
                                                rho_init, rho_max, rho_multiplier, alpha_init,
                                                h_tolerance, progress_ratio, max_outer, memory,
                                                max_inner, gradient_tolerance, omega, repair)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(FitOptions, data, truth, scale, solver, snapshots)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(SweepOptions, data, truth, scale, mode, target,
                                                factors, factor_kind, steps, threads, solver)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(ReproduceOptions, figure, seed, max_seeds, threads)

// Output locations are not serialized, so the run label digest covers only
// what is computed.

nlohmann::json to_json(const SimulateOptions& o) { return nlohmann::json(o); }
nlohmann::json to_json(const SolverOptions& o) { return nlohmann::json(o); }
nlohmann::json to_json(const FitOptions& o) { return nlohmann::json(o); }
nlohmann::json to_json(const SweepOptions& o) { return nlohmann::json(o); }
nlohmann::json to_json(const ReproduceOptions& o) { return nlohmann::json(o); }

SimulateOptions simulate_options_from_json(const nlohmann::json& j) { return j.get<SimulateOptions>(); }
SolverOptions solver_options_from_json(const nlohmann::json& j) { return j.get<SolverOptions>(); }
FitOptions fit_options_from_json(const nlohmann::json& j) { return j.get<FitOptions>(); }
SweepOptions sweep_options_from_json(const nlohmann::json& j) { return j.get<SweepOptions>(); }
ReproduceOptions reproduce_options_from_json(const nlohmann::json& j) { return j.get<ReproduceOptions>(); }

}  // namespace dagscope::cli
