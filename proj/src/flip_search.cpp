#include "dagscope/flip_search.hpp"

#include "dagscope/error.hpp"

namespace dagscope::sim {

std::optional<FlipHit> find_flip_seed(const SemSpec& base_spec, const opt::SolverConfig& solver,
                                      const extract::ThresholdPolicy& policy,
                                      std::size_t max_seeds,
                                      const std::function<void(std::uint64_t)>& on_seed) {
  for (std::uint64_t seed = 0; seed < max_seeds; ++seed) {
    if (on_seed) on_seed(seed);
    SemSpec spec = base_spec;
    spec.seed = seed;
    GroundTruthSem truth = simulate(spec);
    const BinaryDag true_dag = truth.dag();
    if (true_dag.edge_count() == 0) continue;

    const Dataset centered = center_and_scale(truth.dataset, scale::Center{});
    opt::SolveResult centered_fit = opt::fit(centered, solver);
    BinaryDag centered_graph;
    try {
      centered_graph = extract::threshold(centered_fit.weights, policy);
    } catch (const CycleError&) {
      continue;
    }
    const auto centered_metrics = extract::structural_metrics(centered_graph, true_dag);
    if (centered_metrics.shd != 0) continue;

    const Dataset standardized = center_and_scale(truth.dataset, scale::Standardize{});
    opt::SolveResult standardized_fit = opt::fit(standardized, solver);
    BinaryDag standardized_graph;
    try {
      standardized_graph = extract::threshold(standardized_fit.weights, policy);
    } catch (const CycleError&) {
      continue;
    }
    const auto standardized_metrics = extract::structural_metrics(standardized_graph, true_dag);
    if (standardized_metrics.reversed_edges == 0) continue;

    return FlipHit{seed,
                   std::move(truth),
                   std::move(centered_fit),
                   std::move(standardized_fit),
                   std::move(centered_graph),
                   std::move(standardized_graph),
                   centered_metrics,
                   standardized_metrics};
  }
  return std::nullopt;
}

}  // namespace dagscope::sim
