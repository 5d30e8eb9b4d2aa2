#pragma once

#include "dagscope/graph_extract.hpp"
#include "dagscope/sem_sim.hpp"
#include "dagscope/solver.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

namespace dagscope::sim {

/// An instance whose centered-data fit matches the truth while the
/// standardized-data fit reverses at least one edge.
struct FlipHit {
  std::uint64_t seed = 0;
  GroundTruthSem truth;
  opt::SolveResult centered_fit;
  opt::SolveResult standardized_fit;
  BinaryDag centered_graph;
  BinaryDag standardized_graph;
  extract::GraphMetrics centered_metrics;
  extract::GraphMetrics standardized_metrics;
};

/// Try seeds 0, 1, ..., max_seeds - 1 in order (base_spec.seed is replaced)
/// and return the first flip. Instances whose truth has no edges are skipped.
/// `on_seed` is called before each attempt.
std::optional<FlipHit> find_flip_seed(const SemSpec& base_spec, const opt::SolverConfig& solver,
                                      const extract::ThresholdPolicy& policy,
                                      std::size_t max_seeds,
                                      const std::function<void(std::uint64_t)>& on_seed = {});

}  // namespace dagscope::sim
