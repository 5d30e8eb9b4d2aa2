#pragma once

#include "dagscope/dataset.hpp"
#include "dagscope/graph.hpp"
#include "dagscope/matrix.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace dagscope::sim {

enum class NoiseKind { uniform, gaussian };

/// Per-node noise. `scale` is the half-width for uniform noise and the
/// standard deviation for gaussian noise; a single entry is broadcast.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::uniform;
  std::vector<double> scale{1.0};

  double scale_of(std::size_t node) const { return scale.size() == 1 ? scale[0] : scale[node]; }
  /// Variance of the unscaled noise of `node`.
  double variance_of(std::size_t node) const;
};

/// Linear SEM simulation settings.
///
/// Random DAGs draw a uniform node permutation and include each forward pair
/// independently with probability edges / (d(d-1)/2). With `exact_edges` set,
/// exactly `edges` forward pairs are chosen uniformly instead.
struct SemSpec {
  std::size_t nodes = 4;
  double edges = 4.0;
  bool exact_edges = false;
  std::optional<BinaryDag> dag;
  std::optional<DenseMatrix> fixed_weights;  // used with `dag`; cells off the DAG ignored
  double weight_low = 0.5;
  double weight_high = 2.0;
  NoiseSpec noise;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  /// Post-scale the centered columns to these population standard deviations.
  std::optional<std::vector<double>> target_stds;

  /// Throws SpecError on invalid values.
  void validate() const;
};

/// A simulated dataset together with the process that generated it.
struct GroundTruthSem {
  SemSpec spec;
  WeightedGraph true_weights;
  Dataset dataset;
  /// Centered (and post-scaled) noise realisation: X = X W + noise.
  DenseMatrix noise;
  /// Population noise variance per node after post-scaling.
  std::vector<double> noise_variances;
  /// Set when the data admit no preferred direction (toy pair).
  bool symmetric = false;

  BinaryDag dag() const;
  /// Noise covariance in the coordinates of `dataset` after per-column
  /// multiplication by `column_factors` (empty = identity).
  DenseMatrix noise_covariance(const std::vector<double>& column_factors = {}) const;
};

/// Simulate a linear SEM. The returned dataset is centered.
///
/// Random streams: stream 0 drives the structure and weights, stream 1 + j the
/// noise of column j, so adding nodes leaves earlier noise columns unchanged.
GroundTruthSem simulate(const SemSpec& spec);

/// Two perfectly collinear variables: X0 is centered noise, X1 = gamma * X0.
struct ToyPairSpec {
  double gamma = 2.0;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  NoiseKind noise = NoiseKind::uniform;
};

/// Ground truth is recorded as X0 -> X1 with weight gamma, flagged symmetric.
GroundTruthSem simulate_toy_pair(const ToyPairSpec& spec);

/// Four nodes, four edges, uniform noise, n = 1000, columns post-scaled to
/// the standard deviations (0.86, 1.56, 1.07, 0.76).
SemSpec fig1_like_spec(std::uint64_t seed);

nlohmann::json to_json(const SemSpec& spec);
SemSpec sem_spec_from_json(const nlohmann::json& j);
/// Truth file: {"spec", "names", "weights", "seed", "noise_variances", "symmetric"}.
nlohmann::json to_json(const GroundTruthSem& truth);

/// What a truth file carries: enough to score a fit.
struct TruthRecord {
  WeightedGraph weights;
  std::uint64_t seed = 0;
  std::vector<double> noise_variances;
  bool symmetric = false;

  BinaryDag dag() const;
};
TruthRecord truth_record_from_json(const nlohmann::json& j);

}  // namespace dagscope::sim
