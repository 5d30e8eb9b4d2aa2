#pragma once

#include "dagscope/graph.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace dagscope::extract {

enum class Repair { none, greedy_min_weight_removal };

struct ThresholdPolicy {
  double omega = 0.3;
  Repair post_repair = Repair::none;
};

/// Keep edges with |w| > omega (diagonal ignored).
///
/// A cyclic result is repaired, when requested, by deleting the smallest-|w|
/// edge that lies on some cycle (ties: lowest (row, col)) until acyclic.
/// Without repair a cyclic result throws CycleError carrying the cycle.
BinaryDag threshold(const WeightedGraph& w, const ThresholdPolicy& policy);

struct GraphMetrics {
  std::size_t shd = 0;
  std::size_t reversed_edges = 0;
  std::size_t missing_edges = 0;
  std::size_t extra_edges = 0;
  std::vector<std::size_t> inbound;  // per node, of the estimate
  std::vector<std::size_t> outbound;
};

/// Structural Hamming distance with a reversed edge counted once.
/// Throws DimensionError on a node-count mismatch.
GraphMetrics structural_metrics(const BinaryDag& estimate, const BinaryDag& truth);

enum class PairOrientation { i_to_j, j_to_i, none, both };
std::string to_string(PairOrientation o);

/// Orientation of the pair (i, j) in a thresholded adjacency. Requires i != j.
PairOrientation orientation_of_pair(const AdjacencyMatrix& adjacency, std::size_t i, std::size_t j);
PairOrientation orientation_of_pair(const BinaryDag& estimate, std::size_t i, std::size_t j);

/// Pattern of signs of the entries with |w| > omega: +1, -1 or 0 per cell.
Eigen::MatrixXi sign_pattern(const WeightedGraph& w, double omega);

nlohmann::json to_json(const GraphMetrics& m);

}  // namespace dagscope::extract
