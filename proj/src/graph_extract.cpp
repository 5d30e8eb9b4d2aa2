#include "dagscope/graph_extract.hpp"

#include "dagscope/error.hpp"

#include <cmath>
#include <limits>

namespace dagscope::extract {

BinaryDag threshold(const WeightedGraph& w, const ThresholdPolicy& policy) {
  if (!(policy.omega > 0.0)) throw SpecError("threshold omega must be > 0");
  AdjacencyMatrix adj = support(w.weights, policy.omega);
  const Eigen::Index d = adj.rows();

  while (true) {
    std::vector<std::size_t> cycle = find_cycle(adj);
    if (cycle.empty()) break;
    if (policy.post_repair == Repair::none) {
      throw CycleError("thresholded graph is cyclic", std::move(cycle));
    }
    // Edge u -> v lies on a cycle iff v reaches u.
    const AdjacencyMatrix reach = reachability(adj);
    Eigen::Index best_i = -1;
    Eigen::Index best_j = -1;
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        if (!adj(i, j) || !reach(j, i)) continue;
        const double mag = std::abs(w.weights(i, j));
        if (mag < best) {  // strict: the first (row, col) wins ties
          best = mag;
          best_i = i;
          best_j = j;
        }
      }
    }
    adj(best_i, best_j) = false;
  }
  return BinaryDag(std::move(adj));
}

GraphMetrics structural_metrics(const BinaryDag& estimate, const BinaryDag& truth) {
  if (estimate.size() != truth.size()) {
    throw DimensionError("graphs have different node counts (" + std::to_string(estimate.size()) +
                         " vs " + std::to_string(truth.size()) + ")");
  }
  const std::size_t d = estimate.size();
  GraphMetrics m;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const bool e_ij = estimate.has_edge(i, j);
      const bool e_ji = estimate.has_edge(j, i);
      const bool t_ij = truth.has_edge(i, j);
      const bool t_ji = truth.has_edge(j, i);
      const bool e_any = e_ij || e_ji;
      const bool t_any = t_ij || t_ji;
      if (e_any && t_any) {
        if (e_ij != t_ij) ++m.reversed_edges;
      } else if (t_any) {
        ++m.missing_edges;
      } else if (e_any) {
        ++m.extra_edges;
      }
    }
  }
  m.shd = m.reversed_edges + m.missing_edges + m.extra_edges;
  m.inbound.resize(d);
  m.outbound.resize(d);
  for (std::size_t v = 0; v < d; ++v) {
    m.inbound[v] = estimate.in_degree(v);
    m.outbound[v] = estimate.out_degree(v);
  }
  return m;
}

std::string to_string(PairOrientation o) {
  switch (o) {
    case PairOrientation::i_to_j: return "i_to_j";
    case PairOrientation::j_to_i: return "j_to_i";
    case PairOrientation::none: return "none";
    case PairOrientation::both: return "both";
  }
  return "?";
}

PairOrientation orientation_of_pair(const AdjacencyMatrix& adjacency, std::size_t i, std::size_t j) {
  if (i == j) throw SpecError("orientation_of_pair needs two distinct nodes");
  const auto n = static_cast<std::size_t>(adjacency.rows());
  if (i >= n || j >= n) throw DimensionError("node index out of range");
  const bool ij = adjacency(i, j);
  const bool ji = adjacency(j, i);
  if (ij && ji) return PairOrientation::both;
  if (ij) return PairOrientation::i_to_j;
  if (ji) return PairOrientation::j_to_i;
  return PairOrientation::none;
}

PairOrientation orientation_of_pair(const BinaryDag& estimate, std::size_t i, std::size_t j) {
  return orientation_of_pair(estimate.adjacency(), i, j);
}

Eigen::MatrixXi sign_pattern(const WeightedGraph& w, double omega) {
  const auto d = w.weights.rows();
  Eigen::MatrixXi s = Eigen::MatrixXi::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const double v = w.weights(i, j);
      if (i != j && std::abs(v) > omega) s(i, j) = v > 0.0 ? 1 : -1;
    }
  }
  return s;
}

nlohmann::json to_json(const GraphMetrics& m) {
  return {{"shd", m.shd},
          {"reversed_edges", m.reversed_edges},
          {"missing_edges", m.missing_edges},
          {"extra_edges", m.extra_edges},
          {"inbound", m.inbound},
          {"outbound", m.outbound}};
}

}  // namespace dagscope::extract
