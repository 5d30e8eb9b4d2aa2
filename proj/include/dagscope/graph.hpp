#pragma once

#include "dagscope/matrix.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dagscope {

/// Weighted adjacency of a linear SEM. Cell (i, j) is the influence of node i
/// on node j, so column j lists the parents of j.
struct WeightedGraph {
  DenseMatrix weights;
  std::vector<std::string> names;

  WeightedGraph() = default;
  /// Throws DimensionError unless `weights` is square and names match.
  explicit WeightedGraph(DenseMatrix w, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return static_cast<std::size_t>(weights.rows()); }
};

/// Topological order when `adjacency` is acyclic; nullopt otherwise.
/// Depth-first search, nodes visited in ascending index order.
std::optional<std::vector<std::size_t>> is_dag(const AdjacencyMatrix& adjacency);

/// Some directed cycle of `adjacency`, empty if acyclic.
std::vector<std::size_t> find_cycle(const AdjacencyMatrix& adjacency);

/// Transitive closure: reach(i, j) iff a directed path of length >= 1 goes i -> j.
AdjacencyMatrix reachability(const AdjacencyMatrix& adjacency);

/// A validated acyclic directed graph.
class BinaryDag {
 public:
  BinaryDag() = default;
  /// Throws CycleError if `adjacency` has a cycle (self-loops included).
  explicit BinaryDag(AdjacencyMatrix adjacency);

  /// Empty graph on d nodes.
  static BinaryDag empty(std::size_t d);

  const AdjacencyMatrix& adjacency() const noexcept { return adjacency_; }
  const std::vector<std::size_t>& topological_order() const noexcept { return order_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(adjacency_.rows()); }
  bool has_edge(std::size_t from, std::size_t to) const { return adjacency_(from, to); }
  std::size_t edge_count() const { return static_cast<std::size_t>(adjacency_.count()); }
  std::size_t in_degree(std::size_t node) const;
  std::size_t out_degree(std::size_t node) const;

  friend bool operator==(const BinaryDag& a, const BinaryDag& b) {
    return a.adjacency_.rows() == b.adjacency_.rows() && a.adjacency_ == b.adjacency_;
  }

 private:
  AdjacencyMatrix adjacency_;
  std::vector<std::size_t> order_;
};

nlohmann::json to_json(const WeightedGraph& g);
WeightedGraph weighted_graph_from_json(const nlohmann::json& j);

/// {"names": [...], "edges": [[from, to], ...], "topological_order": [...]}
nlohmann::json to_json(const BinaryDag& g, const std::vector<std::string>& names);
BinaryDag binary_dag_from_json(const nlohmann::json& j);

}  // namespace dagscope
