#include "dagscope/graph.hpp"

#include "dagscope/error.hpp"

#include <algorithm>

namespace dagscope {

namespace {

enum class Mark : unsigned char { white, grey, black };

struct DfsOutcome {
  std::vector<std::size_t> postorder;
  std::vector<std::size_t> cycle;  // non-empty when a back edge was found
};

DfsOutcome depth_first(const AdjacencyMatrix& adj) {
  const auto d = static_cast<std::size_t>(adj.rows());
  std::vector<Mark> mark(d, Mark::white);
  std::vector<std::size_t> parent(d, d);
  DfsOutcome out;
  out.postorder.reserve(d);

  // Explicit stack of (node, next child to examine).
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < d; ++root) {
    if (mark[root] != Mark::white) continue;
    mark[root] = Mark::grey;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next == d) {
        mark[u] = Mark::black;
        out.postorder.push_back(u);
        stack.pop_back();
        continue;
      }
      const std::size_t v = next++;
      if (!adj(u, v)) continue;
      if (mark[v] == Mark::grey) {
        // Back edge u -> v closes the cycle v -> ... -> u.
        std::vector<std::size_t> cycle{u};
        for (std::size_t w = u; w != v;) {
          w = parent[w];
          cycle.push_back(w);
        }
        std::reverse(cycle.begin(), cycle.end());
        out.cycle = std::move(cycle);
        return out;
      }
      if (mark[v] == Mark::white) {
        mark[v] = Mark::grey;
        parent[v] = u;
        stack.emplace_back(v, 0);
      }
    }
  }
  return out;
}

void require_square(const AdjacencyMatrix& adj) {
  if (adj.rows() != adj.cols()) throw DimensionError("adjacency matrix must be square");
}

}  // namespace

WeightedGraph::WeightedGraph(DenseMatrix w, std::vector<std::string> labels)
    : weights(std::move(w)), names(std::move(labels)) {
  if (weights.rows() != weights.cols()) throw DimensionError("weight matrix must be square");
  if (names.empty()) names = default_names(static_cast<std::size_t>(weights.rows()));
  if (names.size() != static_cast<std::size_t>(weights.rows())) {
    throw DimensionError("weight matrix and name list disagree in size");
  }
}

std::optional<std::vector<std::size_t>> is_dag(const AdjacencyMatrix& adjacency) {
  require_square(adjacency);
  DfsOutcome out = depth_first(adjacency);
  if (!out.cycle.empty()) return std::nullopt;
  std::reverse(out.postorder.begin(), out.postorder.end());
  return out.postorder;
}

std::vector<std::size_t> find_cycle(const AdjacencyMatrix& adjacency) {
  require_square(adjacency);
  return depth_first(adjacency).cycle;
}

AdjacencyMatrix reachability(const AdjacencyMatrix& adjacency) {
  require_square(adjacency);
  AdjacencyMatrix reach = adjacency;
  const Eigen::Index d = reach.rows();
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index i = 0; i < d; ++i) {
      if (!reach(i, k)) continue;
      for (Eigen::Index j = 0; j < d; ++j) {
        if (reach(k, j)) reach(i, j) = true;
      }
    }
  }
  return reach;
}

BinaryDag::BinaryDag(AdjacencyMatrix adjacency) : adjacency_(std::move(adjacency)) {
  require_square(adjacency_);
  DfsOutcome out = depth_first(adjacency_);
  if (!out.cycle.empty()) throw CycleError("graph contains a directed cycle", std::move(out.cycle));
  std::reverse(out.postorder.begin(), out.postorder.end());
  order_ = std::move(out.postorder);
}

BinaryDag BinaryDag::empty(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return BinaryDag(AdjacencyMatrix::Constant(n, n, false));
}

std::size_t BinaryDag::in_degree(std::size_t node) const {
  return static_cast<std::size_t>(adjacency_.col(static_cast<Eigen::Index>(node)).count());
}

std::size_t BinaryDag::out_degree(std::size_t node) const {
  return static_cast<std::size_t>(adjacency_.row(static_cast<Eigen::Index>(node)).count());
}

nlohmann::json to_json(const WeightedGraph& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < g.weights.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < g.weights.cols(); ++j) row.push_back(g.weights(i, j));
    rows.push_back(std::move(row));
  }
  return {{"names", g.names}, {"weights", std::move(rows)}};
}

WeightedGraph weighted_graph_from_json(const nlohmann::json& j) {
  const auto& rows = j.at("weights");
  const auto d = static_cast<Eigen::Index>(rows.size());
  DenseMatrix w(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    const auto& row = rows.at(static_cast<std::size_t>(r));
    if (static_cast<Eigen::Index>(row.size()) != d) throw DimensionError("weights must be square");
    for (Eigen::Index c = 0; c < d; ++c) w(r, c) = row.at(static_cast<std::size_t>(c)).get<double>();
  }
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return WeightedGraph(std::move(w), std::move(names));
}

nlohmann::json to_json(const BinaryDag& g, const std::vector<std::string>& names) {
  nlohmann::json edges = nlohmann::json::array();
  const auto& adj = g.adjacency();
  for (Eigen::Index i = 0; i < adj.rows(); ++i) {
    for (Eigen::Index j = 0; j < adj.cols(); ++j) {
      if (adj(i, j)) edges.push_back({i, j});
    }
  }
  return {{"names", names.empty() ? default_names(g.size()) : names},
          {"edges", std::move(edges)},
          {"topological_order", g.topological_order()}};
}

BinaryDag binary_dag_from_json(const nlohmann::json& j) {
  const auto d = static_cast<Eigen::Index>(j.at("names").size());
  AdjacencyMatrix adj = AdjacencyMatrix::Constant(d, d, false);
  for (const auto& e : j.at("edges")) {
    const auto from = e.at(0).get<Eigen::Index>();
    const auto to = e.at(1).get<Eigen::Index>();
    if (from < 0 || to < 0 || from >= d || to >= d) throw DimensionError("edge index out of range");
    adj(from, to) = true;
  }
  return BinaryDag(std::move(adj));
}

}  // namespace dagscope
