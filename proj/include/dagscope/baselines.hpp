#pragma once

#include "dagscope/dataset.hpp"
#include "dagscope/graph.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dagscope::baselines {

struct VarsortRegression {
  BinaryDag graph;
  WeightedGraph weights;
  /// Nodes by ascending sample variance (ties: lower index first).
  std::vector<std::size_t> variance_order;
  /// (target, predecessor) pairs dropped as linearly dependent.
  std::vector<std::pair<std::size_t, std::size_t>> dropped;
};

/// Order by ascending variance and regress each variable by ordinary least
/// squares on all lower-variance variables, keeping |coef| > omega.
VarsortRegression varsort_regress(const Dataset& data, double omega = 0.3);

/// Variance ordering with ties broken by index.
std::vector<std::size_t> variance_order(const std::vector<double>& variances);

struct Varsortability {
  std::optional<double> value;
  std::string reason;  // set when value is absent
};

/// Fraction of pairs (i, j) joined by a directed path i ~> j with
/// var_i < var_j; ties within 1e-12 count one half. Absent when the DAG has
/// no directed path.
Varsortability varsortability(const BinaryDag& dag, const std::vector<double>& variances);

struct VarsortReport {
  std::vector<std::size_t> variance_order;
  BinaryDag baseline_graph;
  WeightedGraph baseline_weights;
  Varsortability varsortability;
};

/// Baseline plus, when `truth` is given, the varsortability of the data.
VarsortReport varsort_report(const Dataset& data, const BinaryDag* truth, double omega = 0.3);

nlohmann::json to_json(const VarsortReport& report);

}  // namespace dagscope::baselines
