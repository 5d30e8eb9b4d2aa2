#include "dagscope/baselines.hpp"

#include "dagscope/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dagscope::baselines {

namespace {
constexpr double kTieTolerance = 1e-12;
}

std::vector<std::size_t> variance_order(const std::vector<double>& variances) {
  std::vector<std::size_t> order(variances.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return variances[a] < variances[b]; });
  return order;
}

VarsortRegression varsort_regress(const Dataset& data, double omega) {
  const std::size_t d = data.cols();
  if (d < 2) throw SpecError("varsort_regress needs at least 2 variables");
  if (!(omega > 0.0)) throw SpecError("omega must be > 0");

  std::vector<double> variances(d);
  for (std::size_t j = 0; j < d; ++j) variances[j] = data.variance(j);

  VarsortRegression out;
  out.variance_order = variance_order(variances);

  const DenseMatrix& x = data.samples();
  const auto dd = static_cast<Eigen::Index>(d);
  DenseMatrix w = DenseMatrix::Zero(dd, dd);
  AdjacencyMatrix adj = AdjacencyMatrix::Constant(dd, dd, false);

  for (std::size_t k = 1; k < d; ++k) {
    const auto target = static_cast<Eigen::Index>(out.variance_order[k]);
    Eigen::MatrixXd predictors(x.rows(), static_cast<Eigen::Index>(k));
    for (std::size_t p = 0; p < k; ++p) {
      predictors.col(static_cast<Eigen::Index>(p)) = x.col(static_cast<Eigen::Index>(out.variance_order[p]));
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(predictors);
    const Eigen::VectorXd coef = qr.solve(Eigen::VectorXd(x.col(target)));
    // Columns past the numerical rank are dependent; the solve sets them to 0.
    const Eigen::Index rank = qr.rank();
    const auto& perm = qr.colsPermutation().indices();
    for (Eigen::Index r = rank; r < static_cast<Eigen::Index>(k); ++r) {
      out.dropped.emplace_back(out.variance_order[k], out.variance_order[static_cast<std::size_t>(perm(r))]);
    }
    for (std::size_t p = 0; p < k; ++p) {
      const auto source = static_cast<Eigen::Index>(out.variance_order[p]);
      const double c = coef(static_cast<Eigen::Index>(p));
      w(source, target) = c;
      if (std::abs(c) > omega) adj(source, target) = true;
    }
  }
  out.weights = WeightedGraph(std::move(w), data.names());
  out.graph = BinaryDag(std::move(adj));
  return out;
}

Varsortability varsortability(const BinaryDag& dag, const std::vector<double>& variances) {
  if (variances.size() != dag.size()) throw DimensionError("one variance per node required");
  const AdjacencyMatrix reach = reachability(dag.adjacency());
  double score = 0.0;
  std::size_t pairs = 0;
  for (Eigen::Index i = 0; i < reach.rows(); ++i) {
    for (Eigen::Index j = 0; j < reach.cols(); ++j) {
      if (!reach(i, j)) continue;
      ++pairs;
      const double vi = variances[static_cast<std::size_t>(i)];
      const double vj = variances[static_cast<std::size_t>(j)];
      if (std::abs(vi - vj) <= kTieTolerance) {
        score += 0.5;
      } else if (vi < vj) {
        score += 1.0;
      }
    }
  }
  if (pairs == 0) return {std::nullopt, "no directed paths"};
  return {score / static_cast<double>(pairs), {}};
}

VarsortReport varsort_report(const Dataset& data, const BinaryDag* truth, double omega) {
  VarsortRegression reg = varsort_regress(data, omega);
  VarsortReport report{std::move(reg.variance_order), std::move(reg.graph), std::move(reg.weights), {}};
  if (truth) {
    std::vector<double> variances(data.cols());
    for (std::size_t j = 0; j < data.cols(); ++j) variances[j] = data.variance(j);
    report.varsortability = varsortability(*truth, variances);
  } else {
    report.varsortability = {std::nullopt, "no ground truth"};
  }
  return report;
}

nlohmann::json to_json(const VarsortReport& r) {
  nlohmann::json j{{"variance_order", r.variance_order},
                   {"baseline_graph", to_json(r.baseline_graph, r.baseline_weights.names)},
                   {"baseline_weights", to_json(r.baseline_weights)}};
  if (r.varsortability.value) {
    j["varsortability"] = *r.varsortability.value;
  } else {
    j["varsortability"] = nullptr;
    j["varsortability_reason"] = r.varsortability.reason;
  }
  return j;
}

}  // namespace dagscope::baselines
