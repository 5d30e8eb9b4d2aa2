#include "dagscope/matrix.hpp"

namespace dagscope {

std::vector<std::string> default_names(std::size_t d) {
  std::vector<std::string> names;
  names.reserve(d);
  for (std::size_t j = 0; j < d; ++j) names.push_back("X" + std::to_string(j));
  return names;
}

AdjacencyMatrix support(const DenseMatrix& weights, double cutoff) {
  AdjacencyMatrix adj = (weights.array().abs() > cutoff).matrix();
  const Eigen::Index d = std::min(adj.rows(), adj.cols());
  for (Eigen::Index i = 0; i < d; ++i) adj(i, i) = false;
  return adj;
}

bool all_finite(const DenseMatrix& m) { return m.allFinite(); }

}  // namespace dagscope
