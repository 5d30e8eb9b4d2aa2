#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

namespace dagscope {

/// Dense row-major matrix of doubles. Holds data matrices (n x d) and
/// weight matrices (d x d).
using DenseMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Boolean adjacency; cell (i, j) set means edge i -> j.
using AdjacencyMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Default column labels X0..X{d-1}.
std::vector<std::string> default_names(std::size_t d);

/// Off-diagonal support |W_ij| > cutoff. The diagonal is always cleared.
AdjacencyMatrix support(const DenseMatrix& weights, double cutoff = 0.0);

/// True when every entry is finite.
bool all_finite(const DenseMatrix& m);

}  // namespace dagscope
