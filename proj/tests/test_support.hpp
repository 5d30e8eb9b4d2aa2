#pragma once

#include "dagscope/matrix.hpp"
#include "dagscope/rng.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <string>

namespace testing {

using dagscope::DenseMatrix;

inline DenseMatrix random_matrix(dagscope::Rng& rng, Eigen::Index rows, Eigen::Index cols, double lo,
                                 double hi) {
  DenseMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.uniform(lo, hi);
  return m;
}

// Central differences, one cell at a time.
inline DenseMatrix fd_gradient(const std::function<double(const DenseMatrix&)>& f, const DenseMatrix& w,
                               double step = 1e-6) {
  DenseMatrix g(w.rows(), w.cols());
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      DenseMatrix plus = w;
      DenseMatrix minus = w;
      plus(i, j) += step;
      minus(i, j) -= step;
      g(i, j) = (f(plus) - f(minus)) / (2 * step);
    }
  }
  return g;
}

inline double relative_error(const DenseMatrix& a, const DenseMatrix& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("dagscope-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace testing
