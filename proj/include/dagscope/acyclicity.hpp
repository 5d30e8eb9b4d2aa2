#pragma once

#include "dagscope/matrix.hpp"

namespace dagscope::acyclicity {

/// Matrix exponential by scaling and squaring with a diagonal Padé core
/// (degree 3, 5, 7, 9 or 13 chosen from the 1-norm). Throws DimensionError
/// for non-square input.
DenseMatrix matrix_exp(const DenseMatrix& m);

struct AcyclicityResult {
  double value = 0.0;
  DenseMatrix gradient;
};

/// h(W) = trace(exp(W o W)) - d and its gradient exp(W o W)^T o 2W.
///
/// The value is zero exactly when the support of W is acyclic; it is clamped
/// at zero against rounding. Throws DimensionError for non-square input.
AcyclicityResult h_and_grad(const DenseMatrix& w);

/// Value only.
double h_value(const DenseMatrix& w);

}  // namespace dagscope::acyclicity
