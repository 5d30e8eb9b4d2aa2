#pragma once

#include "dagscope/matrix.hpp"

#include <optional>
#include <string>

namespace dagscope::losses {

enum class LossKind { least_squares, golem_ev, golem_nv, weighted_ls };

std::string to_string(LossKind kind);
/// Accepts the CLI spellings: ls, golem-ev, golem-nv, weighted.
LossKind parse_loss_kind(const std::string& text);

struct LossSpec {
  LossKind kind = LossKind::least_squares;
  double lambda = 0.0;
  /// Noise covariance for weighted_ls.
  std::optional<DenseMatrix> sigma;

  void validate() const;
};

/// Smooth score value and gradient, plus the L1 norm of W.
/// The penalized objective is value + lambda * l1_value.
struct LossEval {
  double value = 0.0;
  DenseMatrix gradient;
  double l1_value = 0.0;

  double total(double lambda) const { return value + lambda * l1_value; }
};

/// ||X - XW||_F^2 / (2n).
LossEval least_squares(const DenseMatrix& w, const DenseMatrix& x);

/// (d/2) log ||X - XW||_F^2 - log|det(I - W)|.
/// Throws DomainError when I - W is numerically singular or the residual is 0.
LossEval golem_ev(const DenseMatrix& w, const DenseMatrix& x);

/// (1/2) sum_i log ||(X - XW)_i||^2 - log|det(I - W)|.
/// Throws DomainError naming the column when a residual column vanishes.
///
/// Note: ell_NV <= ell_EV - log d always holds. On residuals with equal
/// column norms the gap is exactly (d/2) log d, which is larger than log d
/// for d > 2.
LossEval golem_nv(const DenseMatrix& w, const DenseMatrix& x);

/// ||(X - XW) Sigma^{-1/2}||_F^2 / (2n) with the symmetric inverse square root.
/// Throws DomainError unless Sigma is symmetric positive definite.
LossEval weighted_ls(const DenseMatrix& w, const DenseMatrix& x, const DenseMatrix& sigma);

/// Same loss given S = Sigma^{-1/2} directly.
LossEval weighted_ls_whitened(const DenseMatrix& w, const DenseMatrix& x, const DenseMatrix& s);

/// Symmetric inverse square root through an eigendecomposition; eigenvalues
/// below 1e-12 are rejected.
DenseMatrix inverse_sqrt(const DenseMatrix& sigma);

/// Dispatch on spec.kind.
LossEval evaluate(const LossSpec& spec, const DenseMatrix& w, const DenseMatrix& x);

/// W = positive - negative with both parts nonnegative.
struct SplitWeights {
  DenseMatrix positive;
  DenseMatrix negative;

  DenseMatrix merge() const { return positive - negative; }
};

/// Sum of |W_ij|.
double l1_norm(const DenseMatrix& w);
SplitWeights split(const DenseMatrix& w);

}  // namespace dagscope::losses
