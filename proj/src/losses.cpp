#include "dagscope/losses.hpp"

#include "dagscope/error.hpp"

#include <cmath>

namespace dagscope::losses {

namespace {

constexpr double kMinReciprocalCondition = 1e-14;
constexpr double kMinEigenvalue = 1e-12;

void check_shapes(const DenseMatrix& w, const DenseMatrix& x) {
  if (w.rows() != w.cols()) throw DimensionError("W must be square");
  if (x.cols() != w.rows()) {
    throw DimensionError("X has " + std::to_string(x.cols()) + " columns but W is " +
                         std::to_string(w.rows()) + "x" + std::to_string(w.cols()));
  }
}

struct LogDet {
  double value;            // log|det(I - W)|
  DenseMatrix inverse_t;   // (I - W)^{-T}
};

LogDet log_abs_det_identity_minus(const DenseMatrix& w) {
  const auto d = w.rows();
  const DenseMatrix m = DenseMatrix::Identity(d, d) - w;
  Eigen::PartialPivLU<DenseMatrix> lu(m);
  if (!(lu.rcond() >= kMinReciprocalCondition)) throw DomainError("I - W is numerically singular");
  const DenseMatrix& packed = lu.matrixLU();
  double logdet = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) logdet += std::log(std::abs(packed(i, i)));
  return {logdet, lu.inverse().transpose()};
}

}  // namespace

std::string to_string(LossKind kind) {
  switch (kind) {
    case LossKind::least_squares: return "ls";
    case LossKind::golem_ev: return "golem-ev";
    case LossKind::golem_nv: return "golem-nv";
    case LossKind::weighted_ls: return "weighted";
  }
  return "?";
}

LossKind parse_loss_kind(const std::string& text) {
  if (text == "ls" || text == "least_squares") return LossKind::least_squares;
  if (text == "golem-ev" || text == "golem_ev") return LossKind::golem_ev;
  if (text == "golem-nv" || text == "golem_nv") return LossKind::golem_nv;
  if (text == "weighted" || text == "weighted_ls") return LossKind::weighted_ls;
  throw SpecError("unknown loss '" + text + "' (expected ls, golem-ev, golem-nv or weighted)");
}

void LossSpec::validate() const {
  if (!(lambda >= 0.0)) throw SpecError("lambda must be >= 0");
  if (kind == LossKind::weighted_ls) {
    if (!sigma) throw SpecError("weighted loss requires a noise covariance");
    inverse_sqrt(*sigma);  // throws if not SPD
  }
}

double l1_norm(const DenseMatrix& w) { return w.cwiseAbs().sum(); }

SplitWeights split(const DenseMatrix& w) {
  return {w.cwiseMax(0.0), (-w).cwiseMax(0.0)};
}

LossEval least_squares(const DenseMatrix& w, const DenseMatrix& x) {
  check_shapes(w, x);
  const double n = static_cast<double>(x.rows());
  const DenseMatrix r = x - x * w;
  return {r.squaredNorm() / (2.0 * n), -(x.transpose() * r) / n, l1_norm(w)};
}

LossEval golem_ev(const DenseMatrix& w, const DenseMatrix& x) {
  check_shapes(w, x);
  const double d = static_cast<double>(w.rows());
  const DenseMatrix r = x - x * w;
  const double rss = r.squaredNorm();
  if (!(rss > 0.0)) throw DomainError("residual is identically zero");
  const LogDet ld = log_abs_det_identity_minus(w);
  LossEval e;
  e.value = 0.5 * d * std::log(rss) - ld.value;
  e.gradient = -(d / rss) * (x.transpose() * r) + ld.inverse_t;
  e.l1_value = l1_norm(w);
  return e;
}

LossEval golem_nv(const DenseMatrix& w, const DenseMatrix& x) {
  check_shapes(w, x);
  const DenseMatrix r = x - x * w;
  const Eigen::RowVectorXd col_rss = r.colwise().squaredNorm();
  for (Eigen::Index j = 0; j < col_rss.size(); ++j) {
    if (!(col_rss(j) > 0.0)) {
      throw DomainError("residual column " + std::to_string(j) + " is identically zero",
                        static_cast<std::size_t>(j));
    }
  }
  const LogDet ld = log_abs_det_identity_minus(w);
  LossEval e;
  e.value = 0.5 * col_rss.array().log().sum() - ld.value;
  DenseMatrix xtr = x.transpose() * r;
  for (Eigen::Index j = 0; j < xtr.cols(); ++j) xtr.col(j) /= col_rss(j);
  e.gradient = -xtr + ld.inverse_t;
  e.l1_value = l1_norm(w);
  return e;
}

DenseMatrix inverse_sqrt(const DenseMatrix& sigma) {
  if (sigma.rows() != sigma.cols()) throw DimensionError("Sigma must be square");
  if (!sigma.allFinite()) throw DomainError("Sigma has non-finite entries");
  const double asym = (sigma - sigma.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(1.0, sigma.cwiseAbs().maxCoeff())) {
    throw DomainError("Sigma is not symmetric");
  }
  const Eigen::MatrixXd sym = 0.5 * (sigma + sigma.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  if (eig.info() != Eigen::Success) throw DomainError("eigendecomposition of Sigma failed");
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (!(lambda(i) >= kMinEigenvalue)) throw DomainError("Sigma is not positive definite");
  }
  const Eigen::MatrixXd& v = eig.eigenvectors();
  const Eigen::MatrixXd s = v * lambda.cwiseSqrt().cwiseInverse().asDiagonal() * v.transpose();
  return s;
}

LossEval weighted_ls(const DenseMatrix& w, const DenseMatrix& x, const DenseMatrix& sigma) {
  check_shapes(w, x);
  if (sigma.rows() != w.rows()) throw DimensionError("Sigma must match the size of W");
  return weighted_ls_whitened(w, x, inverse_sqrt(sigma));
}

LossEval weighted_ls_whitened(const DenseMatrix& w, const DenseMatrix& x, const DenseMatrix& s) {
  check_shapes(w, x);
  const double n = static_cast<double>(x.rows());
  const DenseMatrix r = x - x * w;
  const DenseMatrix rs = r * s;
  // d/dW ||(X - XW) S||^2 / 2n = -X^T (X - XW) S S^T / n.
  return {rs.squaredNorm() / (2.0 * n), -(x.transpose() * (rs * s.transpose())) / n, l1_norm(w)};
}

LossEval evaluate(const LossSpec& spec, const DenseMatrix& w, const DenseMatrix& x) {
  switch (spec.kind) {
    case LossKind::least_squares: return least_squares(w, x);
    case LossKind::golem_ev: return golem_ev(w, x);
    case LossKind::golem_nv: return golem_nv(w, x);
    case LossKind::weighted_ls:
      if (!spec.sigma) throw SpecError("weighted loss requires a noise covariance");
      return weighted_ls(w, x, *spec.sigma);
  }
  throw SpecError("unknown loss kind");
}

}  // namespace dagscope::losses
