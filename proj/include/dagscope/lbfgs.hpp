#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <string>

namespace dagscope::opt {

struct InnerConfig {
  std::size_t memory = 10;
  std::size_t max_iterations = 500;
  /// Stop when the infinity norm of the projected gradient falls below this.
  double gradient_tolerance = 1e-7;
  /// Stop when the relative decrease (f_k - f_{k+1}) / max(|f_k|, |f_{k+1}|, 1)
  /// falls below this.
  double function_tolerance = 2.220446049250313e-9;
  std::size_t max_line_search_steps = 40;
};

enum class InnerStatus { gradient_converged, function_converged, max_iterations, line_search_failed };

std::string to_string(InnerStatus status);

struct Bounds {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  static Bounds unbounded(Eigen::Index n);
};

/// Objective: returns f(x) and writes the gradient into `grad`. A non-finite
/// return value marks x as infeasible; the line search then backtracks.
using Objective = std::function<double(const Eigen::VectorXd& x, Eigen::VectorXd& grad)>;

struct InnerResult {
  Eigen::VectorXd x;
  double value = 0.0;
  double projected_gradient_norm = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  InnerStatus status = InnerStatus::max_iterations;
};

/// Limited-memory BFGS with gradient projection onto box constraints.
///
/// Variables sitting on a bound with the gradient pushing outward are frozen
/// for the iteration; the quasi-Newton direction is computed on the rest and
/// the step x <- P(x + t d) is chosen by projected Armijo backtracking.
/// Cells with lower == upper stay fixed. The start point is projected first.
///
/// On line-search failure the best point found so far is returned with
/// status line_search_failed.
InnerResult minimize_box(const Objective& objective, const Eigen::VectorXd& start,
                         const Bounds& bounds, const InnerConfig& config);

}  // namespace dagscope::opt
