#pragma once

#include "dagscope/dataset.hpp"
#include "dagscope/graph.hpp"
#include "dagscope/lbfgs.hpp"
#include "dagscope/losses.hpp"
#include "dagscope/matrix.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace dagscope::opt {

/// Augmented Lagrangian schedule and inner-solver settings. Defaults follow
/// the public NOTEARS reference code.
struct SolverConfig {
  losses::LossSpec loss;
  double rho_init = 1.0;
  double rho_max = 1e16;
  double rho_multiplier = 10.0;
  double alpha_init = 0.0;
  double h_tolerance = 1e-8;
  double progress_ratio = 0.25;
  std::size_t max_outer = 100;
  InnerConfig inner;
  /// Start point; zeros when absent.
  std::optional<DenseMatrix> w_init;
  /// Echoed into results. The fit itself draws no random numbers.
  std::uint64_t seed = 0;
  /// Keep a copy of W in every trace step.
  bool keep_snapshots = true;

  void validate() const;
};

/// One inner solve of the penalized subproblem.
struct TraceStep {
  std::size_t step = 0;
  double ell = 0.0;    // smooth loss at the inner solution
  double h = 0.0;      // acyclicity value
  double total = 0.0;  // loss + lambda |W|_1 + rho/2 h^2 + alpha h
  double alpha = 0.0;  // multiplier used in this solve
  double rho = 0.0;    // penalty used in this solve
  bool accepted = false;
  std::size_t inner_iterations = 0;
  InnerStatus inner_status = InnerStatus::max_iterations;
  DenseMatrix weights;  // empty unless snapshots are kept
};

using SolveTrace = std::vector<TraceStep>;

enum class Termination { converged, rho_exhausted, max_outer };
std::string to_string(Termination t);

struct SolveResult {
  WeightedGraph weights;
  SolveTrace trace;
  Termination termination = Termination::max_outer;
  double final_h = 0.0;
  double final_ell = 0.0;
  std::size_t line_search_failures = 0;
  std::vector<std::string> warnings;
  SolverConfig config;
};

/// Outer-loop bookkeeping between inner solves.
struct OuterState {
  double alpha = 0.0;
  double rho = 1.0;
  /// h of the last accepted iterate; +inf before the first.
  double h_prev = std::numeric_limits<double>::infinity();
  std::size_t outer_iterations = 0;
};

enum class OuterAction {
  resolve,        // h did not shrink enough: rho was raised, solve again from the last accepted point
  accept,         // iterate accepted, alpha updated, continue
  converged,      // accepted and h <= h_tolerance
  rho_exhausted,  // accepted and rho >= rho_max
  max_outer,      // accepted and the outer budget is spent
};

struct OuterDecision {
  OuterState state;
  OuterAction action = OuterAction::accept;
};

/// Decide what to do after an inner solve that produced h_new.
///
/// If h_new > progress_ratio * h_prev, rho is multiplied and (while rho <
/// rho_max) the subproblem is solved again. Otherwise, or once rho reaches
/// rho_max, the iterate is accepted and alpha += rho * h_new.
OuterDecision outer_update(const OuterState& state, double h_new, const SolverConfig& config);

/// Minimize loss + lambda |W|_1 subject to h(W) = 0 by the augmented
/// Lagrangian method. The L1 term is handled by splitting W into
/// nonnegative parts with the diagonal pinned to zero.
///
/// Throws SolverError if the loss is NaN at an accepted point.
SolveResult fit(const Dataset& data, const SolverConfig& config);
SolveResult fit(const DenseMatrix& x, const std::vector<std::string>& names,
                const SolverConfig& config);

nlohmann::json to_json(const SolverConfig& config);
SolverConfig solver_config_from_json(const nlohmann::json& j);
/// Weights, termination, final values and the trace without snapshots.
nlohmann::json to_json(const SolveResult& result);

/// Trace CSV: step,ell,h,total,alpha,rho,accepted,inner_iterations,inner_status.
std::string trace_csv(const SolveTrace& trace);

}  // namespace dagscope::opt
