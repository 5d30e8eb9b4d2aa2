#include "dagscope/solver.hpp"

#include "dagscope/acyclicity.hpp"
#include "dagscope/csv.hpp"
#include "dagscope/error.hpp"

#include <cmath>
#include <sstream>

namespace dagscope::opt {

namespace {

nlohmann::json matrix_json(const DenseMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

DenseMatrix matrix_from_json(const nlohmann::json& rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.at(0).size());
  DenseMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(rows.at(i).size()) != c) throw DimensionError("ragged matrix in JSON");
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = rows.at(i).at(j).get<double>();
  }
  return m;
}

// Packs W into [W+ ; W-], both row-major.
Eigen::VectorXd pack(const DenseMatrix& w) {
  const auto parts = losses::split(w);
  const Eigen::Index cells = w.size();
  Eigen::VectorXd v(2 * cells);
  v.head(cells) = Eigen::Map<const Eigen::VectorXd>(parts.positive.data(), cells);
  v.tail(cells) = Eigen::Map<const Eigen::VectorXd>(parts.negative.data(), cells);
  return v;
}

DenseMatrix unpack(const Eigen::VectorXd& v, Eigen::Index d) {
  const Eigen::Index cells = d * d;
  DenseMatrix w(d, d);
  Eigen::Map<Eigen::VectorXd>(w.data(), cells) = v.head(cells) - v.tail(cells);
  return w;
}

Bounds split_bounds(Eigen::Index d) {
  const Eigen::Index cells = d * d;
  Bounds b{Eigen::VectorXd::Zero(2 * cells),
           Eigen::VectorXd::Constant(2 * cells, std::numeric_limits<double>::infinity())};
  for (Eigen::Index i = 0; i < d; ++i) {
    b.upper(i * d + i) = 0.0;
    b.upper(cells + i * d + i) = 0.0;
  }
  return b;
}

std::string diagnostic_dump(const DenseMatrix& w, double alpha, double rho, const std::string& what) {
  nlohmann::json j{{"error", what}, {"weights", matrix_json(w)}, {"alpha", alpha}, {"rho", rho}};
  return j.dump(2);
}

}  // namespace

std::string to_string(Termination t) {
  switch (t) {
    case Termination::converged: return "converged";
    case Termination::rho_exhausted: return "rho_exhausted";
    case Termination::max_outer: return "max_outer";
  }
  return "?";
}

void SolverConfig::validate() const {
  loss.validate();
  if (!(rho_init > 0.0)) throw SpecError("rho_init must be > 0");
  if (!(rho_multiplier > 1.0)) throw SpecError("rho_multiplier must be > 1");
  if (!(rho_max > rho_init)) throw SpecError("rho_max must exceed rho_init");
  if (!(progress_ratio > 0.0 && progress_ratio < 1.0)) throw SpecError("progress_ratio must be in (0, 1)");
  if (!(h_tolerance > 0.0)) throw SpecError("h_tolerance must be > 0");
  if (!(alpha_init >= 0.0)) throw SpecError("alpha_init must be >= 0");
  if (inner.max_iterations == 0) throw SpecError("inner max_iterations must be > 0");
}

OuterDecision outer_update(const OuterState& state, double h_new, const SolverConfig& config) {
  OuterDecision out{state, OuterAction::accept};
  if (h_new > config.progress_ratio * state.h_prev) {
    out.state.rho *= config.rho_multiplier;
    if (out.state.rho < config.rho_max) {
      out.action = OuterAction::resolve;
      return out;
    }
  }
  out.state.h_prev = h_new;
  out.state.alpha += out.state.rho * h_new;
  ++out.state.outer_iterations;
  if (h_new <= config.h_tolerance) {
    out.action = OuterAction::converged;
  } else if (out.state.rho >= config.rho_max) {
    out.action = OuterAction::rho_exhausted;
  } else if (out.state.outer_iterations >= config.max_outer) {
    out.action = OuterAction::max_outer;
  }
  return out;
}

SolveResult fit(const Dataset& data, const SolverConfig& config) {
  return fit(data.samples(), data.names(), config);
}

SolveResult fit(const DenseMatrix& x, const std::vector<std::string>& names,
                const SolverConfig& config) {
  config.validate();
  const Eigen::Index d = x.cols();
  if (d < 2) throw SpecError("fit needs at least 2 variables");
  if (config.w_init && (config.w_init->rows() != d || config.w_init->cols() != d)) {
    throw DimensionError("w_init must be d x d");
  }

  SolveResult result;
  result.config = config;
  for (Eigen::Index j = 0; j < d; ++j) {
    const double mean = x.col(j).mean();
    if (std::abs(mean) > 1e-6) {
      std::ostringstream msg;
      msg << "column " << j << " is not centered (mean " << mean << ")";
      result.warnings.push_back(msg.str());
    }
  }

  const losses::LossSpec& spec = config.loss;
  DenseMatrix whitening;
  if (spec.kind == losses::LossKind::weighted_ls) whitening = losses::inverse_sqrt(*spec.sigma);
  auto smooth_loss = [&](const DenseMatrix& w) {
    if (spec.kind == losses::LossKind::weighted_ls) return losses::weighted_ls_whitened(w, x, whitening);
    return losses::evaluate(spec, w, x);
  };

  const Eigen::Index cells = d * d;
  const Bounds bounds = split_bounds(d);
  DenseMatrix start = config.w_init ? *config.w_init : DenseMatrix::Zero(d, d);
  start.diagonal().setZero();
  Eigen::VectorXd w_est = pack(start);

  OuterState state{config.alpha_init, config.rho_init, std::numeric_limits<double>::infinity(), 0};
  const double lambda = spec.lambda;

  while (true) {
    const double rho = state.rho;
    const double alpha = state.alpha;
    Objective objective = [&](const Eigen::VectorXd& v, Eigen::VectorXd& grad) -> double {
      const DenseMatrix w = unpack(v, d);
      losses::LossEval le;
      try {
        le = smooth_loss(w);
      } catch (const DomainError&) {
        return std::numeric_limits<double>::infinity();
      }
      const auto h = acyclicity::h_and_grad(w);
      const double value = le.value + 0.5 * rho * h.value * h.value + alpha * h.value +
                           lambda * v.sum();
      const DenseMatrix g_smooth = le.gradient + (rho * h.value + alpha) * h.gradient;
      const auto g = Eigen::Map<const Eigen::VectorXd>(g_smooth.data(), cells);
      grad.head(cells) = g.array() + lambda;
      grad.tail(cells) = -g.array() + lambda;
      return value;
    };

    InnerResult inner = minimize_box(objective, w_est, bounds, config.inner);
    const DenseMatrix w_new = unpack(inner.x, d);
    if (inner.status == InnerStatus::line_search_failed) {
      if (!std::isfinite(inner.value)) {
        throw SolverError("objective is not finite at the start of an inner solve",
                          diagnostic_dump(w_new, alpha, rho, "non-finite start"));
      }
      ++result.line_search_failures;
    }

    double ell = 0.0;
    try {
      ell = smooth_loss(w_new).value;
    } catch (const DomainError& e) {
      throw SolverError(std::string("loss undefined at inner solution: ") + e.what(),
                        diagnostic_dump(w_new, alpha, rho, e.what()));
    }
    if (std::isnan(ell)) {
      throw SolverError("loss is NaN", diagnostic_dump(w_new, alpha, rho, "NaN loss"));
    }
    const double h_new = acyclicity::h_value(w_new);

    TraceStep step;
    step.step = result.trace.size();
    step.ell = ell;
    step.h = h_new;
    step.total = ell + lambda * losses::l1_norm(w_new) + 0.5 * rho * h_new * h_new + alpha * h_new;
    step.alpha = alpha;
    step.rho = rho;
    step.inner_iterations = inner.iterations;
    step.inner_status = inner.status;
    if (config.keep_snapshots) step.weights = w_new;

    const OuterDecision decision = outer_update(state, h_new, config);
    state = decision.state;
    step.accepted = decision.action != OuterAction::resolve;
    result.trace.push_back(std::move(step));
    if (decision.action == OuterAction::resolve) continue;

    w_est = inner.x;
    result.final_h = h_new;
    result.final_ell = ell;
    if (decision.action == OuterAction::accept) continue;
    result.termination = decision.action == OuterAction::converged       ? Termination::converged
                         : decision.action == OuterAction::rho_exhausted ? Termination::rho_exhausted
                                                                         : Termination::max_outer;
    break;
  }

  DenseMatrix w_final = unpack(w_est, d);
  w_final.diagonal().setZero();
  result.weights = WeightedGraph(std::move(w_final), names);
  return result;
}

nlohmann::json to_json(const SolverConfig& c) {
  return {{"loss",
           {{"kind", losses::to_string(c.loss.kind)},
            {"lambda", c.loss.lambda},
            {"sigma", c.loss.sigma ? matrix_json(*c.loss.sigma) : nlohmann::json(nullptr)}}},
          {"rho_init", c.rho_init},
          {"rho_max", c.rho_max},
          {"rho_multiplier", c.rho_multiplier},
          {"alpha_init", c.alpha_init},
          {"h_tolerance", c.h_tolerance},
          {"progress_ratio", c.progress_ratio},
          {"max_outer", c.max_outer},
          {"inner",
           {{"memory", c.inner.memory},
            {"max_iterations", c.inner.max_iterations},
            {"gradient_tolerance", c.inner.gradient_tolerance},
            {"function_tolerance", c.inner.function_tolerance},
            {"max_line_search_steps", c.inner.max_line_search_steps}}},
          {"w_init", c.w_init ? matrix_json(*c.w_init) : nlohmann::json(nullptr)},
          {"seed", c.seed},
          {"keep_snapshots", c.keep_snapshots}};
}

SolverConfig solver_config_from_json(const nlohmann::json& j) {
  SolverConfig c;
  const auto& loss = j.at("loss");
  c.loss.kind = losses::parse_loss_kind(loss.at("kind").get<std::string>());
  c.loss.lambda = loss.at("lambda").get<double>();
  if (loss.contains("sigma") && !loss.at("sigma").is_null()) c.loss.sigma = matrix_from_json(loss.at("sigma"));
  c.rho_init = j.at("rho_init").get<double>();
  c.rho_max = j.at("rho_max").get<double>();
  c.rho_multiplier = j.at("rho_multiplier").get<double>();
  c.alpha_init = j.at("alpha_init").get<double>();
  c.h_tolerance = j.at("h_tolerance").get<double>();
  c.progress_ratio = j.at("progress_ratio").get<double>();
  c.max_outer = j.at("max_outer").get<std::size_t>();
  const auto& inner = j.at("inner");
  c.inner.memory = inner.at("memory").get<std::size_t>();
  c.inner.max_iterations = inner.at("max_iterations").get<std::size_t>();
  c.inner.gradient_tolerance = inner.at("gradient_tolerance").get<double>();
  c.inner.function_tolerance = inner.at("function_tolerance").get<double>();
  c.inner.max_line_search_steps = inner.at("max_line_search_steps").get<std::size_t>();
  if (j.contains("w_init") && !j.at("w_init").is_null()) c.w_init = matrix_from_json(j.at("w_init"));
  c.seed = j.value("seed", std::uint64_t{0});
  c.keep_snapshots = j.value("keep_snapshots", true);
  return c;
}

nlohmann::json to_json(const SolveResult& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.trace) {
    steps.push_back({{"step", s.step},
                     {"ell", s.ell},
                     {"h", s.h},
                     {"total", s.total},
                     {"alpha", s.alpha},
                     {"rho", s.rho},
                     {"accepted", s.accepted},
                     {"inner_iterations", s.inner_iterations},
                     {"inner_status", to_string(s.inner_status)}});
  }
  return {{"weights", dagscope::to_json(r.weights)},
          {"termination", to_string(r.termination)},
          {"final_h", r.final_h},
          {"final_ell", r.final_ell},
          {"line_search_failures", r.line_search_failures},
          {"warnings", r.warnings},
          {"trace", std::move(steps)},
          {"config", to_json(r.config)}};
}

std::string trace_csv(const SolveTrace& trace) {
  std::ostringstream out;
  out << "step,ell,h,total,alpha,rho,accepted,inner_iterations,inner_status\n";
  for (const auto& s : trace) {
    out << s.step << ',' << format_double(s.ell) << ',' << format_double(s.h) << ','
        << format_double(s.total) << ',' << format_double(s.alpha) << ',' << format_double(s.rho)
        << ',' << (s.accepted ? 1 : 0) << ',' << s.inner_iterations << ','
        << to_string(s.inner_status) << '\n';
  }
  return out.str();
}

}  // namespace dagscope::opt
