#include "dagscope/lbfgs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace dagscope::opt {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kCurvatureFloor = 1e-10;

struct Memory {
  std::deque<Eigen::VectorXd> s;
  std::deque<Eigen::VectorXd> y;
  std::deque<double> rho;

  bool empty() const { return s.empty(); }
  void clear() {
    s.clear();
    y.clear();
    rho.clear();
  }
  void push(Eigen::VectorXd sk, Eigen::VectorXd yk, double sy, std::size_t capacity) {
    if (capacity == 0) return;
    if (s.size() == capacity) {
      s.pop_front();
      y.pop_front();
      rho.pop_front();
    }
    s.push_back(std::move(sk));
    y.push_back(std::move(yk));
    rho.push_back(1.0 / sy);
  }

  // Two-loop recursion: returns H q.
  Eigen::VectorXd apply(const Eigen::VectorXd& q_in) const {
    Eigen::VectorXd q = q_in;
    const std::size_t m = s.size();
    std::vector<double> a(m);
    for (std::size_t k = m; k-- > 0;) {
      a[k] = rho[k] * s[k].dot(q);
      q -= a[k] * y[k];
    }
    if (m > 0) q *= s.back().dot(y.back()) / y.back().squaredNorm();
    for (std::size_t k = 0; k < m; ++k) {
      const double b = rho[k] * y[k].dot(q);
      q += (a[k] - b) * s[k];
    }
    return q;
  }
};

Eigen::VectorXd project(const Eigen::VectorXd& x, const Bounds& b) {
  return x.cwiseMax(b.lower).cwiseMin(b.upper);
}

double projected_gradient_norm(const Eigen::VectorXd& x, const Eigen::VectorXd& g, const Bounds& b) {
  return (project(x - g, b) - x).lpNorm<Eigen::Infinity>();
}

// Cells that cannot move this iteration: pinned, or on a bound with the
// gradient pointing outward.
std::vector<char> frozen_cells(const Eigen::VectorXd& x, const Eigen::VectorXd& g, const Bounds& b) {
  std::vector<char> frozen(static_cast<std::size_t>(x.size()), 0);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const bool pinned = b.lower(i) == b.upper(i);
    const bool at_lower = x(i) <= b.lower(i) && g(i) > 0.0;
    const bool at_upper = x(i) >= b.upper(i) && g(i) < 0.0;
    frozen[static_cast<std::size_t>(i)] = pinned || at_lower || at_upper;
  }
  return frozen;
}

void zero_cells(Eigen::VectorXd& v, const std::vector<char>& frozen) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (frozen[static_cast<std::size_t>(i)]) v(i) = 0.0;
  }
}

}  // namespace

std::string to_string(InnerStatus status) {
  switch (status) {
    case InnerStatus::gradient_converged: return "gradient_converged";
    case InnerStatus::function_converged: return "function_converged";
    case InnerStatus::max_iterations: return "max_iterations";
    case InnerStatus::line_search_failed: return "line_search_failed";
  }
  return "?";
}

Bounds Bounds::unbounded(Eigen::Index n) {
  const double inf = std::numeric_limits<double>::infinity();
  return {Eigen::VectorXd::Constant(n, -inf), Eigen::VectorXd::Constant(n, inf)};
}

InnerResult minimize_box(const Objective& objective, const Eigen::VectorXd& start,
                         const Bounds& bounds, const InnerConfig& config) {
  InnerResult result;
  Eigen::VectorXd x = project(start, bounds);
  Eigen::VectorXd g(x.size());
  double f = objective(x, g);
  result.evaluations = 1;

  auto finish = [&](InnerStatus status) {
    result.x = x;
    result.value = f;
    result.projected_gradient_norm = projected_gradient_norm(x, g, bounds);
    result.status = status;
    return result;
  };

  if (!std::isfinite(f)) return finish(InnerStatus::line_search_failed);

  Memory memory;
  Eigen::VectorXd trial(x.size());
  Eigen::VectorXd trial_grad(x.size());

  for (result.iterations = 0; result.iterations < config.max_iterations; ++result.iterations) {
    if (projected_gradient_norm(x, g, bounds) <= config.gradient_tolerance) {
      return finish(InnerStatus::gradient_converged);
    }

    const std::vector<char> frozen = frozen_cells(x, g, bounds);
    Eigen::VectorXd q = g;
    zero_cells(q, frozen);

    bool accepted = false;
    double trial_f = f;
    // Quasi-Newton direction first; on failure drop the memory and retry
    // along steepest descent.
    for (int attempt = 0; attempt < 2 && !accepted; ++attempt) {
      if (attempt == 1) {
        if (memory.empty()) break;
        memory.clear();
      }
      Eigen::VectorXd dir = memory.empty() ? Eigen::VectorXd(-q) : Eigen::VectorXd(-memory.apply(q));
      zero_cells(dir, frozen);
      if (g.dot(dir) >= 0.0) {
        memory.clear();
        dir = -q;
      }
      const double dir_norm = dir.norm();
      if (dir_norm == 0.0) break;

      double step = memory.empty() ? std::min(1.0, 1.0 / dir_norm) : 1.0;
      for (std::size_t ls = 0; ls < config.max_line_search_steps; ++ls, step *= 0.5) {
        trial = project(x + step * dir, bounds);
        const Eigen::VectorXd delta = trial - x;
        if (delta.lpNorm<Eigen::Infinity>() == 0.0) break;
        trial_f = objective(trial, trial_grad);
        ++result.evaluations;
        if (std::isfinite(trial_f) && trial_f <= f + kArmijo * g.dot(delta)) {
          accepted = true;
          break;
        }
      }
    }
    if (!accepted) return finish(InnerStatus::line_search_failed);

    Eigen::VectorXd s = trial - x;
    Eigen::VectorXd y = trial_grad - g;
    const double sy = s.dot(y);
    if (sy > kCurvatureFloor * y.squaredNorm()) memory.push(std::move(s), std::move(y), sy, config.memory);

    const double decrease = f - trial_f;
    const double scale = std::max({std::abs(f), std::abs(trial_f), 1.0});
    x = trial;
    g = trial_grad;
    f = trial_f;
    if (decrease <= config.function_tolerance * scale) {
      ++result.iterations;
      return finish(InnerStatus::function_converged);
    }
  }
  return finish(InnerStatus::max_iterations);
}

}  // namespace dagscope::opt
