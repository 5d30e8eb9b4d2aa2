#include "dagscope/lbfgs.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace dagscope::opt;
using Eigen::VectorXd;

namespace {

Bounds box(Eigen::Index n, double lo, double hi) {
  return {VectorXd::Constant(n, lo), VectorXd::Constant(n, hi)};
}

}  // namespace

TEST_CASE("one-dimensional quadratic, free and bounded") {
  const Objective f = [](const VectorXd& x, VectorXd& g) {
    g.resize(1);
    g(0) = 2 * (x(0) - 3);
    return (x(0) - 3) * (x(0) - 3);
  };
  const InnerResult free = minimize_box(f, VectorXd::Zero(1), Bounds::unbounded(1), {});
  CHECK(std::abs(free.x(0) - 3.0) < 1e-8);

  Bounds upper = Bounds::unbounded(1);
  upper.upper(0) = 2.0;
  const InnerResult bounded = minimize_box(f, VectorXd::Zero(1), upper, {});
  CHECK(bounded.x(0) == 2.0);
  CHECK(bounded.status == InnerStatus::gradient_converged);
}

TEST_CASE("Rosenbrock converges") {
  const Objective f = [](const VectorXd& x, VectorXd& g) {
    const double a = 1 - x(0);
    const double b = x(1) - x(0) * x(0);
    g.resize(2);
    g(0) = -2 * a - 400 * x(0) * b;
    g(1) = 200 * b;
    return a * a + 100 * b * b;
  };
  InnerConfig cfg;
  cfg.function_tolerance = 0.0;
  cfg.gradient_tolerance = 1e-9;
  VectorXd start(2);
  start << -1.2, 1.0;
  const InnerResult r = minimize_box(f, start, Bounds::unbounded(2), cfg);
  CHECK(std::abs(r.x(0) - 1) < 1e-6);
  CHECK(std::abs(r.x(1) - 1) < 1e-6);
}

TEST_CASE("bound-constrained quadratic matches the projected optimum") {
  // Separable quadratic sum (x_i - c_i)^2 on [0, 1]: solution clamp(c).
  VectorXd c(6);
  c << -1, 0.3, 2, 0.9, -0.2, 0.5;
  const Objective f = [&](const VectorXd& x, VectorXd& g) {
    g = 2 * (x - c);
    return (x - c).squaredNorm();
  };
  const InnerResult r = minimize_box(f, VectorXd::Constant(6, 0.5), box(6, 0, 1), {});
  for (Eigen::Index i = 0; i < 6; ++i) CHECK(std::abs(r.x(i) - std::clamp(c(i), 0.0, 1.0)) < 1e-7);
}

TEST_CASE("pinned variables stay fixed") {
  const Objective f = [](const VectorXd& x, VectorXd& g) {
    g = 2 * (x - VectorXd::Ones(3));
    return (x - VectorXd::Ones(3)).squaredNorm();
  };
  Bounds b = Bounds::unbounded(3);
  b.lower(1) = b.upper(1) = 0.0;
  VectorXd start = VectorXd::Zero(3);
  start(1) = 5.0;  // projected onto the pin first
  const InnerResult r = minimize_box(f, start, b, {});
  CHECK(r.x(1) == 0.0);
  CHECK(std::abs(r.x(0) - 1) < 1e-7);
}

TEST_CASE("coupled quadratic with active bounds agrees with a KKT check") {
  Eigen::MatrixXd a(3, 3);
  a << 4, 1, 0.5, 1, 3, 0.2, 0.5, 0.2, 2;
  VectorXd b(3);
  b << 1, -4, 2;
  const Objective f = [&](const VectorXd& x, VectorXd& g) {
    g = a * x - b;
    return 0.5 * x.dot(a * x) - b.dot(x);
  };
  const Bounds bounds = box(3, 0, 10);
  const InnerResult r = minimize_box(f, VectorXd::Ones(3), bounds, {});
  VectorXd g;
  f(r.x, g);
  for (Eigen::Index i = 0; i < 3; ++i) {
    if (r.x(i) <= 1e-10) CHECK(g(i) >= -1e-7);
    else CHECK(std::abs(g(i)) < 1e-6);
  }
}

TEST_CASE("infeasible trial points are backtracked") {
  // -log(x) + x has its minimum at 1; the objective is undefined for x <= 0.
  const Objective f = [](const VectorXd& x, VectorXd& g) {
    g.resize(1);
    if (x(0) <= 0) return std::numeric_limits<double>::infinity();
    g(0) = -1 / x(0) + 1;
    return -std::log(x(0)) + x(0);
  };
  const InnerResult r = minimize_box(f, VectorXd::Constant(1, 5.0), Bounds::unbounded(1), {});
  CHECK(std::abs(r.x(0) - 1) < 1e-6);
}

TEST_CASE("max iterations is reported") {
  const Objective f = [](const VectorXd& x, VectorXd& g) {
    g = 2 * x;
    g(0) *= 1e4;
    return x.squaredNorm() + (1e4 - 1) * x(0) * x(0);
  };
  InnerConfig cfg;
  cfg.max_iterations = 1;
  const InnerResult r = minimize_box(f, VectorXd::Ones(4), Bounds::unbounded(4), cfg);
  CHECK(r.status == InnerStatus::max_iterations);
  CHECK(r.iterations == 1);
}
