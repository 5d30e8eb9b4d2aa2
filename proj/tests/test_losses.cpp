#include "dagscope/error.hpp"
#include "dagscope/losses.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace dagscope;
using namespace dagscope::losses;

namespace {

struct Instance {
  DenseMatrix w;
  DenseMatrix x;
};

// Small weights keep I - W comfortably nonsingular.
Instance random_instance(Rng& rng, Eigen::Index d, Eigen::Index n = 50) {
  DenseMatrix w = testing::random_matrix(rng, d, d, -0.4, 0.4);
  w.diagonal().setZero();
  return {w, testing::random_matrix(rng, n, d, -2, 2)};
}

DenseMatrix random_spd(Rng& rng, Eigen::Index d) {
  const DenseMatrix a = testing::random_matrix(rng, d, d, -1, 1);
  return a * a.transpose() + 0.5 * DenseMatrix::Identity(d, d);
}

void check_gradient(const std::function<LossEval(const DenseMatrix&)>& loss, const DenseMatrix& w) {
  const LossEval e = loss(w);
  const DenseMatrix fd = testing::fd_gradient([&](const DenseMatrix& v) { return loss(v).value; }, w);
  CHECK(testing::relative_error(e.gradient, fd) <= 1e-5);
}

}  // namespace

TEST_CASE("least squares at W = 0 and on exact relations") {
  Rng rng(1);
  const DenseMatrix x = testing::random_matrix(rng, 30, 3, -1, 1);
  const LossEval e = least_squares(DenseMatrix::Zero(3, 3), x);
  CHECK(e.value == doctest::Approx(x.squaredNorm() / 60.0).epsilon(1e-14));
  CHECK((e.gradient + x.transpose() * x / 30.0).norm() < 1e-12);

  DenseMatrix pair(20, 2);
  for (Eigen::Index r = 0; r < 20; ++r) {
    pair(r, 0) = rng.uniform(-1, 1);
    pair(r, 1) = 2 * pair(r, 0);
  }
  DenseMatrix w(2, 2);
  w << 0, 2, 0.5, 0;
  CHECK(least_squares(w, pair).value < 1e-28);
}

TEST_CASE("least squares gradient, d = 4, n = 50") {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [w, x] = random_instance(rng, 4);
    const LossEval e = least_squares(w, x);
    const DenseMatrix fd =
        testing::fd_gradient([&](const DenseMatrix& v) { return least_squares(v, x).value; }, w);
    CHECK(testing::relative_error(e.gradient, fd) <= 1e-6);
  }
}

TEST_CASE("dimension mismatch") {
  CHECK_THROWS_AS(least_squares(DenseMatrix::Zero(3, 3), DenseMatrix::Zero(5, 2)), DimensionError);
  CHECK_THROWS_AS(golem_ev(DenseMatrix::Zero(2, 3), DenseMatrix::Zero(5, 2)), DimensionError);
}

TEST_CASE("golem losses at W = 0") {
  Rng rng(3);
  const DenseMatrix x = testing::random_matrix(rng, 40, 4, -1, 1);
  const DenseMatrix zero = DenseMatrix::Zero(4, 4);
  CHECK(golem_ev(zero, x).value == doctest::Approx(2.0 * std::log(x.squaredNorm())).epsilon(1e-14));
  double nv = 0.0;
  for (Eigen::Index j = 0; j < 4; ++j) nv += 0.5 * std::log(x.col(j).squaredNorm());
  CHECK(golem_nv(zero, x).value == doctest::Approx(nv).epsilon(1e-14));
}

TEST_CASE("golem gradients") {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [w, x] = random_instance(rng, 2 + trial % 5);
    check_gradient([&](const DenseMatrix& v) { return golem_ev(v, x); }, w);
    check_gradient([&](const DenseMatrix& v) { return golem_nv(v, x); }, w);
  }
}

TEST_CASE("golem domain errors") {
  Rng rng(5);
  const DenseMatrix x = testing::random_matrix(rng, 20, 2, -1, 1);
  DenseMatrix singular(2, 2);
  singular << 0, 1, 1, 0;  // det(I - W) = 0
  CHECK_THROWS_AS(golem_ev(singular, x), DomainError);
  CHECK_THROWS_AS(golem_nv(singular, x), DomainError);

  DenseMatrix pair(20, 2);
  pair.col(0) = x.col(0);
  pair.col(1) = 3 * x.col(0);
  DenseMatrix w = DenseMatrix::Zero(2, 2);
  w(0, 1) = 3;
  try {
    golem_nv(w, pair);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.index() == 1);
  }
}

TEST_CASE("Jensen: NV <= EV - log d on random instances") {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index d = 2 + trial % 5;
    const auto [w, x] = random_instance(rng, d);
    const double ev = golem_ev(w, x).value;
    const double nv = golem_nv(w, x).value;
    CHECK(nv <= ev - std::log(static_cast<double>(d)));
  }
}

TEST_CASE("equal residual columns give NV = EV - (d/2) log d") {
  Rng rng(7);
  for (Eigen::Index d = 2; d <= 6; ++d) {
    // W = 0 makes the residual X itself; give each column the same norm.
    DenseMatrix x = testing::random_matrix(rng, 30, d, -1, 1);
    for (Eigen::Index j = 0; j < d; ++j) x.col(j) *= 1.7 / x.col(j).norm();
    DenseMatrix w = DenseMatrix::Zero(d, d);
    const double ev = golem_ev(w, x).value;
    const double nv = golem_nv(w, x).value;
    CHECK(std::abs(nv - (ev - 0.5 * d * std::log(static_cast<double>(d)))) < 1e-9);
  }
}

TEST_CASE("weighted loss with identity and scaled identity") {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto [w, x] = random_instance(rng, 3);
    const LossEval ls = least_squares(w, x);
    const LossEval id = weighted_ls(w, x, DenseMatrix::Identity(3, 3));
    CHECK(id.value == doctest::Approx(ls.value).epsilon(1e-14));
    CHECK((id.gradient - ls.gradient).norm() < 1e-13);
    const double c = rng.uniform(0.1, 10);
    const LossEval sc = weighted_ls(w, x, c * DenseMatrix::Identity(3, 3));
    CHECK(std::abs(sc.value - ls.value / c) <= 1e-12 * ls.value / c);
  }
}

TEST_CASE("weighted loss, diagonal Sigma closed form") {
  Rng rng(9);
  const DenseMatrix x = testing::random_matrix(rng, 25, 2, -1, 1);
  DenseMatrix w = DenseMatrix::Zero(2, 2);
  w(0, 1) = 0.7;
  DenseMatrix sigma = DenseMatrix::Zero(2, 2);
  sigma(0, 0) = 4;
  sigma(1, 1) = 1;
  const DenseMatrix r = x - x * w;
  const double expected = (r.col(0).squaredNorm() / 4 + r.col(1).squaredNorm()) / 50.0;
  CHECK(weighted_ls(w, x, sigma).value == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("weighted loss gradient") {
  Rng rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [w, x] = random_instance(rng, 2 + trial % 4);
    const DenseMatrix sigma = random_spd(rng, w.rows());
    check_gradient([&](const DenseMatrix& v) { return weighted_ls(v, x, sigma); }, w);
  }
}

TEST_CASE("inverse square root") {
  Rng rng(11);
  const DenseMatrix sigma = random_spd(rng, 4);
  const DenseMatrix s = inverse_sqrt(sigma);
  CHECK((s - s.transpose()).norm() < 1e-12);
  CHECK((s * sigma * s - DenseMatrix::Identity(4, 4)).norm() < 1e-10);

  DenseMatrix indefinite(2, 2);
  indefinite << 1, 2, 2, 1;
  CHECK_THROWS_AS(inverse_sqrt(indefinite), DomainError);
  DenseMatrix asym(2, 2);
  asym << 1, 0.5, 0, 1;
  CHECK_THROWS_AS(inverse_sqrt(asym), DomainError);
}

TEST_CASE("l1 norm and split") {
  CHECK(l1_norm(DenseMatrix::Zero(3, 3)) == 0.0);
  DenseMatrix w(2, 2);
  w << 0, -3, 2, 0;
  CHECK(l1_norm(w) == 5.0);
  const SplitWeights s = split(w);
  CHECK(s.positive.minCoeff() >= 0.0);
  CHECK(s.negative.minCoeff() >= 0.0);
  CHECK(s.merge() == w);
  CHECK(least_squares(w, DenseMatrix::Identity(2, 2)).l1_value == 5.0);
}

TEST_CASE("evaluate dispatches and validates") {
  Rng rng(12);
  const auto [w, x] = random_instance(rng, 3);
  LossSpec spec;
  CHECK(evaluate(spec, w, x).value == least_squares(w, x).value);
  spec.kind = LossKind::golem_nv;
  CHECK(evaluate(spec, w, x).value == golem_nv(w, x).value);
  spec.kind = LossKind::weighted_ls;
  CHECK_THROWS_AS(spec.validate(), SpecError);
  spec.sigma = DenseMatrix::Identity(3, 3);
  spec.lambda = -1;
  CHECK_THROWS_AS(spec.validate(), SpecError);

  CHECK(parse_loss_kind("golem-ev") == LossKind::golem_ev);
  CHECK(parse_loss_kind("weighted") == LossKind::weighted_ls);
  CHECK(to_string(LossKind::least_squares) == "ls");
  CHECK_THROWS_AS(parse_loss_kind("l2"), SpecError);
}
