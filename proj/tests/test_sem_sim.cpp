#include "dagscope/error.hpp"
#include "dagscope/flip_search.hpp"
#include "dagscope/sem_sim.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace dagscope;
using namespace dagscope::sim;

namespace {

double sample_var(const DenseMatrix& x, Eigen::Index j) {
  const double m = x.col(j).mean();
  return (x.col(j).array() - m).square().sum() / static_cast<double>(x.rows());
}

BinaryDag chain(std::size_t d) {
  AdjacencyMatrix a = AdjacencyMatrix::Zero(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) a(i, i + 1) = true;
  return BinaryDag(a);
}

}  // namespace

TEST_CASE("d = 4, n = 1000 gives a centered 1000 x 4 dataset") {
  SemSpec spec;
  spec.seed = 7;
  const GroundTruthSem t = simulate(spec);
  CHECK(t.dataset.rows() == 1000);
  CHECK(t.dataset.cols() == 4);
  for (double m : t.dataset.col_means()) CHECK(std::abs(m) < 1e-12);
  CHECK(t.true_weights.weights.diagonal().isZero());
  CHECK(is_dag(support(t.true_weights.weights)).has_value());
}

TEST_CASE("weights lie in +-[low, high]") {
  SemSpec spec;
  spec.nodes = 8;
  spec.edges = 12;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    spec.seed = seed;
    const DenseMatrix w = simulate(spec).true_weights.weights;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      const double a = std::abs(w.data()[i]);
      if (a != 0.0) {
        CHECK(a >= 0.5);
        CHECK(a <= 2.0);
      }
    }
  }
}

TEST_CASE("zero density gives pure noise") {
  SemSpec spec;
  spec.edges = 0;
  const GroundTruthSem t = simulate(spec);
  CHECK(t.true_weights.weights.isZero());
  CHECK((t.dataset.samples() - t.noise).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("exact edge count") {
  SemSpec spec;
  spec.nodes = 6;
  spec.edges = 7;
  spec.exact_edges = true;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    spec.seed = seed;
    CHECK(simulate(spec).dag().edge_count() == 7);
  }
  spec.edges = 16;
  CHECK_THROWS_AS(simulate(spec), SpecError);
}

TEST_CASE("unit-weight chain has increasing variances") {
  SemSpec spec;
  spec.nodes = 3;
  spec.dag = chain(3);
  spec.fixed_weights = DenseMatrix::Ones(3, 3);
  spec.noise = {NoiseKind::gaussian, {1.0}};
  spec.samples = 10000;
  spec.seed = 11;
  const GroundTruthSem t = simulate(spec);
  const DenseMatrix& x = t.dataset.samples();
  // Var(X_{k+1}) = Var(X_k) + 1: expected 1, 2, 3.
  CHECK(sample_var(x, 2) > sample_var(x, 1));
  CHECK(sample_var(x, 1) > sample_var(x, 0));
  CHECK(sample_var(x, 2) == doctest::Approx(3.0).epsilon(0.1));
}

TEST_CASE("data satisfy the SEM with the stored noise") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    SemSpec spec;
    spec.nodes = 6;
    spec.edges = 8;
    spec.seed = seed;
    spec.target_stds = std::vector<double>{1, 2, 3, 0.5, 0.25, 4};
    const GroundTruthSem t = simulate(spec);
    const DenseMatrix& x = t.dataset.samples();
    const DenseMatrix rebuilt = x * t.true_weights.weights + t.noise;
    CHECK((rebuilt - x).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("seed determinism and seed sensitivity") {
  SemSpec spec;
  spec.seed = 42;
  const GroundTruthSem a = simulate(spec);
  const GroundTruthSem b = simulate(spec);
  CHECK(a.dataset.samples() == b.dataset.samples());
  CHECK(a.true_weights.weights == b.true_weights.weights);
  spec.seed = 43;
  CHECK(simulate(spec).dataset.samples() != a.dataset.samples());
}

TEST_CASE("noise of a column does not depend on the node count") {
  SemSpec small;
  small.nodes = 3;
  small.edges = 0;
  small.seed = 5;
  SemSpec large = small;
  large.nodes = 6;
  const DenseMatrix a = simulate(small).noise;
  const DenseMatrix b = simulate(large).noise;
  CHECK(a == b.leftCols(3));
}

TEST_CASE("fig1-like preset hits the requested stds") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const GroundTruthSem t = simulate(fig1_like_spec(seed));
    const std::vector<double> target{0.86, 1.56, 1.07, 0.76};
    CHECK(t.dataset.rows() == 1000);
    CHECK(t.dag().edge_count() == 4);
    for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(t.dataset.col_stds()[j] - target[j]) < 1e-6);
  }
}

TEST_CASE("noise covariance follows the post-scaling") {
  SemSpec spec;
  spec.nodes = 3;
  spec.edges = 0;
  spec.noise = {NoiseKind::uniform, {1.0, 2.0, 3.0}};
  const GroundTruthSem plain = simulate(spec);
  CHECK(plain.noise_variances[1] == doctest::Approx(4.0 / 3.0));
  // With no edges each column is its own noise, so post-scaling the column
  // to std s scales its noise variance to s^2 / (sample var / nominal var).
  spec.target_stds = std::vector<double>{2, 2, 2};
  const GroundTruthSem scaled = simulate(spec);
  for (std::size_t j = 0; j < 3; ++j) {
    const double f = 2.0 / plain.dataset.col_stds()[j];
    CHECK(scaled.noise_variances[j] == doctest::Approx(plain.noise_variances[j] * f * f));
  }
  const DenseMatrix cov = scaled.noise_covariance({0.5, 1, 1});
  CHECK(cov(0, 0) == doctest::Approx(scaled.noise_variances[0] * 0.25));
  CHECK(cov(0, 1) == 0.0);
}

TEST_CASE("toy pair is exactly collinear") {
  const GroundTruthSem t = simulate_toy_pair({2.0, 1000, 3, NoiseKind::uniform});
  const DenseMatrix& x = t.dataset.samples();
  CHECK((x.col(1) - 2.0 * x.col(0)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(t.dataset.col_stds()[1] == doctest::Approx(2.0 * t.dataset.col_stds()[0]).epsilon(1e-14));
  CHECK(t.symmetric);
  CHECK(t.true_weights.weights(0, 1) == 2.0);
  CHECK(t.dag().has_edge(0, 1));

  const GroundTruthSem g4 = simulate_toy_pair({4.0, 1000, 1, NoiseKind::gaussian});
  CHECK(g4.dataset.variance(1) / g4.dataset.variance(0) == doctest::Approx(16.0).epsilon(1e-12));

  const GroundTruthSem g1 = simulate_toy_pair({1.0, 100, 1, NoiseKind::uniform});
  CHECK(g1.dataset.samples().col(0) == g1.dataset.samples().col(1));
  CHECK_THROWS_AS(simulate_toy_pair({0.0, 100, 1, NoiseKind::uniform}), SpecError);
}

TEST_CASE("spec validation") {
  SemSpec bad;
  bad.weight_low = 0.0;
  CHECK_THROWS_AS(simulate(bad), SpecError);
  bad = {};
  bad.samples = 1;
  CHECK_THROWS_AS(simulate(bad), SpecError);
  bad = {};
  bad.noise.scale = {1, 2};
  CHECK_THROWS_AS(simulate(bad), SpecError);
  bad = {};
  bad.target_stds = std::vector<double>{1, 1};
  CHECK_THROWS_AS(simulate(bad), SpecError);
}

TEST_CASE("spec and truth json round trip") {
  SemSpec spec = fig1_like_spec(9);
  const SemSpec back = sem_spec_from_json(to_json(spec));
  CHECK(to_json(back) == to_json(spec));

  const GroundTruthSem t = simulate(spec);
  const TruthRecord r = truth_record_from_json(to_json(t));
  CHECK(r.weights.weights == t.true_weights.weights);
  CHECK(r.seed == 9);
  CHECK(r.noise_variances == t.noise_variances);
  CHECK(r.dag() == t.dag());
}

TEST_CASE("flip search degenerate cases") {
  const opt::SolverConfig solver;
  const extract::ThresholdPolicy policy;
  CHECK_FALSE(find_flip_seed(fig1_like_spec(0), solver, policy, 0).has_value());
  SemSpec empty = fig1_like_spec(0);
  empty.edges = 0;
  std::size_t attempts = 0;
  CHECK_FALSE(find_flip_seed(empty, solver, policy, 3, [&](std::uint64_t) { ++attempts; }).has_value());
  CHECK(attempts == 3);
}
