#include "dagscope/sem_sim.hpp"

#include "dagscope/error.hpp"
#include "dagscope/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dagscope::sim {

namespace {

constexpr std::uint64_t kStructureStream = 0;

std::uint64_t noise_stream(std::size_t column) { return 1 + column; }

std::vector<std::size_t> permutation(Rng& rng, std::size_t d) {
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = d; i > 1; --i) {
    const auto k = static_cast<std::size_t>(rng.below(i));
    std::swap(perm[i - 1], perm[k]);
  }
  return perm;
}

AdjacencyMatrix random_dag(Rng& rng, const SemSpec& spec) {
  const std::size_t d = spec.nodes;
  const auto n = static_cast<Eigen::Index>(d);
  AdjacencyMatrix adj = AdjacencyMatrix::Constant(n, n, false);
  const std::vector<std::size_t> perm = permutation(rng, d);

  // Forward pairs in the permuted order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) pairs.emplace_back(perm[a], perm[b]);
  }
  if (pairs.empty()) return adj;

  if (spec.exact_edges) {
    const auto m = static_cast<std::size_t>(spec.edges);
    for (std::size_t i = 0; i < m; ++i) {
      const auto k = i + static_cast<std::size_t>(rng.below(pairs.size() - i));
      std::swap(pairs[i], pairs[k]);
      adj(pairs[i].first, pairs[i].second) = true;
    }
  } else {
    const double p = std::clamp(spec.edges / static_cast<double>(pairs.size()), 0.0, 1.0);
    for (const auto& [from, to] : pairs) {
      if (rng.uniform01() < p) adj(from, to) = true;
    }
  }
  return adj;
}

double draw_noise(Rng& rng, NoiseKind kind, double scale) {
  return kind == NoiseKind::uniform ? rng.uniform(-scale, scale) : scale * rng.normal();
}

double population_std(const Eigen::Ref<const Eigen::VectorXd>& v) {
  const double mean = v.mean();
  return std::sqrt((v.array() - mean).square().sum() / static_cast<double>(v.size()));
}

}  // namespace

double NoiseSpec::variance_of(std::size_t node) const {
  const double s = scale_of(node);
  return kind == NoiseKind::uniform ? s * s / 3.0 : s * s;
}

void SemSpec::validate() const {
  if (nodes < 1) throw SpecError("nodes must be >= 1");
  if (samples < 2) throw SpecError("samples must be >= 2");
  if (!(edges >= 0.0)) throw SpecError("edges must be >= 0");
  if (exact_edges && !dag) {
    const double max_edges = 0.5 * static_cast<double>(nodes) * static_cast<double>(nodes - 1);
    if (edges != std::floor(edges) || edges > max_edges) {
      throw SpecError("exact edge count must be a whole number <= d(d-1)/2");
    }
  }
  if (!(weight_low > 0.0) || !(weight_low <= weight_high)) {
    throw SpecError("weight range must satisfy 0 < low <= high");
  }
  if (noise.scale.size() != 1 && noise.scale.size() != nodes) {
    throw SpecError("noise scale needs 1 or " + std::to_string(nodes) + " entries");
  }
  for (double s : noise.scale) {
    if (!(s > 0.0)) throw SpecError("noise scale must be positive");
  }
  if (dag) {
    if (dag->size() != nodes) throw SpecError("explicit DAG has the wrong node count");
  }
  if (fixed_weights) {
    if (!dag) throw SpecError("fixed weights require an explicit DAG");
    if (fixed_weights->rows() != static_cast<Eigen::Index>(nodes) ||
        fixed_weights->cols() != static_cast<Eigen::Index>(nodes)) {
      throw SpecError("fixed weights must be nodes x nodes");
    }
  }
  if (target_stds) {
    if (target_stds->size() != nodes) throw SpecError("target_stds needs one entry per node");
    for (double s : *target_stds) {
      if (!(s > 0.0)) throw SpecError("target_stds must be positive");
    }
  }
}

BinaryDag GroundTruthSem::dag() const { return BinaryDag(support(true_weights.weights)); }

DenseMatrix GroundTruthSem::noise_covariance(const std::vector<double>& column_factors) const {
  const auto d = static_cast<Eigen::Index>(noise_variances.size());
  if (!column_factors.empty() && column_factors.size() != noise_variances.size()) {
    throw DimensionError("column_factors needs one entry per node");
  }
  DenseMatrix sigma = DenseMatrix::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const double f = column_factors.empty() ? 1.0 : column_factors[j];
    sigma(j, j) = noise_variances[j] * f * f;
  }
  return sigma;
}

GroundTruthSem simulate(const SemSpec& spec) {
  spec.validate();
  const std::size_t d = spec.nodes;
  const auto dd = static_cast<Eigen::Index>(d);
  const auto n = static_cast<Eigen::Index>(spec.samples);

  Rng structure(spec.seed, kStructureStream);
  const AdjacencyMatrix adj = spec.dag ? spec.dag->adjacency() : random_dag(structure, spec);

  DenseMatrix w = DenseMatrix::Zero(dd, dd);
  for (Eigen::Index i = 0; i < dd; ++i) {
    for (Eigen::Index j = 0; j < dd; ++j) {
      if (!adj(i, j)) continue;
      if (spec.fixed_weights) {
        w(i, j) = (*spec.fixed_weights)(i, j);
      } else {
        const double magnitude = structure.uniform(spec.weight_low, spec.weight_high);
        w(i, j) = structure.uniform01() < 0.5 ? -magnitude : magnitude;
      }
    }
  }
  const BinaryDag dag(adj);

  DenseMatrix noise(n, dd);
  for (std::size_t j = 0; j < d; ++j) {
    Rng rng(spec.seed, noise_stream(j));
    const double s = spec.noise.scale_of(j);
    for (Eigen::Index r = 0; r < n; ++r) noise(r, static_cast<Eigen::Index>(j)) = draw_noise(rng, spec.noise.kind, s);
  }
  // Centering the noise centers X as well, since X is linear in the noise.
  for (Eigen::Index j = 0; j < dd; ++j) noise.col(j).array() -= noise.col(j).mean();

  DenseMatrix x = DenseMatrix::Zero(n, dd);
  for (std::size_t node : dag.topological_order()) {
    const auto j = static_cast<Eigen::Index>(node);
    Eigen::VectorXd col = noise.col(j);
    for (Eigen::Index i = 0; i < dd; ++i) {
      if (adj(i, j)) col += w(i, j) * x.col(i);
    }
    x.col(j) = col;
  }

  std::vector<double> noise_var(d);
  for (std::size_t j = 0; j < d; ++j) noise_var[j] = spec.noise.variance_of(j);

  if (spec.target_stds) {
    std::vector<double> factor(d);
    for (std::size_t j = 0; j < d; ++j) {
      const auto c = static_cast<Eigen::Index>(j);
      factor[j] = (*spec.target_stds)[j] / population_std(x.col(c));
      x.col(c) *= factor[j];
      noise.col(c) *= factor[j];
      noise_var[j] *= factor[j] * factor[j];
    }
    for (Eigen::Index i = 0; i < dd; ++i) {
      for (Eigen::Index j = 0; j < dd; ++j) w(i, j) *= factor[j] / factor[i];
    }
  }

  auto names = default_names(d);
  GroundTruthSem truth{spec, WeightedGraph(w, names), Dataset(std::move(x), names),
                       std::move(noise), std::move(noise_var), false};
  return truth;
}

GroundTruthSem simulate_toy_pair(const ToyPairSpec& spec) {
  if (!(spec.gamma > 0.0) || !std::isfinite(spec.gamma)) throw SpecError("gamma must be positive");
  if (spec.samples < 2) throw SpecError("samples must be >= 2");
  const auto n = static_cast<Eigen::Index>(spec.samples);

  Rng rng(spec.seed, noise_stream(0));
  Eigen::VectorXd x0(n);
  for (Eigen::Index r = 0; r < n; ++r) x0(r) = draw_noise(rng, spec.noise, 1.0);
  x0.array() -= x0.mean();

  DenseMatrix x(n, 2);
  x.col(0) = x0;
  x.col(1) = spec.gamma * x0;

  DenseMatrix w = DenseMatrix::Zero(2, 2);
  w(0, 1) = spec.gamma;
  DenseMatrix noise = DenseMatrix::Zero(n, 2);
  noise.col(0) = x0;

  SemSpec sem;
  sem.nodes = 2;
  sem.edges = 1;
  sem.exact_edges = true;
  sem.noise.kind = spec.noise;
  sem.samples = spec.samples;
  sem.seed = spec.seed;
  AdjacencyMatrix adj = AdjacencyMatrix::Constant(2, 2, false);
  adj(0, 1) = true;
  sem.dag = BinaryDag(adj);
  sem.fixed_weights = w;
  sem.weight_low = sem.weight_high = spec.gamma;

  const double v0 = spec.noise == NoiseKind::uniform ? 1.0 / 3.0 : 1.0;
  auto names = default_names(2);
  return GroundTruthSem{std::move(sem), WeightedGraph(w, names), Dataset(std::move(x), names),
                        std::move(noise), {v0, 0.0}, true};
}

SemSpec fig1_like_spec(std::uint64_t seed) {
  SemSpec spec;
  spec.nodes = 4;
  spec.edges = 4;
  spec.exact_edges = true;
  spec.weight_low = 0.5;
  spec.weight_high = 2.0;
  spec.noise = {NoiseKind::uniform, {1.0}};
  spec.samples = 1000;
  spec.seed = seed;
  spec.target_stds = std::vector<double>{0.86, 1.56, 1.07, 0.76};
  return spec;
}

nlohmann::json to_json(const SemSpec& spec) {
  nlohmann::json j{{"nodes", spec.nodes},
                   {"edges", spec.edges},
                   {"exact_edges", spec.exact_edges},
                   {"weight_low", spec.weight_low},
                   {"weight_high", spec.weight_high},
                   {"noise", {{"kind", spec.noise.kind == NoiseKind::uniform ? "uniform" : "gaussian"},
                              {"scale", spec.noise.scale}}},
                   {"samples", spec.samples},
                   {"seed", spec.seed}};
  if (spec.dag) j["dag"] = to_json(*spec.dag, {});
  if (spec.fixed_weights) j["fixed_weights"] = to_json(WeightedGraph(*spec.fixed_weights))["weights"];
  j["target_stds"] = spec.target_stds ? nlohmann::json(*spec.target_stds) : nlohmann::json(nullptr);
  return j;
}

SemSpec sem_spec_from_json(const nlohmann::json& j) {
  SemSpec spec;
  spec.nodes = j.at("nodes").get<std::size_t>();
  spec.edges = j.at("edges").get<double>();
  spec.exact_edges = j.value("exact_edges", false);
  spec.weight_low = j.at("weight_low").get<double>();
  spec.weight_high = j.at("weight_high").get<double>();
  const auto& noise = j.at("noise");
  const auto kind = noise.at("kind").get<std::string>();
  if (kind == "uniform") {
    spec.noise.kind = NoiseKind::uniform;
  } else if (kind == "gaussian") {
    spec.noise.kind = NoiseKind::gaussian;
  } else {
    throw SpecError("unknown noise kind '" + kind + "'");
  }
  spec.noise.scale = noise.at("scale").get<std::vector<double>>();
  spec.samples = j.at("samples").get<std::size_t>();
  spec.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("dag")) spec.dag = binary_dag_from_json(j.at("dag"));
  if (j.contains("fixed_weights")) {
    spec.fixed_weights = weighted_graph_from_json({{"weights", j.at("fixed_weights")}}).weights;
  }
  if (j.contains("target_stds") && !j.at("target_stds").is_null()) {
    spec.target_stds = j.at("target_stds").get<std::vector<double>>();
  }
  return spec;
}

nlohmann::json to_json(const GroundTruthSem& truth) {
  nlohmann::json j = to_json(truth.true_weights);
  j["spec"] = to_json(truth.spec);
  j["seed"] = truth.spec.seed;
  j["noise_variances"] = truth.noise_variances;
  j["symmetric"] = truth.symmetric;
  return j;
}

BinaryDag TruthRecord::dag() const { return BinaryDag(support(weights.weights)); }

TruthRecord truth_record_from_json(const nlohmann::json& j) {
  TruthRecord r;
  r.weights = weighted_graph_from_json(j);
  r.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("noise_variances")) r.noise_variances = j.at("noise_variances").get<std::vector<double>>();
  r.symmetric = j.value("symmetric", false);
  return r;
}

}  // namespace dagscope::sim
