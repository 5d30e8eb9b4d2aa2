#include "dagscope/cli/commands.hpp"

#include "dagscope/acyclicity.hpp"
#include "dagscope/csv.hpp"
#include "dagscope/flip_search.hpp"
#include "dagscope/graph_extract.hpp"
#include "dagscope/sem_sim.hpp"
#include "dagscope/solver.hpp"
#include "dagscope/svg.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;

namespace dagscope::cli {

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// A run directory plus the files written into it.
class RunDir {
 public:
  explicit RunDir(fs::path root) : root_(std::move(root)) { fs::create_directories(root_); }

  const fs::path& root() const { return root_; }

  void write(const std::string& relative, const std::string& content) {
    const fs::path target = root_ / relative;
    fs::create_directories(target.parent_path());
    std::ofstream out(target, std::ios::binary);
    if (!out) throw Error("cannot write " + target.string());
    out << content;
    if (!out) throw Error("failed writing " + target.string());
    std::lock_guard lock(mutex_);
    outputs_.insert(relative);
  }

  void write_json(const std::string& relative, const nlohmann::json& j) { write(relative, j.dump(2) + "\n"); }

  void write_matrix(const std::string& relative, const DenseMatrix& m, const std::vector<std::string>& header) {
    std::ostringstream out;
    write_matrix_csv(m, header, out);
    write(relative, out.str());
  }

  std::vector<std::string> outputs() const {
    std::lock_guard lock(mutex_);
    return {outputs_.begin(), outputs_.end()};
  }

 private:
  fs::path root_;
  std::set<std::string> outputs_;
  mutable std::mutex mutex_;
};

struct InputFile {
  std::string role;
  std::string path;
};

fs::path resolve_run_dir(const OutputOptions& out, const std::string& command, const nlohmann::json& config) {
  if (!out.run_dir.empty()) return out.run_dir;
  const std::string digest = sha256_hex(command + "\n" + config.dump());
  return fs::path(out.out_root) / (command + "-" + digest.substr(0, 12));
}

void write_manifest(RunDir& dir, const std::string& command, const nlohmann::json& config,
                    const std::vector<std::uint64_t>& seeds, const std::vector<InputFile>& inputs,
                    const nlohmann::json& extra = nlohmann::json::object()) {
  nlohmann::json in = nlohmann::json::object();
  for (const auto& f : inputs) {
    if (f.path.empty()) continue;
    in[f.role] = {{"path", f.path}, {"sha256", file_sha256(f.path)}};
  }
  nlohmann::json m{{"tool", "dagscope"},
                   {"version", kToolVersion},
                   {"command", command},
                   {"config", config},
                   {"seeds", seeds},
                   {"inputs", std::move(in)},
                   {"outputs", dir.outputs()}};
  for (const auto& [k, v] : extra.items()) m[k] = v;
  dir.write_json("manifest.json", m);
}

std::string matrix_text(const DenseMatrix& m, const std::vector<std::string>& header) {
  std::ostringstream out;
  write_matrix_csv(m, header, out);
  return out.str();
}

sim::NoiseKind parse_noise(const std::string& s) {
  if (s == "uniform") return sim::NoiseKind::uniform;
  if (s == "gaussian") return sim::NoiseKind::gaussian;
  throw SpecError("unknown noise kind '" + s + "' (expected uniform or gaussian)");
}

/// Per-column multipliers taking `from` to `to` (both linear rescalings of
/// the same data).
std::vector<double> column_factors(const Dataset& from, const Dataset& to) {
  std::vector<double> f(from.cols());
  for (std::size_t j = 0; j < from.cols(); ++j) f[j] = to.col_stds()[j] / from.col_stds()[j];
  return f;
}

opt::SolverConfig make_solver_config(const SolverOptions& o, const Dataset& raw, const Dataset& fitted,
                                     const std::optional<sim::TruthRecord>& truth) {
  opt::SolverConfig c;
  c.loss.kind = losses::parse_loss_kind(o.loss);
  c.loss.lambda = o.lambda;
  if (c.loss.kind == losses::LossKind::weighted_ls) {
    if (!o.sigma.empty()) {
      c.loss.sigma = read_matrix_csv(o.sigma);
    } else if (o.sigma_from_truth) {
      if (!truth || truth->noise_variances.size() != fitted.cols()) {
        throw SpecError("--sigma-from-truth needs a truth file with noise variances");
      }
      const auto f = column_factors(raw, fitted);
      const auto d = static_cast<Eigen::Index>(fitted.cols());
      DenseMatrix sigma = DenseMatrix::Zero(d, d);
      for (Eigen::Index j = 0; j < d; ++j) sigma(j, j) = truth->noise_variances[j] * f[j] * f[j];
      c.loss.sigma = sigma;
    } else {
      throw SpecError("the weighted loss needs --sigma FILE or --sigma-from-truth");
    }
  }
  c.rho_init = o.rho_init;
  c.rho_max = o.rho_max;
  c.rho_multiplier = o.rho_multiplier;
  c.alpha_init = o.alpha_init;
  c.h_tolerance = o.h_tolerance;
  c.progress_ratio = o.progress_ratio;
  c.max_outer = o.max_outer;
  c.inner.memory = o.memory;
  c.inner.max_iterations = o.max_inner;
  c.inner.gradient_tolerance = o.gradient_tolerance;
  return c;
}

extract::ThresholdPolicy make_policy(const SolverOptions& o) {
  return {o.omega, o.repair ? extract::Repair::greedy_min_weight_removal : extract::Repair::none};
}

std::optional<sim::TruthRecord> load_truth(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return sim::truth_record_from_json(nlohmann::json::parse(slurp(path)));
}

/// Fit plus thresholded graph. A thresholded cycle counts as a solver failure.
struct FitOutcome {
  opt::SolveResult result;
  BinaryDag graph;
};

FitOutcome fit_and_threshold(const Dataset& data, const opt::SolverConfig& config,
                             const extract::ThresholdPolicy& policy) {
  FitOutcome out{opt::fit(data, config), {}};
  try {
    out.graph = extract::threshold(out.result.weights, policy);
  } catch (const CycleError& e) {
    nlohmann::json diag{{"error", "thresholded graph is cyclic"},
                        {"cycle", e.cycle()},
                        {"weights", to_json(out.result.weights)}};
    throw SolverError("thresholded graph is cyclic; rerun with --repair or a larger --omega", diag.dump(2));
  }
  return out;
}

nlohmann::json metrics_json(const BinaryDag& estimate, const WeightedGraph& fitted,
                            const sim::TruthRecord& truth, double omega) {
  const BinaryDag true_dag = truth.dag();
  nlohmann::json j = extract::to_json(extract::structural_metrics(estimate, true_dag));
  const Eigen::MatrixXi fit_signs = extract::sign_pattern(fitted, omega);
  const Eigen::MatrixXi true_signs = extract::sign_pattern(truth.weights, 0.0);
  j["sign_pattern_match"] = fit_signs == true_signs;
  j["truth_edges"] = true_dag.edge_count();
  j["estimate_edges"] = estimate.edge_count();
  return j;
}

/// Writes the standard fit outputs under `prefix`.
void write_fit_outputs(RunDir& dir, const std::string& prefix, const FitOutcome& fit, bool snapshots) {
  const auto& names = fit.result.weights.names;
  dir.write_matrix(prefix + "weights.csv", fit.result.weights.weights, names);
  dir.write_json(prefix + "graph.json", to_json(fit.graph, names));
  std::ostringstream adj;
  for (Eigen::Index i = 0; i < fit.graph.adjacency().rows(); ++i) {
    for (Eigen::Index j = 0; j < fit.graph.adjacency().cols(); ++j) {
      adj << (j ? "," : "") << (fit.graph.adjacency()(i, j) ? '1' : '0');
    }
    adj << '\n';
  }
  dir.write(prefix + "adjacency.csv", adj.str());
  dir.write(prefix + "trace.csv", opt::trace_csv(fit.result.trace));
  dir.write_json(prefix + "result.json", opt::to_json(fit.result));
  if (snapshots) {
    for (const auto& step : fit.result.trace) {
      char name[32];
      std::snprintf(name, sizeof(name), "snapshots/W_%03zu.csv", step.step);
      dir.write_matrix(prefix + name, step.weights, names);
    }
  }
}

template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

struct SweepPoint {
  std::size_t index = 0;
  double factor = 0.0;
  std::vector<double> multipliers;
};

struct SweepPointResult {
  std::optional<FitOutcome> fit;
  std::string status = "ok";
};

std::vector<SweepPoint> sweep_points(const SweepOptions& o, const Dataset& base) {
  const std::size_t d = base.cols();
  std::vector<SweepPoint> points;
  if (o.mode == "target") {
    if (o.target >= d) throw SpecError("sweep target " + std::to_string(o.target) + " out of range");
    if (o.factors.empty()) throw SpecError("sweep needs at least one factor");
    if (o.factor_kind != "std" && o.factor_kind != "variance") {
      throw SpecError("factor kind must be std or variance");
    }
    for (std::size_t k = 0; k < o.factors.size(); ++k) {
      const double f = o.factors[k];
      if (!(f > 0.0)) throw SpecError("sweep factors must be positive");
      std::vector<double> m(d, 1.0);
      m[o.target] = o.factor_kind == "std" ? f : std::sqrt(f);
      points.push_back({k, f, std::move(m)});
    }
  } else if (o.mode == "incremental") {
    if (o.steps < 2) throw SpecError("incremental sweep needs at least 2 steps");
    // Geometric path from the base scale to unit variance.
    for (std::size_t k = 0; k < o.steps; ++k) {
      const double frac = static_cast<double>(k) / static_cast<double>(o.steps - 1);
      std::vector<double> m(d);
      for (std::size_t j = 0; j < d; ++j) m[j] = std::pow(1.0 / base.col_stds()[j], frac);
      points.push_back({k, frac, std::move(m)});
    }
  } else {
    throw SpecError("sweep mode must be target or incremental");
  }
  return points;
}

std::vector<SweepPointResult> run_sweep_points(const std::vector<SweepPoint>& points, const Dataset& base,
                                               const opt::SolverConfig& config,
                                               const extract::ThresholdPolicy& policy, std::size_t threads) {
  std::vector<SweepPointResult> results(points.size());
  parallel_for(points.size(), threads, [&](std::size_t i) {
    try {
      const Dataset ds = center_and_scale(base, scale::Rescale{points[i].multipliers});
      results[i].fit = fit_and_threshold(ds, config, policy);
    } catch (const std::exception& e) {
      results[i].status = std::string("failed: ") + e.what();
    }
  });
  return results;
}

std::string sweep_aggregate(const std::vector<SweepPoint>& points, const std::vector<SweepPointResult>& results,
                            std::size_t target) {
  std::ostringstream out;
  out << "index,factor,inbound,outbound,final_h,termination,status\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << points[i].index << ',' << format_double(points[i].factor) << ',';
    if (results[i].fit) {
      const auto& f = *results[i].fit;
      out << f.graph.in_degree(target) << ',' << f.graph.out_degree(target) << ','
          << format_double(f.result.final_h) << ',' << opt::to_string(f.result.termination) << ",ok\n";
    } else {
      std::string status = results[i].status;
      std::replace(status.begin(), status.end(), ',', ';');
      std::replace(status.begin(), status.end(), '\n', ' ');
      out << ",,,," << status << '\n';
    }
  }
  return out.str();
}

std::string point_dir(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "point-%02zu/", index);
  return buf;
}

std::string row_dir(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "row-%02zu/", index);
  return buf;
}

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

std::string file_sha256(const fs::path& path) { return sha256_hex(slurp(path)); }

std::size_t resolve_threads(std::size_t requested) {
  if (const char* env = std::getenv("DAGSCOPE_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

fs::path cmd_simulate(const SimulateOptions& o) {
  const nlohmann::json config = to_json(o);
  sim::GroundTruthSem truth = [&] {
    if (o.toy_gamma > 0.0) {
      if (o.nodes != 2) throw SpecError("the toy pair has exactly 2 nodes (--nodes 2)");
      return sim::simulate_toy_pair({o.toy_gamma, o.samples, o.seed, parse_noise(o.noise)});
    }
    sim::SemSpec spec;
    if (o.preset == "fig1-like") {
      spec = sim::fig1_like_spec(o.seed);
      spec.samples = o.samples;
    } else if (!o.preset.empty()) {
      throw SpecError("unknown preset '" + o.preset + "'");
    } else {
      spec.nodes = o.nodes;
      spec.edges = o.edges;
      spec.exact_edges = o.exact_edges;
      spec.noise = {parse_noise(o.noise), o.noise_scale};
      spec.samples = o.samples;
      spec.seed = o.seed;
      spec.weight_low = o.weight_low;
      spec.weight_high = o.weight_high;
      if (!o.target_stds.empty()) spec.target_stds = o.target_stds;
    }
    return sim::simulate(spec);
  }();

  RunDir dir(resolve_run_dir(o.output, "simulate", config));
  dir.write("data.csv", matrix_text(truth.dataset.samples(), truth.dataset.names()));
  dir.write_json("truth.json", sim::to_json(truth));
  write_manifest(dir, "simulate", config, {o.seed}, {});
  return dir.root();
}

fs::path cmd_fit(const FitOptions& o) {
  const nlohmann::json config = to_json(o);
  const Dataset raw = read_csv(o.data);
  const Dataset fitted = center_and_scale(raw, parse_scale_mode(o.scale));
  const auto truth = load_truth(o.truth);
  const opt::SolverConfig solver = make_solver_config(o.solver, raw, fitted, truth);
  if (truth && truth->weights.size() != fitted.cols()) {
    throw DimensionError("truth file and dataset disagree on the number of variables");
  }

  RunDir dir(resolve_run_dir(o.output, "fit", config));
  FitOutcome fit;
  try {
    opt::SolverConfig c = solver;
    c.keep_snapshots = true;
    fit = fit_and_threshold(fitted, c, make_policy(o.solver));
  } catch (const SolverError& e) {
    dir.write("failure.json", e.diagnostic() + "\n");
    write_manifest(dir, "fit", config, {}, {{"data", o.data}, {"truth", o.truth}, {"sigma", o.solver.sigma}},
                   {{"status", "solver_failure"}});
    throw;
  }
  write_fit_outputs(dir, "", fit, o.snapshots);
  if (truth) dir.write_json("metrics.json", metrics_json(fit.graph, fit.result.weights, *truth, o.solver.omega));
  write_manifest(dir, "fit", config, {}, {{"data", o.data}, {"truth", o.truth}, {"sigma", o.solver.sigma}});
  return dir.root();
}

fs::path cmd_sweep(const SweepOptions& o) {
  const nlohmann::json config = to_json(o);
  const Dataset raw = read_csv(o.data);
  const Dataset base = center_and_scale(raw, parse_scale_mode(o.scale));
  const auto truth = load_truth(o.truth);
  const std::vector<SweepPoint> points = sweep_points(o, base);
  const std::size_t target = o.mode == "target" ? o.target : std::min(o.target, base.cols() - 1);
  if (o.solver.loss == "weighted" && o.solver.sigma_from_truth) {
    throw SpecError("sweep does not support --sigma-from-truth; pass --sigma");
  }
  const opt::SolverConfig solver = make_solver_config(o.solver, raw, base, truth);
  const auto results = run_sweep_points(points, base, solver, make_policy(o.solver), resolve_threads(o.threads));

  RunDir dir(resolve_run_dir(o.output, "sweep", config));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!results[i].fit) continue;
    write_fit_outputs(dir, point_dir(i), *results[i].fit, false);
    if (truth) {
      dir.write_json(point_dir(i) + "metrics.json",
                     metrics_json(results[i].fit->graph, results[i].fit->result.weights, *truth, o.solver.omega));
    }
  }
  dir.write("aggregate.csv", sweep_aggregate(points, results, target));
  write_manifest(dir, "sweep", config, {}, {{"data", o.data}, {"truth", o.truth}, {"sigma", o.solver.sigma}});
  return dir.root();
}

fs::path cmd_reproduce(const ReproduceOptions& o) {
  const nlohmann::json config = to_json(o);
  const opt::SolverConfig solver;
  const extract::ThresholdPolicy policy{0.3, extract::Repair::greedy_min_weight_removal};
  const std::vector<std::string> labels = default_names(4);

  if (o.figure == "flip") {
    RunDir dir(resolve_run_dir(o.output, "reproduce", config));
    const auto hit = sim::find_flip_seed(sim::fig1_like_spec(0), solver, policy, o.max_seeds);
    if (!hit) {
      dir.write_json("flip.json", {{"found", false}, {"max_seeds", o.max_seeds}});
      write_manifest(dir, "reproduce", config, {}, {}, {{"status", "not_found"}});
      throw NotFoundError("no flip instance within " + std::to_string(o.max_seeds) + " seeds");
    }
    dir.write("data.csv", matrix_text(hit->truth.dataset.samples(), hit->truth.dataset.names()));
    dir.write_json("truth.json", sim::to_json(hit->truth));
    FitOutcome centered{hit->centered_fit, hit->centered_graph};
    FitOutcome standardized{hit->standardized_fit, hit->standardized_graph};
    write_fit_outputs(dir, "centered/", centered, false);
    write_fit_outputs(dir, "standardized/", standardized, false);
    dir.write_json("centered/metrics.json", extract::to_json(hit->centered_metrics));
    dir.write_json("standardized/metrics.json", extract::to_json(hit->standardized_metrics));
    dir.write_json("flip.json", {{"found", true},
                                 {"seed", hit->seed},
                                 {"centered_shd", hit->centered_metrics.shd},
                                 {"standardized_shd", hit->standardized_metrics.shd},
                                 {"standardized_reversed", hit->standardized_metrics.reversed_edges}});
    const std::vector<svg::HeatmapPanel> panels{
        {"ground truth", hit->truth.true_weights.weights},
        {"centered data", hit->centered_fit.weights.weights},
        {"standardized data", hit->standardized_fit.weights.weights}};
    dir.write("flip.svg", svg::heatmap_grid(panels, 3, labels,
                                            "fig1-like seed " + std::to_string(hit->seed) + ": fitted weights"));
    write_manifest(dir, "reproduce", config, {hit->seed}, {});
    return dir.root();
  }

  const sim::GroundTruthSem truth = sim::simulate(sim::fig1_like_spec(o.seed));
  RunDir dir(resolve_run_dir(o.output, "reproduce", config));
  dir.write("data.csv", matrix_text(truth.dataset.samples(), truth.dataset.names()));
  dir.write_json("truth.json", sim::to_json(truth));
  const Dataset centered = center_and_scale(truth.dataset, scale::Center{});

  if (o.figure == "fig2") {
    const FitOutcome fit = fit_and_threshold(centered, solver, policy);
    write_fit_outputs(dir, "", fit, true);
    std::vector<double> ell;
    std::vector<double> total;
    std::vector<double> h;
    for (const auto& s : fit.result.trace) {
      ell.push_back(s.ell);
      total.push_back(s.total);
      h.push_back(s.h);
    }
    const std::string left = svg::line_plot({{"loss", ell, "#1f77b4"}, {"total", total, "#d62728"}},
                                            "loss terms per inner step", "inner step", false);
    const std::string right = svg::line_plot({{"h(W)", h, "#2ca02c"}}, "acyclicity h(W)", "inner step", true);
    dir.write("fig2.svg", svg::hstack({left, right}, 420.0, 300.0));
  } else if (o.figure == "fig3") {
    SweepOptions so;
    so.mode = "incremental";
    so.steps = 5;
    const auto points = sweep_points(so, centered);
    opt::SolverConfig c = solver;
    c.keep_snapshots = true;
    const auto results = run_sweep_points(points, centered, c, policy, resolve_threads(o.threads));
    std::size_t width = 0;
    for (const auto& r : results) {
      if (r.fit) width = std::max(width, r.fit->result.trace.size());
    }
    std::vector<svg::HeatmapPanel> panels(points.size() * width);
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!results[i].fit) continue;
      write_fit_outputs(dir, row_dir(i), *results[i].fit, true);
      const auto& trace = results[i].fit->result.trace;
      for (std::size_t k = 0; k < trace.size(); ++k) {
        panels[i * width + k] = {"scale " + fmt2(points[i].factor) + ", step " + std::to_string(k),
                                 trace[k].weights};
      }
    }
    dir.write("aggregate.csv", sweep_aggregate(points, results, 3));
    dir.write("fig3.svg", svg::heatmap_grid(panels, std::max<std::size_t>(width, 1), labels,
                                            "weights per inner step; rows rescale toward unit variance"));
  } else if (o.figure == "fig4") {
    SweepOptions so;
    so.mode = "target";
    so.target = 3;
    const auto points = sweep_points(so, centered);
    const auto results = run_sweep_points(points, centered, solver, policy, resolve_threads(o.threads));
    std::vector<svg::HeatmapPanel> panels(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!results[i].fit) continue;
      write_fit_outputs(dir, point_dir(i), *results[i].fit, false);
      panels[i] = {"X3 x " + fmt2(points[i].factor), results[i].fit->result.weights.weights};
    }
    dir.write("aggregate.csv", sweep_aggregate(points, results, 3));
    dir.write("fig4.svg", svg::heatmap_grid(panels, points.size(), labels, "rescaling X3"));
  } else {
    throw SpecError("unknown figure '" + o.figure + "' (expected fig2, fig3, fig4 or flip)");
  }
  write_manifest(dir, "reproduce", config, {o.seed}, {});
  return dir.root();
}

fs::path cmd_replay(const fs::path& manifest_path, const OutputOptions& output) {
  const nlohmann::json manifest = nlohmann::json::parse(slurp(manifest_path));
  const std::string command = manifest.at("command").get<std::string>();
  const nlohmann::json& config = manifest.at("config");
  const nlohmann::json inputs = manifest.value("inputs", nlohmann::json::object());
  for (const auto& [role, info] : inputs.items()) {
    const std::string path = info.at("path").get<std::string>();
    if (file_sha256(path) != info.at("sha256").get<std::string>()) {
      std::cerr << "warning: input '" << role << "' (" << path << ") changed since the manifest was written\n";
    }
  }
  if (command == "simulate") {
    auto o = simulate_options_from_json(config);
    o.output = output;
    return cmd_simulate(o);
  }
  if (command == "fit") {
    auto o = fit_options_from_json(config);
    o.output = output;
    return cmd_fit(o);
  }
  if (command == "sweep") {
    auto o = sweep_options_from_json(config);
    o.output = output;
    return cmd_sweep(o);
  }
  if (command == "reproduce") {
    auto o = reproduce_options_from_json(config);
    o.output = output;
    return cmd_reproduce(o);
  }
  throw SpecError("manifest names unknown command '" + command + "'");
}

}  // namespace dagscope::cli
