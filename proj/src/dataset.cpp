#include "dagscope/dataset.hpp"

#include "dagscope/error.hpp"

#include <cmath>

namespace dagscope {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Dataset::Dataset(DenseMatrix samples, std::vector<std::string> names)
    : samples_(std::move(samples)), names_(std::move(names)) {
  const auto n = samples_.rows();
  const auto d = samples_.cols();
  if (n < 2) throw SpecError("dataset needs at least 2 rows, got " + std::to_string(n));
  if (d < 1) throw SpecError("dataset needs at least 1 column");
  if (names_.empty()) names_ = default_names(static_cast<std::size_t>(d));
  if (names_.size() != static_cast<std::size_t>(d)) {
    throw DimensionError("dataset has " + std::to_string(d) + " columns but " +
                         std::to_string(names_.size()) + " names");
  }
  if (!samples_.allFinite()) throw SpecError("dataset contains non-finite values");

  means_.resize(static_cast<std::size_t>(d));
  stds_.resize(static_cast<std::size_t>(d));
  for (Eigen::Index j = 0; j < d; ++j) {
    const double mean = samples_.col(j).mean();
    const double var = (samples_.col(j).array() - mean).square().sum() / static_cast<double>(n);
    const double sd = std::sqrt(var);
    if (!(sd > 0.0)) {
      throw DomainError("column " + std::to_string(j) + " (" + names_[j] + ") is constant",
                        static_cast<std::size_t>(j));
    }
    means_[j] = mean;
    stds_[j] = sd;
  }
}

Dataset center_and_scale(const Dataset& ds, const ScaleMode& mode) {
  DenseMatrix x = ds.samples();
  const auto d = x.cols();
  std::visit(Overloaded{
                 [](const scale::None&) {},
                 [&](const scale::Center&) {
                   for (Eigen::Index j = 0; j < d; ++j) x.col(j).array() -= ds.col_means()[j];
                 },
                 [&](const scale::Standardize&) {
                   for (Eigen::Index j = 0; j < d; ++j) {
                     const double sd = ds.col_stds()[j];
                     if (!(sd > 0.0)) {
                       throw DomainError("cannot standardize constant column " + std::to_string(j),
                                         static_cast<std::size_t>(j));
                     }
                     x.col(j).array() = (x.col(j).array() - ds.col_means()[j]) / sd;
                   }
                 },
                 [&](const scale::Rescale& r) {
                   if (r.factors.size() != static_cast<std::size_t>(d)) {
                     throw DimensionError("rescale needs " + std::to_string(d) + " factors, got " +
                                          std::to_string(r.factors.size()));
                   }
                   for (Eigen::Index j = 0; j < d; ++j) {
                     const double f = r.factors[j];
                     if (!(f > 0.0) || !std::isfinite(f)) {
                       throw SpecError("rescale factor for column " + std::to_string(j) +
                                       " must be positive");
                     }
                     if (f != 1.0) x.col(j) *= f;
                   }
                 },
             },
             mode);
  return Dataset(std::move(x), ds.names());
}

ScaleMode parse_scale_mode(const std::string& text) {
  if (text == "none") return scale::None{};
  if (text == "center") return scale::Center{};
  if (text == "standardize") return scale::Standardize{};
  throw SpecError("unknown scale mode '" + text + "' (expected none, center or standardize)");
}

std::string to_string(const ScaleMode& mode) {
  return std::visit(Overloaded{
                        [](const scale::None&) -> std::string { return "none"; },
                        [](const scale::Center&) -> std::string { return "center"; },
                        [](const scale::Standardize&) -> std::string { return "standardize"; },
                        [](const scale::Rescale&) -> std::string { return "rescale"; },
                    },
                    mode);
}

}  // namespace dagscope
