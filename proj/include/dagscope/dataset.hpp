#pragma once

#include "dagscope/matrix.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace dagscope {

/// An n x d sample matrix with column labels and per-column statistics.
///
/// Statistics are recomputed from the samples on construction, so they always
/// describe the current values. Standard deviations use the population
/// convention (denominator n). Constant columns are rejected.
class Dataset {
 public:
  /// Throws DomainError (with the column index) on a constant column,
  /// DimensionError when `names` does not have one entry per column, and
  /// SpecError when n < 2 or d < 1 or an entry is not finite.
  explicit Dataset(DenseMatrix samples, std::vector<std::string> names = {});

  const DenseMatrix& samples() const noexcept { return samples_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<double>& col_means() const noexcept { return means_; }
  const std::vector<double>& col_stds() const noexcept { return stds_; }

  std::size_t rows() const noexcept { return static_cast<std::size_t>(samples_.rows()); }
  std::size_t cols() const noexcept { return static_cast<std::size_t>(samples_.cols()); }

  /// Population variance of column j.
  double variance(std::size_t j) const { return stds_[j] * stds_[j]; }

 private:
  DenseMatrix samples_;
  std::vector<std::string> names_;
  std::vector<double> means_;
  std::vector<double> stds_;
};

namespace scale {
struct None {};
struct Center {};
struct Standardize {};
/// Multiply column j by factors[j]; no centering.
struct Rescale {
  std::vector<double> factors;
};
}  // namespace scale

using ScaleMode = std::variant<scale::None, scale::Center, scale::Standardize, scale::Rescale>;

/// Apply a scaling mode. Standardize centers and divides by the population std.
Dataset center_and_scale(const Dataset& ds, const ScaleMode& mode);

/// Parse "none" | "center" | "standardize".
ScaleMode parse_scale_mode(const std::string& text);
std::string to_string(const ScaleMode& mode);

}  // namespace dagscope
