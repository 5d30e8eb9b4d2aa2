#pragma once

#include "dagscope/matrix.hpp"

#include <string>
#include <vector>

namespace dagscope::svg {

struct HeatmapPanel {
  std::string title;
  DenseMatrix values;
};

/// Grid of weight heatmaps on a shared diverging scale symmetric around 0
/// (blue negative, white zero, red positive). `limit` <= 0 means the largest
/// |value| across all panels. Empty panels leave a gap in the grid.
std::string heatmap_grid(const std::vector<HeatmapPanel>& panels, std::size_t columns,
                         const std::vector<std::string>& labels, const std::string& title,
                         double limit = 0.0);

struct Series {
  std::string name;
  std::vector<double> values;
  std::string color;
};

/// Polylines against the index 0..k-1. With `log_y`, values are plotted as
/// log10(max(v, floor)).
std::string line_plot(const std::vector<Series>& series, const std::string& title,
                      const std::string& x_label, bool log_y, double floor = 1e-12);

/// Side-by-side line plots in one document.
std::string hstack(const std::vector<std::string>& documents, double width, double height);

}  // namespace dagscope::svg
