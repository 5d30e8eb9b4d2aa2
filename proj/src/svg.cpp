#include "dagscope/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace dagscope::svg {

namespace {

constexpr double kCell = 22.0;
constexpr double kPanelGap = 18.0;
constexpr double kTitleHeight = 18.0;
constexpr double kLabelWidth = 26.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string diverging(double v, double limit) {
  double t = limit > 0.0 ? std::clamp(v / limit, -1.0, 1.0) : 0.0;
  // White to red (178, 24, 43) or white to blue (33, 102, 172).
  const double r_end = t >= 0.0 ? 178.0 : 33.0;
  const double g_end = t >= 0.0 ? 24.0 : 102.0;
  const double b_end = t >= 0.0 ? 43.0 : 172.0;
  t = std::abs(t);
  const auto mix = [&](double end) { return static_cast<int>(std::lround(255.0 + t * (end - 255.0))); };
  char buf[16];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", mix(r_end), mix(g_end), mix(b_end));
  return buf;
}

}  // namespace

std::string heatmap_grid(const std::vector<HeatmapPanel>& panels, std::size_t columns,
                         const std::vector<std::string>& labels, const std::string& title,
                         double limit) {
  columns = std::max<std::size_t>(columns, 1);
  if (limit <= 0.0) {
    for (const auto& p : panels) {
      if (p.values.size() > 0) limit = std::max(limit, p.values.cwiseAbs().maxCoeff());
    }
    if (limit <= 0.0) limit = 1.0;
  }
  const auto d = static_cast<double>(labels.size());
  const double panel_w = kLabelWidth + d * kCell;
  const double panel_h = kTitleHeight + kLabelWidth + d * kCell;
  const std::size_t rows = (panels.size() + columns - 1) / columns;
  const double width = static_cast<double>(columns) * (panel_w + kPanelGap) + kPanelGap;
  const double height = 40.0 + static_cast<double>(rows) * (panel_h + kPanelGap) + 30.0;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" font-family=\"sans-serif\" font-size=\"10\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << fmt(kPanelGap) << "\" y=\"24\" font-size=\"14\">" << escape(title) << "</text>\n";

  for (std::size_t k = 0; k < panels.size(); ++k) {
    const auto& p = panels[k];
    if (p.values.size() == 0) continue;
    const double x0 = kPanelGap + static_cast<double>(k % columns) * (panel_w + kPanelGap);
    const double y0 = 40.0 + static_cast<double>(k / columns) * (panel_h + kPanelGap);
    out << "<g>\n<text x=\"" << fmt(x0) << "\" y=\"" << fmt(y0 + 12.0) << "\">" << escape(p.title)
        << "</text>\n";
    const double gx = x0 + kLabelWidth;
    const double gy = y0 + kTitleHeight + kLabelWidth;
    for (std::size_t j = 0; j < labels.size(); ++j) {
      out << "<text x=\"" << fmt(gx + (static_cast<double>(j) + 0.5) * kCell) << "\" y=\""
          << fmt(gy - 6.0) << "\" text-anchor=\"middle\">" << escape(labels[j]) << "</text>\n";
      out << "<text x=\"" << fmt(gx - 4.0) << "\" y=\""
          << fmt(gy + (static_cast<double>(j) + 0.5) * kCell + 3.0) << "\" text-anchor=\"end\">"
          << escape(labels[j]) << "</text>\n";
    }
    for (Eigen::Index i = 0; i < p.values.rows(); ++i) {
      for (Eigen::Index j = 0; j < p.values.cols(); ++j) {
        out << "<rect x=\"" << fmt(gx + static_cast<double>(j) * kCell) << "\" y=\""
            << fmt(gy + static_cast<double>(i) * kCell) << "\" width=\"" << fmt(kCell)
            << "\" height=\"" << fmt(kCell) << "\" fill=\"" << diverging(p.values(i, j), limit)
            << "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"><title>" << fmt(p.values(i, j))
            << "</title></rect>\n";
      }
    }
    out << "</g>\n";
  }

  // Color bar.
  const double bar_y = height - 22.0;
  for (int s = 0; s <= 20; ++s) {
    const double v = limit * (static_cast<double>(s) / 10.0 - 1.0);
    out << "<rect x=\"" << fmt(kPanelGap + 40.0 + s * 8.0) << "\" y=\"" << fmt(bar_y)
        << "\" width=\"8.00\" height=\"8.00\" fill=\"" << diverging(v, limit) << "\"/>\n";
  }
  out << "<text x=\"" << fmt(kPanelGap) << "\" y=\"" << fmt(bar_y + 8.0) << "\">" << fmt(-limit)
      << "</text>\n<text x=\"" << fmt(kPanelGap + 40.0 + 21 * 8.0 + 4.0) << "\" y=\""
      << fmt(bar_y + 8.0) << "\">" << fmt(limit) << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string line_plot(const std::vector<Series>& series, const std::string& title,
                      const std::string& x_label, bool log_y, double floor) {
  constexpr double width = 420.0;
  constexpr double height = 300.0;
  constexpr double left = 60.0;
  constexpr double right = 110.0;
  constexpr double top = 34.0;
  constexpr double bottom = 40.0;

  const auto transform = [&](double v) { return log_y ? std::log10(std::max(v, floor)) : v; };
  const auto axis_label = [&](double t) {
    if (!log_y) return fmt(t);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2g", std::pow(10.0, t));
    return std::string(buf);
  };
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  std::size_t count = 0;
  for (const auto& s : series) {
    count = std::max(count, s.values.size());
    for (double v : s.values) {
      if (!std::isfinite(v)) continue;
      lo = std::min(lo, transform(v));
      hi = std::max(hi, transform(v));
    }
  }
  if (!std::isfinite(lo)) lo = hi = 0.0;
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;
  const auto px = [&](std::size_t k) {
    return left + (count > 1 ? static_cast<double>(k) / static_cast<double>(count - 1) : 0.5) * plot_w;
  };
  const auto py = [&](double v) { return top + (1.0 - (transform(v) - lo) / (hi - lo)) * plot_h; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" font-family=\"sans-serif\" font-size=\"10\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << fmt(left) << "\" y=\"20\" font-size=\"13\">" << escape(title) << "</text>\n";
  out << "<rect x=\"" << fmt(left) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(plot_w)
      << "\" height=\"" << fmt(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<text x=\"" << fmt(left - 4.0) << "\" y=\"" << fmt(top + 8.0) << "\" text-anchor=\"end\">"
      << axis_label(hi) << "</text>\n";
  out << "<text x=\"" << fmt(left - 4.0) << "\" y=\"" << fmt(top + plot_h) << "\" text-anchor=\"end\">"
      << axis_label(lo) << "</text>\n";
  out << "<text x=\"" << fmt(left + plot_w / 2.0) << "\" y=\"" << fmt(height - 10.0)
      << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n";
  out << "<text x=\"" << fmt(left) << "\" y=\"" << fmt(top + plot_h + 14.0) << "\">0</text>\n";
  out << "<text x=\"" << fmt(left + plot_w) << "\" y=\"" << fmt(top + plot_h + 14.0)
      << "\" text-anchor=\"end\">" << (count ? count - 1 : 0) << "</text>\n";

  double legend_y = top + 10.0;
  for (const auto& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < s.values.size(); ++k) {
      if (!std::isfinite(s.values[k])) continue;
      out << fmt(px(k)) << ',' << fmt(py(s.values[k])) << ' ';
    }
    out << "\"/>\n";
    out << "<line x1=\"" << fmt(width - right + 10.0) << "\" y1=\"" << fmt(legend_y) << "\" x2=\""
        << fmt(width - right + 28.0) << "\" y2=\"" << fmt(legend_y) << "\" stroke=\"" << s.color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << fmt(width - right + 32.0) << "\" y=\"" << fmt(legend_y + 3.0) << "\">"
        << escape(s.name) << "</text>\n";
    legend_y += 16.0;
  }
  out << "</svg>\n";
  return out.str();
}

std::string hstack(const std::vector<std::string>& documents, double width, double height) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width * static_cast<double>(documents.size()))
      << "\" height=\"" << fmt(height) << "\">\n";
  for (std::size_t k = 0; k < documents.size(); ++k) {
    out << "<g transform=\"translate(" << fmt(width * static_cast<double>(k)) << ",0)\">\n"
        << documents[k] << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace dagscope::svg
