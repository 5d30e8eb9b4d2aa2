#include "dagscope/csv.hpp"

#include "dagscope/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace dagscope {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_number(std::string_view cell) {
  cell = trim(cell);
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  if (cell.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

// Splits one record. Quoted fields may contain commas and doubled quotes but
// not line breaks.
std::vector<std::string> split_record(std::string_view line, std::size_t line_no) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(std::move(cell));
      cell.clear();
    } else {
      cell.push_back(c);
    }
  }
  if (quoted) throw ParseError("unterminated quoted field on line " + std::to_string(line_no), line_no);
  cells.push_back(std::move(cell));
  return cells;
}

std::string quote_if_needed(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

}  // namespace

std::string format_double(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

CsvTable parse_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  CsvTable table;
  std::size_t width = 0;
  std::size_t line_no = 0;
  bool first_record = true;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;

    std::vector<std::string> cells = split_record(line, line_no);
    if (first_record) {
      first_record = false;
      width = cells.size();
      bool any_numeric = false;
      for (const auto& c : cells) any_numeric = any_numeric || parse_number(c).has_value();
      if (!any_numeric) {
        for (auto& c : cells) table.header.emplace_back(trim(c));
        continue;
      }
    }
    if (cells.size() != width) {
      throw ParseError("line " + std::to_string(line_no) + " has " + std::to_string(cells.size()) +
                           " fields, expected " + std::to_string(width),
                       line_no);
    }
    std::vector<double> row(width);
    for (std::size_t j = 0; j < width; ++j) {
      const auto v = parse_number(cells[j]);
      if (!v) {
        throw ParseError("non-numeric value '" + cells[j] + "' at line " + std::to_string(line_no) +
                             ", column " + std::to_string(j + 1),
                         line_no, j + 1);
      }
      row[j] = *v;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no numeric rows", line_no);

  table.values.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(width));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < width; ++j) table.values(i, j) = rows[i][j];
  }
  return table;
}

CsvTable read_csv_table(const std::filesystem::path& path) { return parse_csv(slurp(path)); }

Dataset read_csv(const std::filesystem::path& path) {
  CsvTable t = read_csv_table(path);
  if (t.values.rows() < 2) throw ParseError("dataset needs at least 2 rows", 0);
  if (t.values.cols() < 2) throw ParseError("dataset needs at least 2 columns", 0);
  return Dataset(std::move(t.values), std::move(t.header));
}

void write_matrix_csv(const DenseMatrix& m, const std::vector<std::string>& header,
                      std::ostream& out) {
  if (!header.empty()) {
    for (std::size_t j = 0; j < header.size(); ++j) {
      if (j) out << ',';
      out << quote_if_needed(header[j]);
    }
    out << '\n';
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

void write_matrix_csv(const DenseMatrix& m, const std::vector<std::string>& header,
                      const std::filesystem::path& path) {
  auto out = open_out(path);
  write_matrix_csv(m, header, out);
}

void write_csv(const Dataset& ds, const std::filesystem::path& path) {
  write_matrix_csv(ds.samples(), ds.names(), path);
}

DenseMatrix read_matrix_csv(const std::filesystem::path& path) { return read_csv_table(path).values; }

void write_adjacency_csv(const AdjacencyMatrix& adj, const std::vector<std::string>& header,
                         const std::filesystem::path& path) {
  auto out = open_out(path);
  if (!header.empty()) {
    for (std::size_t j = 0; j < header.size(); ++j) out << (j ? "," : "") << quote_if_needed(header[j]);
    out << '\n';
  }
  for (Eigen::Index i = 0; i < adj.rows(); ++i) {
    for (Eigen::Index j = 0; j < adj.cols(); ++j) out << (j ? "," : "") << (adj(i, j) ? '1' : '0');
    out << '\n';
  }
}

}  // namespace dagscope
