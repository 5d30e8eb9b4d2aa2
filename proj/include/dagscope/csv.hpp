#pragma once

#include "dagscope/dataset.hpp"
#include "dagscope/matrix.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dagscope {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

/// Parsed numeric table: optional header plus a rectangular value block.
struct CsvTable {
  std::vector<std::string> header;
  DenseMatrix values;
};

/// Parse a numeric CSV. The first row is a header when none of its cells is
/// numeric. Throws ParseError (1-based line/column) on ragged rows, non-numeric
/// cells, or an empty body.
CsvTable parse_csv(std::string_view text);
CsvTable read_csv_table(const std::filesystem::path& path);

/// Read a dataset; requires n >= 2 and d >= 2.
Dataset read_csv(const std::filesystem::path& path);
void write_csv(const Dataset& ds, const std::filesystem::path& path);

/// Matrix writer. An empty header writes no header row.
void write_matrix_csv(const DenseMatrix& m, const std::vector<std::string>& header,
                      const std::filesystem::path& path);
void write_matrix_csv(const DenseMatrix& m, const std::vector<std::string>& header,
                      std::ostream& out);
DenseMatrix read_matrix_csv(const std::filesystem::path& path);

/// 0/1 adjacency CSV.
void write_adjacency_csv(const AdjacencyMatrix& adj, const std::vector<std::string>& header,
                         const std::filesystem::path& path);

}  // namespace dagscope
