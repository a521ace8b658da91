#pragma once

#include <string>
#include <vector>

namespace bsim {

// Plain numeric CSV with a mandatory header row. All cells must parse as
// doubles; rows must match the header width.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;  // column-major

  std::size_t rows() const { return columns.empty() ? 0 : columns[0].size(); }
  const std::vector<double>& column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);
CsvTable parse_csv(const std::string& text, const std::string& origin);

}  // namespace bsim
