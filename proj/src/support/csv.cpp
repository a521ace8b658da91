#include "support/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "support/errors.hpp"

namespace bsim {

const std::vector<double>& CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return columns[i];
  }
  fail(ErrorKind::io, "csv column not found: " + name);
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_cell(const std::string& cell, const std::string& origin,
                  std::size_t line_no) {
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  while (first != last && (*first == ' ' || *first == '\t')) ++first;
  while (last != first && (last[-1] == ' ' || last[-1] == '\t' ||
                           last[-1] == '\r'))
    --last;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    fail(ErrorKind::io, origin + ":" + std::to_string(line_no) +
                            ": cannot parse numeric cell '" + cell + "'");
  }
  return value;
}

}  // namespace

CsvTable parse_csv(const std::string& text, const std::string& origin) {
  CsvTable table;
  std::stringstream ss(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_line(line);
    if (table.header.empty()) {
      table.header = cells;
      table.columns.resize(cells.size());
      continue;
    }
    if (cells.size() != table.header.size()) {
      fail(ErrorKind::io, origin + ":" + std::to_string(line_no) +
                              ": expected " + std::to_string(table.header.size()) +
                              " cells, got " + std::to_string(cells.size()));
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      table.columns[i].push_back(parse_cell(cells[i], origin, line_no));
    }
  }
  if (table.header.empty()) fail(ErrorKind::io, origin + ": empty csv");
  return table;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str(), path);
}

}  // namespace bsim
