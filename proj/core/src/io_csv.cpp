#include <charconv>
#include <fstream>
#include <sstream>

#include "pulsefront/errors.hpp"
#include "pulsefront/io.hpp"

namespace pulsefront::io {

namespace {

// Shortest representation that round-trips the double exactly.
std::string format_number(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

const std::vector<double>& Csv::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return columns[i];
  throw MissingColumn("no column named '" + name + "'");
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
  if (header.size() != columns.size())
    throw InvalidRequest("csv header and column counts differ");
  std::ofstream out(path);
  if (!out) throw BadConfig("cannot write '" + path + "'");
  for (std::size_t i = 0; i < header.size(); ++i)
    out << (i ? "," : "") << header[i];
  out << '\n';
  const std::size_t rows = columns.empty() ? 0 : columns[0].size();
  for (const auto& col : columns)
    if (col.size() != rows) throw InvalidRequest("ragged csv columns");
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c)
      out << (c ? "," : "") << format_number(columns[c][r]);
    out << '\n';
  }
}

Csv read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadConfig("cannot open '" + path + "'");
  Csv csv;
  std::string line;
  if (!std::getline(in, line) || line.empty())
    throw BadConfig("empty CSV '" + path + "'");
  {
    std::istringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) csv.header.push_back(cell);
  }
  csv.columns.assign(csv.header.size(), {});
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string cell;
    std::size_t c = 0;
    while (std::getline(ss, cell, ',')) {
      if (c >= csv.header.size())
        throw BadConfig("too many cells on line " + std::to_string(line_no));
      try {
        csv.columns[c].push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw BadConfig("non-numeric cell '" + cell + "' on line " +
                        std::to_string(line_no));
      }
      ++c;
    }
    if (c != csv.header.size())
      throw BadConfig("short row on line " + std::to_string(line_no));
  }
  return csv;
}

}  // namespace pulsefront::io
