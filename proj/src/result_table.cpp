#include "rtrade/result_table.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rtrade {

namespace {

std::string format_value(double value, ColumnFormat format) {
  char buf[40];
  if (format == ColumnFormat::kInteger)
    std::snprintf(buf, sizeof(buf), "%.0f", value);
  else
    std::snprintf(buf, sizeof(buf), "%.16e", value);
  return buf;
}

}  // namespace

void ResultTable::add_metadata(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

void ResultTable::add_metadata(std::string key, double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  metadata.emplace_back(std::move(key), buf);
}

void ResultTable::add_metadata(std::string key, std::size_t value) {
  metadata.emplace_back(std::move(key), std::to_string(value));
}

void ResultTable::validate() const {
  if (!formats.empty() && formats.size() != columns.size())
    throw std::domain_error("ResultTable: formats width != columns width");
  for (const auto& row : rows)
    if (row.size() != columns.size())
      throw std::domain_error("ResultTable: row width != columns width");
}

void write_csv(const ResultTable& table, std::ostream& out) {
  table.validate();
  for (const auto& [key, value] : table.metadata)
    out << "# " << key << " = " << value << "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ",";
    out << table.columns[c];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ",";
      const ColumnFormat fmt =
          table.formats.empty() ? ColumnFormat::kScientific : table.formats[c];
      out << format_value(row[c], fmt);
    }
    out << "\n";
  }
}

std::string csv_string(const ResultTable& table) {
  std::ostringstream os;
  write_csv(table, os);
  return os.str();
}

void write_csv_file(const ResultTable& table,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // no newline translation
  if (!out)
    throw std::runtime_error("write_csv_file: cannot open " + path.string());
  out << csv_string(table);
  if (!out)
    throw std::runtime_error("write_csv_file: write failed for " +
                             path.string());
}

}  // namespace rtrade
