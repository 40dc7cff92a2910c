#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace rtrade {

// How a column is rendered in CSV output.
enum class ColumnFormat {
  kScientific,  // %.16e, 17 significant digits: round-trips a double exactly
  kInteger,     // value is a whole number, rendered without a decimal point
};

// A rectangular numeric result with enough metadata to reproduce it.
// Serialized as '#'-prefixed key = value lines, then a header row, then one
// CSV line per row.  Equal inputs give byte-identical output.
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<ColumnFormat> formats;  // per column; kScientific when empty
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;  // in order

  void add_metadata(std::string key, std::string value);
  void add_metadata(std::string key, double value);    // %.17g
  void add_metadata(std::string key, std::size_t value);

  // Throws std::domain_error if any row width differs from columns.size() or
  // formats (when present) has the wrong width.
  void validate() const;
};

void write_csv(const ResultTable& table, std::ostream& out);

std::string csv_string(const ResultTable& table);

// Writes via csv_string so file bytes match the in-memory serialization.
void write_csv_file(const ResultTable& table,
                    const std::filesystem::path& path);

}  // namespace rtrade
