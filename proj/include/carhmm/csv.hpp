#pragma once

#include <string>
#include <vector>

namespace carhmm {

// RFC 4180 record: fields may be quoted, quotes escaped by doubling, quoted
// fields may contain commas and newlines.
struct CsvRecord {
  std::vector<std::string> fields;
  long long line = 0;  // 1-based line where the record starts
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<CsvRecord> rows;

  // Column index by header name; throws ValidationError when absent.
  std::size_t column(const std::string& name, const std::string& file) const;
};

CsvTable read_csv_file(const std::string& path);
CsvTable parse_csv(const std::string& text, const std::string& path_for_errors);

// Quotes only when needed.  `fields` joined with ',' and terminated by '\n'.
std::string csv_escape(const std::string& field);

// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

}  // namespace carhmm
