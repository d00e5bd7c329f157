#ifndef AGING_CSV_HPP
#define AGING_CSV_HPP

#include <string>
#include <vector>

namespace aging {

// Shortest round-trip decimal form, locale independent ("%.17g" with C locale
// semantics). Every numeric field in CSV, manifest, and SVG output goes
// through here so repeated runs are byte identical.
std::string format_field(double value);

// Writes to a sibling temporary file and renames over the target, so readers
// never observe a half-written file. Creates parent directories.
void write_file_atomic(const std::string& path, const std::string& content);

// Comma-separated table with '#' metadata lines. Header comments come first,
// then the column row, then data, then footer comments.
class CsvBuilder {
 public:
  void comment(const std::string& line);
  void columns(const std::vector<std::string>& names);
  void row(const std::vector<double>& values);
  void row_text(const std::vector<std::string>& fields);
  void footer(const std::string& line);
  std::string str() const;

 private:
  std::vector<std::string> head_;
  std::string column_row_;
  std::vector<std::string> rows_;
  std::vector<std::string> foot_;
};

}  // namespace aging

#endif
