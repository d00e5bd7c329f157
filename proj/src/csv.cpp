#include "aging/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aging {

std::string format_field(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path temp = target.parent_path() / (target.filename().string() + ".tmp");
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + temp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("short write to " + temp.string());
  }
  fs::rename(temp, target);
}

void CsvBuilder::comment(const std::string& line) { head_.push_back("# " + line); }

void CsvBuilder::columns(const std::vector<std::string>& names) {
  std::ostringstream os;
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
  column_row_ = os.str();
}

void CsvBuilder::row(const std::vector<double>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << format_field(values[i]);
  rows_.push_back(os.str());
}

void CsvBuilder::row_text(const std::vector<std::string>& fields) {
  std::ostringstream os;
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << fields[i];
  rows_.push_back(os.str());
}

void CsvBuilder::footer(const std::string& line) { foot_.push_back("# " + line); }

std::string CsvBuilder::str() const {
  std::ostringstream os;
  for (const auto& line : head_) os << line << "\n";
  if (!column_row_.empty()) os << column_row_ << "\n";
  for (const auto& line : rows_) os << line << "\n";
  for (const auto& line : foot_) os << line << "\n";
  return os.str();
}

}  // namespace aging
