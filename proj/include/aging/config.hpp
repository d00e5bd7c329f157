#ifndef AGING_CONFIG_HPP
#define AGING_CONFIG_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace aging {

// Raised for any defect in user-supplied configuration: unreadable file, bad
// syntax, unknown or duplicate keys, unparsable values. The CLI maps this to
// exit code 2; numerical failures map to exit code 3.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat key=value file. One assignment per line, '#' starts a comment, blank
// lines are skipped. Keys are [a-z0-9_]+ and may not repeat.
struct ConfigMap {
  std::string origin;  // path or "<memory>", used in diagnostics only
  std::map<std::string, std::string> entries;
};

ConfigMap parse_config_text(const std::string& text, const std::string& origin = "<memory>");
ConfigMap parse_config_file(const std::string& path);

// Typed accessor over a ConfigMap that tracks which keys were consumed.
// finish() rejects leftovers and names every accepted key, so a typo in a
// config file produces the full menu instead of a bare "unknown key".
// resolved() returns the effective value of every accepted key, defaults
// included, for embedding in output headers.
class ConfigReader {
 public:
  explicit ConfigReader(const ConfigMap& map);

  bool has(const std::string& key) const;

  std::string text(const std::string& key);
  std::string text_or(const std::string& key, const std::string& fallback);
  double number(const std::string& key);
  double number_or(const std::string& key, double fallback);
  // Accepts the key; std::nullopt when absent (no default is recorded).
  std::optional<double> optional_number(const std::string& key);
  bool flag_or(const std::string& key, bool fallback);
  // Comma-separated numbers; missing key yields an empty list.
  std::vector<double> number_list_or(const std::string& key);

  // Overrides the recorded effective value of an already-accepted key (used
  // when a command-line flag supersedes the file).
  void record(const std::string& key, const std::string& value);

  // Marks a key as accepted without requiring it or assigning a default.
  void allow(const std::string& key);

  void finish() const;

  const std::string& origin() const { return map_.origin; }
  const std::map<std::string, std::string>& resolved() const { return resolved_; }

 private:
  std::string take(const std::string& key, const std::string* fallback);

  ConfigMap map_;
  std::set<std::string> accepted_;
  std::map<std::string, std::string> resolved_;
};

double parse_number(const std::string& text, const std::string& what);

}  // namespace aging

#endif
