#include "aging/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace aging {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool valid_key(const std::string& key) {
  if (key.empty()) return false;
  for (char c : key) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& what) {
  std::ostringstream os;
  os << "config " << origin << ":" << line << ": " << what;
  throw ConfigError(os.str());
}

}  // namespace

ConfigMap parse_config_text(const std::string& text, const std::string& origin) {
  ConfigMap map;
  map.origin = origin;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail(origin, lineno, "expected key=value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!valid_key(key)) fail(origin, lineno, "invalid key '" + key + "'");
    if (value.empty()) fail(origin, lineno, "empty value for key '" + key + "'");
    if (!map.entries.emplace(key, value).second) fail(origin, lineno, "duplicate key '" + key + "'");
  }
  return map;
}

ConfigMap parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config " + path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), path);
}

double parse_number(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || end != begin + text.size()) {
    throw ConfigError(what + ": expected a number, got '" + text + "'");
  }
  return value;
}

ConfigReader::ConfigReader(const ConfigMap& map) : map_(map) {}

bool ConfigReader::has(const std::string& key) const { return map_.entries.count(key) != 0; }

std::string ConfigReader::take(const std::string& key, const std::string* fallback) {
  accepted_.insert(key);
  const auto it = map_.entries.find(key);
  if (it == map_.entries.end()) {
    if (!fallback) throw ConfigError("config " + map_.origin + ": missing required key '" + key + "'");
    resolved_[key] = *fallback;
    return *fallback;
  }
  resolved_[key] = it->second;
  return it->second;
}

std::string ConfigReader::text(const std::string& key) { return take(key, nullptr); }

std::string ConfigReader::text_or(const std::string& key, const std::string& fallback) {
  return take(key, &fallback);
}

double ConfigReader::number(const std::string& key) {
  return parse_number(take(key, nullptr), "config " + map_.origin + ", key '" + key + "'");
}

double ConfigReader::number_or(const std::string& key, double fallback) {
  std::ostringstream os;
  os.precision(17);
  os << fallback;
  const std::string def = os.str();
  return parse_number(take(key, &def), "config " + map_.origin + ", key '" + key + "'");
}

std::optional<double> ConfigReader::optional_number(const std::string& key) {
  accepted_.insert(key);
  const auto it = map_.entries.find(key);
  if (it == map_.entries.end()) return std::nullopt;
  resolved_[key] = it->second;
  return parse_number(it->second, "config " + map_.origin + ", key '" + key + "'");
}

bool ConfigReader::flag_or(const std::string& key, bool fallback) {
  const std::string def = fallback ? "true" : "false";
  const std::string value = take(key, &def);
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("config " + map_.origin + ", key '" + key + "': expected true/false, got '" +
                    value + "'");
}

std::vector<double> ConfigReader::number_list_or(const std::string& key) {
  const std::string empty;
  const std::string value = take(key, &empty);
  std::vector<double> out;
  if (value.empty()) return out;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::string token = trim(item);
    if (token.empty()) {
      throw ConfigError("config " + map_.origin + ", key '" + key + "': empty list element");
    }
    out.push_back(parse_number(token, "config " + map_.origin + ", key '" + key + "'"));
  }
  return out;
}

void ConfigReader::record(const std::string& key, const std::string& value) {
  accepted_.insert(key);
  resolved_[key] = value;
}

void ConfigReader::allow(const std::string& key) {
  accepted_.insert(key);
  const auto it = map_.entries.find(key);
  if (it != map_.entries.end()) resolved_[key] = it->second;
}

void ConfigReader::finish() const {
  std::vector<std::string> unknown;
  for (const auto& [key, value] : map_.entries) {
    (void)value;
    if (accepted_.count(key) == 0) unknown.push_back(key);
  }
  if (unknown.empty()) return;
  std::ostringstream os;
  os << "config " << map_.origin << ": unknown key";
  if (unknown.size() > 1) os << "s";
  for (std::size_t i = 0; i < unknown.size(); ++i) os << (i ? ", '" : " '") << unknown[i] << "'";
  os << "; accepted keys:";
  bool first = true;
  for (const auto& key : accepted_) {
    os << (first ? " " : ", ") << key;
    first = false;
  }
  throw ConfigError(os.str());
}

}  // namespace aging
