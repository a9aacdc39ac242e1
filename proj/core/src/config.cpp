#include "philab/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "philab/errors.hpp"

namespace philab {
namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

const std::string& ConfigSection::get(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end())
    throw config_error("[" + name + "] missing required key '" + key + "'");
  return it->second;
}

std::string ConfigSection::get_or(const std::string& key,
                                  const std::string& fallback) const {
  auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

double ConfigSection::get_double(const std::string& key) const {
  const std::string& raw = get(key);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(raw, &used);
  } catch (const std::exception&) {
    throw config_error("[" + name + "] key '" + key + "': not a number: " + raw);
  }
  if (used != raw.size())
    throw config_error("[" + name + "] key '" + key + "': not a number: " + raw);
  return v;
}

double ConfigSection::get_double_or(const std::string& key,
                                    double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

long ConfigSection::get_int_or(const std::string& key, long fallback) const {
  if (!has(key)) return fallback;
  const double v = get_double(key);
  const long n = static_cast<long>(v);
  if (static_cast<double>(n) != v)
    throw config_error("[" + name + "] key '" + key + "': not an integer");
  return n;
}

bool ConfigSection::get_bool_or(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const std::string& raw = get(key);
  if (raw == "true" || raw == "1") return true;
  if (raw == "false" || raw == "0") return false;
  throw config_error("[" + name + "] key '" + key + "': not a boolean: " + raw);
}

std::vector<double> ConfigSection::get_list(const std::string& key) const {
  const std::string& raw = get(key);
  std::vector<double> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw config_error("[" + name + "] key '" + key +
                         "': bad list element: " + item);
    }
  }
  if (out.empty())
    throw config_error("[" + name + "] key '" + key + "': empty list");
  return out;
}

std::vector<double> ConfigSection::get_list_or(
    const std::string& key, const std::vector<double>& fallback) const {
  return has(key) ? get_list(key) : fallback;
}

std::vector<ConfigSection> parse_config_text(const std::string& text) {
  std::vector<ConfigSection> sections;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw config_error("line " + std::to_string(lineno) +
                           ": unterminated section header");
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (name.empty())
        throw config_error("line " + std::to_string(lineno) +
                           ": empty section name");
      sections.push_back(ConfigSection{name, {}});
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw config_error("line " + std::to_string(lineno) +
                         ": expected key = value");
    if (sections.empty())
      throw config_error("line " + std::to_string(lineno) +
                         ": key outside any [section]");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw config_error("line " + std::to_string(lineno) + ": empty key");
    sections.back().values[key] = value;
  }
  if (sections.empty()) throw config_error("config contains no sections");
  return sections;
}

std::vector<ConfigSection> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

void apply_override(std::vector<ConfigSection>& sections,
                    const std::string& assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw config_error("override must have the form key=value: " + assignment);
  const std::string key = trim(assignment.substr(0, eq));
  const std::string value = trim(assignment.substr(eq + 1));
  for (auto& section : sections) section.values[key] = value;
}

}  // namespace philab
