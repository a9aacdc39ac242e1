#ifndef PHILAB_CONFIG_HPP_
#define PHILAB_CONFIG_HPP_

#include <map>
#include <string>
#include <vector>

namespace philab {

/// One named experiment: `[name]` header followed by key = value lines.
struct ConfigSection {
  std::string name;
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) > 0; }
  const std::string& get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double_or(const std::string& key, double fallback) const;
  long get_int_or(const std::string& key, long fallback) const;
  bool get_bool_or(const std::string& key, bool fallback) const;
  std::vector<double> get_list(const std::string& key) const;
  std::vector<double> get_list_or(const std::string& key,
                                  const std::vector<double>& fallback) const;
};

/// Parses the diff-friendly sectioned key=value format.  `#` starts a
/// comment; blank lines are ignored; keys before any section header are a
/// config error.
std::vector<ConfigSection> parse_config_text(const std::string& text);
std::vector<ConfigSection> parse_config_file(const std::string& path);

/// Applies a `key=value` override to every section.
void apply_override(std::vector<ConfigSection>& sections,
                    const std::string& assignment);

}  // namespace philab

#endif  // PHILAB_CONFIG_HPP_
