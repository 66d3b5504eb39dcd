#include "relq/config.hpp"

#include <cstdlib>

#include "relq/io.hpp"
#include "relq/util.hpp"

namespace relq {

Config Config::load(const std::filesystem::path& path) {
  Config cfg;
  cfg.base_dir_ = path.has_parent_path() ? path.parent_path() : ".";
  for_each_line(path, [&](size_t lineno, const std::string& raw) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') return;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw FatalError("config", "missing '=' at " + path.string() + ":" + std::to_string(lineno));
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw FatalError("config", "empty key at " + path.string() + ":" + std::to_string(lineno));
    }
    cfg.values_[key] = value;
  });
  return cfg;
}

void Config::set(const std::string& key, const std::string& value) { values_[key] = value; }

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

std::string Config::get(const std::string& key, const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

std::string Config::require(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw FatalError("config", "missing required key: " + key);
  return it->second;
}

std::filesystem::path Config::path_for(const std::string& key) const {
  std::filesystem::path p = require(key);
  if (p.is_relative()) p = base_dir_ / p;
  return p;
}

double Config::get_double(const std::string& key, double fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw FatalError("config", "not a number: " + key + "=" + it->second);
  }
}

int Config::get_int(const std::string& key, int fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw FatalError("config", "not an integer: " + key + "=" + it->second);
  }
}

bool Config::get_bool(const std::string& key, bool fallback) const {
  auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const std::string& v = it->second;
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw FatalError("config", "not a boolean: " + key + "=" + v);
}

}  // namespace relq
