#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace relq {

// Flat key-value configuration. Relative path values resolve against the
// directory containing the config file, so runs are reproducible from any
// working directory.
class Config {
 public:
  Config() = default;
  static Config load(const std::filesystem::path& path);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;
  std::string get(const std::string& key, const std::string& fallback = "") const;
  std::string require(const std::string& key) const;  // FatalError if absent
  std::filesystem::path path_for(const std::string& key) const;

  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  const std::map<std::string, std::string>& values() const { return values_; }
  const std::filesystem::path& base_dir() const { return base_dir_; }
  void set_base_dir(std::filesystem::path dir) { base_dir_ = std::move(dir); }

 private:
  std::map<std::string, std::string> values_;
  std::filesystem::path base_dir_ = ".";
};

}  // namespace relq
