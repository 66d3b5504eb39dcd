#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace relq {

using json = nlohmann::json;

// Calls fn(line_number, line) for every line (1-based). Throws FatalError
// on an unreadable file.
void for_each_line(const std::filesystem::path& path,
                   const std::function<void(size_t, const std::string&)>& fn);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

void write_json_file(const std::filesystem::path& path, const json& j);
json read_json_file(const std::filesystem::path& path);

// One id per line, given order.
void write_id_file(const std::filesystem::path& path, const std::vector<std::string>& ids);
std::vector<std::string> read_id_file(const std::filesystem::path& path);

// Rows of tab-separated fields; blank lines and lines starting with '#'
// are skipped.
std::vector<std::vector<std::string>> read_tsv(const std::filesystem::path& path);

}  // namespace relq
