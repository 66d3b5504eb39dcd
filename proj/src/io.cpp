#include "relq/io.hpp"

#include <fstream>
#include <sstream>

#include "relq/util.hpp"

namespace relq {

void for_each_line(const std::filesystem::path& path,
                   const std::function<void(size_t, const std::string&)>& fn) {
  std::ifstream in(path);
  if (!in) throw FatalError("io", "cannot open file: " + path.string());
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    fn(lineno, line);
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FatalError("io", "cannot open file for writing: " + path.string());
  out << content;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FatalError("io", "cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

json read_json_file(const std::filesystem::path& path) {
  try {
    return json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw FatalError("io", "invalid json in " + path.string() + ": " + e.what());
  }
}

void write_id_file(const std::filesystem::path& path, const std::vector<std::string>& ids) {
  std::string content;
  for (const auto& id : ids) {
    content += id;
    content += '\n';
  }
  write_text_file(path, content);
}

std::vector<std::string> read_id_file(const std::filesystem::path& path) {
  std::vector<std::string> ids;
  for_each_line(path, [&](size_t, const std::string& line) {
    if (!line.empty()) ids.push_back(line);
  });
  return ids;
}

std::vector<std::vector<std::string>> read_tsv(const std::filesystem::path& path) {
  std::vector<std::vector<std::string>> rows;
  for_each_line(path, [&](size_t, const std::string& line) {
    if (line.empty() || line[0] == '#') return;
    rows.push_back(split(line, '\t'));
  });
  return rows;
}

}  // namespace relq
