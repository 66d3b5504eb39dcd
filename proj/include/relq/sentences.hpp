#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace relq {

struct Sentence {
  std::string text;  // exact substring of the input
  size_t begin = 0;  // byte offsets, [begin, end)
  size_t end = 0;
};

// Per-language abbreviation list from a (lang, token) TSV. Tokens include
// their trailing period, e.g. "Dr.".
class AbbrevTable {
 public:
  static AbbrevTable load(const std::filesystem::path& path);
  bool contains(const std::string& lang, std::string_view token) const;

 private:
  std::map<std::string, std::set<std::string, std::less<>>> table_;
};

// Rule-based splitter: a sentence ends at '.', '!' or '?' followed by
// whitespace and an uppercase letter or digit, unless the token ending at
// the period is a known abbreviation for the language or a one- or
// two-digit ordinal number ("am 11. März"). Sentences are exact
// substrings; the skipped separators are pure whitespace, so joining
// sentences and separators reconstructs the input.
std::vector<Sentence> segment_sentences(std::string_view text, const std::string& lang,
                                        const AbbrevTable& abbrev);

}  // namespace relq
