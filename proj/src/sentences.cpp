#include "relq/sentences.hpp"

#include "relq/io.hpp"
#include "relq/util.hpp"

namespace relq {

AbbrevTable AbbrevTable::load(const std::filesystem::path& path) {
  AbbrevTable t;
  for (const auto& row : read_tsv(path)) {
    if (row.size() != 2) throw FatalError("sentences", "expected 2 columns in " + path.string());
    t.table_[row[0]].insert(row[1]);
  }
  return t;
}

bool AbbrevTable::contains(const std::string& lang, std::string_view token) const {
  auto it = table_.find(lang);
  return it != table_.end() && it->second.count(token) > 0;
}

namespace {

struct Cp {
  uint32_t cp;
  size_t begin;  // byte offset
  size_t end;
};

std::vector<Cp> decode_all(std::string_view text) {
  std::vector<Cp> cps;
  cps.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    size_t b = i;
    uint32_t cp = utf8_decode(text, i);
    cps.push_back({cp, b, i});
  }
  return cps;
}

bool is_terminator(uint32_t cp) { return cp == '.' || cp == '!' || cp == '?'; }

}  // namespace

std::vector<Sentence> segment_sentences(std::string_view text, const std::string& lang,
                                        const AbbrevTable& abbrev) {
  std::vector<Sentence> out;
  std::vector<Cp> cps = decode_all(text);
  size_t n = cps.size();

  size_t start = 0;  // index into cps
  while (start < n && is_space_cp(cps[start].cp)) ++start;
  if (start >= n) return out;

  size_t token_start = start;  // start of the current whitespace-delimited token
  for (size_t i = start; i < n; ++i) {
    if (is_space_cp(cps[i].cp)) {
      token_start = i + 1;
      continue;
    }
    if (!is_terminator(cps[i].cp)) continue;
    // Must be followed by whitespace, then an uppercase letter or digit.
    size_t j = i + 1;
    if (j >= n || !is_space_cp(cps[j].cp)) continue;
    while (j < n && is_space_cp(cps[j].cp)) ++j;
    if (j >= n || !(is_upper_cp(cps[j].cp) || is_digit_cp(cps[j].cp))) continue;
    if (cps[i].cp == '.') {
      std::string_view token =
          text.substr(cps[token_start].begin, cps[i].end - cps[token_start].begin);
      if (abbrev.contains(lang, token)) continue;
      // Ordinal day numbers and list markers ("am 11. März", "1. Kapitel"):
      // a one- or two-digit token ending in the period never closes a
      // sentence. Longer numbers (years) still do.
      size_t digits = i - token_start;
      if (digits >= 1 && digits <= 2) {
        bool all_digits = true;
        for (size_t k = token_start; k < i; ++k) {
          all_digits = all_digits && is_digit_cp(cps[k].cp);
        }
        if (all_digits) continue;
      }
    }
    Sentence s;
    s.begin = cps[start].begin;
    s.end = cps[i].end;
    s.text = std::string(text.substr(s.begin, s.end - s.begin));
    out.push_back(std::move(s));
    start = j;
    token_start = j;
    i = j - 1;  // loop increment lands on the next sentence's first codepoint
  }

  // Trailing sentence, trimmed of terminal whitespace.
  size_t last = n;
  while (last > start && is_space_cp(cps[last - 1].cp)) --last;
  if (last > start) {
    Sentence s;
    s.begin = cps[start].begin;
    s.end = cps[last - 1].end;
    s.text = std::string(text.substr(s.begin, s.end - s.begin));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace relq
