#include "relq/match.hpp"

#include <algorithm>
#include <set>

#include "relq/util.hpp"

namespace relq {

std::vector<uint32_t> fold_cps(std::string_view s) {
  std::vector<uint32_t> cps;
  cps.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) cps.push_back(lower_cp(utf8_decode(s, i)));
  return cps;
}

namespace {

size_t count_occurrences(const std::vector<uint32_t>& hay, const std::vector<uint32_t>& needle,
                         bool stop_at_first) {
  if (needle.empty() || needle.size() > hay.size()) return 0;
  size_t count = 0;
  for (size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    if (!std::equal(needle.begin(), needle.end(), hay.begin() + static_cast<long>(i))) continue;
    if (i > 0 && is_alnum_cp(hay[i - 1])) continue;
    size_t after = i + needle.size();
    if (after < hay.size() && is_alnum_cp(hay[after])) continue;
    ++count;
    if (stop_at_first) return count;
  }
  return count;
}

}  // namespace

bool contains_word(const std::vector<uint32_t>& haystack, const std::vector<uint32_t>& needle) {
  return count_occurrences(haystack, needle, true) > 0;
}

bool contains_word(std::string_view haystack, std::string_view needle) {
  return contains_word(fold_cps(haystack), fold_cps(needle));
}

size_t count_word(const std::vector<uint32_t>& haystack, const std::vector<uint32_t>& needle) {
  return count_occurrences(haystack, needle, false);
}

std::vector<std::string> surfaces_for(const std::string& qid, const std::string& lang,
                                      const Kb& kb) {
  const KBEntity* e = kb.find(qid);
  if (e == nullptr) return {};
  const std::string* label = e->label(lang);
  if (label == nullptr) return {};

  std::vector<std::string> surfaces;
  std::set<std::string> seen;
  auto add = [&](const std::string& s) {
    if (!s.empty() && seen.insert(s).second) surfaces.push_back(s);
  };
  add(*label);
  if (const auto* aliases = e->alias_list(lang)) {
    for (const std::string& a : *aliases) add(a);
  }
  std::stable_sort(surfaces.begin(), surfaces.end(),
                   [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
  return surfaces;
}

}  // namespace relq
