#include "relq/normalize.hpp"

#include <algorithm>
#include <map>

#include "relq/util.hpp"

namespace relq {

std::vector<std::string> normalize_answer(std::string_view s, bool case_sensitive) {
  std::string cleaned;
  cleaned.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    uint32_t cp = utf8_decode(s, i);
    if (is_punct_cp(cp)) continue;
    if (is_space_cp(cp)) {
      cleaned.push_back(' ');
      continue;
    }
    utf8_append(cleaned, case_sensitive ? cp : lower_cp(cp));
  }
  std::vector<std::string> tokens = split_ws(cleaned);
  std::sort(tokens.begin(), tokens.end());
  return tokens;
}

bool contains_normalized_answer(std::string_view sentence, std::string_view answer,
                                bool case_sensitive) {
  std::vector<std::string> answer_bag = normalize_answer(answer, case_sensitive);
  if (answer_bag.empty()) return false;
  std::vector<std::string> sentence_bag = normalize_answer(sentence, case_sensitive);
  std::map<std::string, int> counts;
  for (const auto& t : sentence_bag) ++counts[t];
  for (const auto& t : answer_bag) {
    auto it = counts.find(t);
    if (it == counts.end() || it->second == 0) return false;
    --it->second;
  }
  return true;
}

}  // namespace relq
