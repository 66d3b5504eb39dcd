#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace relq {

// Token bag used for answer comparison: lowercased (unless case_sensitive),
// punctuation stripped, whitespace-split, sorted so that word order is
// discarded. Articles are kept.
std::vector<std::string> normalize_answer(std::string_view s, bool case_sensitive = false);

// True when the normalized answer's tokens are all contained (with
// multiplicity) in the normalized sentence. Empty answers never match.
bool contains_normalized_answer(std::string_view sentence, std::string_view answer,
                                bool case_sensitive = false);

}  // namespace relq
