#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "relq/kb.hpp"

namespace relq {

// Case-folded codepoint sequence; fold once, search many times.
std::vector<uint32_t> fold_cps(std::string_view s);

// Case-insensitive word-boundary substring match: an occurrence counts only
// when the codepoints adjacent to it are not letters or digits.
bool contains_word(const std::vector<uint32_t>& haystack, const std::vector<uint32_t>& needle);
bool contains_word(std::string_view haystack, std::string_view needle);

// Counts word-boundary occurrences (used by pronoun-based gender inference).
size_t count_word(const std::vector<uint32_t>& haystack, const std::vector<uint32_t>& needle);

// Known surface forms of an entity in one language: label first, then
// aliases, deduplicated, then ordered longest-first (stable). Empty when the
// entity has no label in this language.
std::vector<std::string> surfaces_for(const std::string& qid, const std::string& lang, const Kb& kb);

}  // namespace relq
