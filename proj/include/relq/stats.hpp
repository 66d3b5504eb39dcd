#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "relq/querify.hpp"
#include "relq/slotfill.hpp"

namespace relq {

// Per-language counts: pos/neg over distinct (triple, language) contexts,
// pos_star/neg_star over templated examples, triples over distinct ids.
struct CountRow {
  uint64_t pos = 0;
  uint64_t neg = 0;
  uint64_t pos_star = 0;
  uint64_t neg_star = 0;
  uint64_t triples = 0;

  nlohmann::json to_json() const;
};

std::map<std::string, CountRow> count_table(const std::vector<ContextRecord>& contexts,
                                            const std::vector<RCExample>& examples);

// Positive-context counts per property, descending, ties broken by pid.
std::map<std::string, std::vector<std::pair<std::string, uint64_t>>> top_properties(
    const std::vector<ContextRecord>& contexts, size_t n = 10);

// Pairwise triple-id intersection sizes between languages, optionally
// restricted to one property. Symmetric; diagonal is the language's own
// distinct triple count.
struct OverlapMatrix {
  std::vector<std::string> languages;
  std::vector<std::vector<uint64_t>> matrix;
  std::optional<std::string> pid_filter;

  nlohmann::json to_json() const;
};

OverlapMatrix overlap_matrix(const std::vector<ContextRecord>& contexts,
                             const std::vector<std::string>& langs,
                             const std::optional<std::string>& pid_filter = std::nullopt);

// Mean whitespace-token count of the context, per language and split,
// rounded to integer. Splits with no examples are omitted rather than
// reported as zero.
std::map<std::string, std::map<std::string, int64_t>> context_length_stats(
    const std::vector<RCExample>& examples,
    const std::map<std::string, std::map<std::string, std::set<std::string>>>& split_ids);

// Type-level coverage of contexts and questions against a vocabulary, as a
// whole percentage. Types are lowercased tokens split on whitespace and
// punctuation.
struct CoverageRow {
  int64_t context_pct = 0;
  int64_t question_pct = 0;
  uint64_t context_types = 0;
  uint64_t question_types = 0;

  nlohmann::json to_json() const;
};

std::set<std::string> word_types(std::string_view text);

std::map<std::string, CoverageRow> vocab_coverage(
    const std::vector<RCExample>& examples,
    const std::map<std::string, std::set<std::string>>& vocab_by_lang);

}  // namespace relq
