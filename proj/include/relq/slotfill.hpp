#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "relq/denormalize.hpp"
#include "relq/ingest.hpp"
#include "relq/kb.hpp"
#include "relq/match.hpp"
#include "relq/sentences.hpp"

namespace relq {

// Distractor grouping key for negatives: the instance-of class of an entity
// value ("E:<qid>"), the literal kind ("L:time" etc.), or "untyped" when an
// entity value has no instance-of statement.
struct TypeKey {
  std::string key;
  bool operator==(const TypeKey&) const = default;
  auto operator<=>(const TypeKey&) const = default;
};

// First instance-of ("P31") class of the referenced entity, by statement
// order; literals map to their kind.
TypeKey entity2_type(const Value& value, const Kb& kb);

// A language-independent fact. The id is identical for the same fact in
// every language, so parallel examples can be joined across languages.
struct Triple {
  std::string id;  // entity1|pid|value_key
  std::string entity1_qid;
  std::string pid;
  std::string value_key;
  std::map<std::string, std::vector<std::string>> answer_texts;  // lang -> answers

  nlohmann::json to_json() const;
  static Triple from_json(const nlohmann::json& j);
};

std::string make_triple_id(const std::string& entity1_qid, const std::string& pid,
                           const std::string& vkey);
std::string entity1_of_triple(const std::string& triple_id);
std::string pid_of_triple(const std::string& triple_id);

struct PositiveContext {
  std::string triple_id;
  std::string language;
  std::string sentence;
  std::vector<std::string> answer_strings;  // entity2 surfaces found in the sentence
  std::string entity1_surface;              // surface actually matched in the sentence
  // Carried for triple assembly and negative construction.
  std::string entity1_qid;
  std::string pid;
  std::string value_key;
  TypeKey type_key;
};

struct NegativeContext {
  std::string triple_id;
  std::string language;
  std::string sentence;  // borrowed verbatim from the partner's positive
  std::string partner_triple_id;
};

struct JointMatch {
  size_t sentence_index = 0;
  std::string entity1_surface;
  std::vector<std::string> entity2_surfaces;
};

// Earliest sentence containing at least one entity1 surface and at least one
// entity2 surface as word-boundary, case-insensitive matches. Surface lists
// are expected longest-first; the matched entity1 surface is the first that
// hits, and all matching entity2 surfaces are reported.
std::optional<JointMatch> find_first_joint_sentence(const std::vector<Sentence>& sentences,
                                                    const std::vector<std::string>& e1_surfaces,
                                                    const std::vector<std::string>& e2_surfaces);

struct SlotfillCounts {
  uint64_t tuples = 0;
  uint64_t positives = 0;
  uint64_t misses = 0;  // tuples with no joint sentence
  uint64_t skip_unknown_property = 0;
  uint64_t skip_unlabeled_value = 0;
  uint64_t zero_tuple_views = 0;
  uint64_t negatives = 0;
  uint64_t no_partner = 0;  // positives that wanted a negative but found none

  nlohmann::json to_json() const;
};

// One positive per (triple, language): the first sentence of the entity's
// page that contains both the entity and the denormalized value. Output is
// ordered by triple id.
std::vector<PositiveContext> build_positives(const std::vector<DocumentView>& views,
                                             const Kb& kb, const PropertyCatalog& catalog,
                                             const LocaleTable& locale, const AbbrevTable& abbrev,
                                             const std::string& lang, SlotfillCounts& counts);

// Type-matched context swapping. Positives are grouped by TypeKey; each
// positive draws its quota of negatives (ratio spread evenly over the group
// in triple-id order, so the set of positives that receive a negative does
// not depend on the seed) from a seeded shuffle of its group, skipping
// partners whose sentence contains any of its normalized answers.
std::vector<NegativeContext> build_negatives(const std::vector<PositiveContext>& positives,
                                             double ratio, uint64_t seed, SlotfillCounts& counts);

// Merges per-language positives into language-independent triples, keyed by id.
std::vector<Triple> collect_triples(const std::vector<std::vector<PositiveContext>>& per_language);

// contexts.jsonl record: answers present for positives, null for negatives.
struct ContextRecord {
  std::string triple_id;
  std::string language;
  std::string sentence;
  std::optional<std::vector<std::string>> answers;
  std::string partner_triple_id;  // negatives only
  std::string entity1_surface;    // positives only

  bool is_negative() const { return !answers.has_value(); }
  nlohmann::json to_json() const;
  static ContextRecord from_json(const nlohmann::json& j);
};

void write_triples(const std::filesystem::path& path, const std::vector<Triple>& triples);
std::vector<Triple> read_triples(const std::filesystem::path& path);
void write_contexts(const std::filesystem::path& path, const std::vector<ContextRecord>& contexts);
std::vector<ContextRecord> read_contexts(const std::filesystem::path& path);

}  // namespace relq
