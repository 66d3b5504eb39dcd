#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "relq/kb.hpp"

namespace relq {

struct IngestCounts {
  uint64_t kb_entities = 0;
  uint64_t kb_malformed = 0;
  uint64_t pages = 0;
  uint64_t pages_malformed = 0;
  uint64_t pages_empty = 0;
};

// Line-delimited JSON records, one entity per line. Malformed lines are
// reported to stderr with their line number, counted, and skipped.
std::vector<KBEntity> load_kb(const std::filesystem::path& path, IngestCounts& counts);

// Line-delimited page records for one language. Pages whose text is empty
// are dropped and counted; pages carrying a different language code are
// treated as malformed.
std::vector<PageDoc> load_corpus(const std::filesystem::path& path, const std::string& language,
                                 IngestCounts& counts);

struct DocumentView {
  std::string qid;
  std::string language;
  const PageDoc* page = nullptr;
  const KBEntity* entity = nullptr;
};

struct AlignCounts {
  uint64_t views = 0;
  uint64_t kb_only = 0;       // entity without a page in this language
  uint64_t corpus_only = 0;   // page without a KB entity
  uint64_t kb_unlabeled = 0;  // aligned but excluded: no label in this language
};

// One view per qid present in both inputs, ordered by qid. Entities without
// a label in the requested language are excluded (they cannot be slot-filled)
// and counted separately.
std::vector<DocumentView> align(const Kb& kb, const std::vector<PageDoc>& corpus,
                                const std::string& language, AlignCounts& counts);

}  // namespace relq
