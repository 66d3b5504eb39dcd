#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "relq/slotfill.hpp"
#include "relq/templates.hpp"

namespace relq {

// One reading-comprehension example. answers is empty exactly when the
// example is a negative (NIL).
struct RCExample {
  std::string id;
  std::string triple_id;
  std::string template_id;
  std::string language;
  std::string question;
  std::string context;
  std::vector<std::string> answers;
  bool is_negative = false;
  bool gender_defaulted = false;  // audit: unknown gender fell back to masculine

  nlohmann::json to_json() const;
  static RCExample from_json(const nlohmann::json& j);
};

struct QuerifyCounts {
  uint64_t examples = 0;
  uint64_t positives = 0;
  uint64_t negatives = 0;
  uint64_t skipped_no_template = 0;  // contexts whose pid has no template in their language
  uint64_t gender_defaulted = 0;

  nlohmann::json to_json() const;
};

// Expands every context into one example per template of its (pid, language).
// The question slot takes the entity's label in that language; gender for
// agreement slots comes from infer_gender over the entity's page. Output is
// ordered by (triple_id, template_id, language, context kind).
std::vector<RCExample> querify_dataset(
    const std::vector<ContextRecord>& contexts, const Kb& kb,
    const std::map<std::pair<std::string, std::string>, const PageDoc*>& pages_by_qid_lang,
    const TemplateSet& templates, const AgreementTable& agreement, const PronounTable& pronouns,
    QuerifyCounts& counts);

void write_examples(const std::filesystem::path& path, const std::vector<RCExample>& examples);
std::vector<RCExample> read_examples(const std::filesystem::path& path);

}  // namespace relq
