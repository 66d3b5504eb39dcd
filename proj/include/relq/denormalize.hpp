#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relq/kb.hpp"
#include "relq/locale.hpp"

namespace relq {

// pid -> per-language property label, loaded from a (pid, lang, label) TSV.
class PropertyCatalog {
 public:
  static PropertyCatalog load(const std::filesystem::path& path);

  const std::string* label(const std::string& pid, const std::string& lang) const;
  bool has(const std::string& pid) const;
  std::vector<std::string> pids() const;

 private:
  std::map<std::string, std::map<std::string, std::string>> labels_;
};

struct DenormalizedTuple {
  std::string pid;
  std::string property_label;
  std::string value_text;   // per-language human-readable form
  std::string value_key;    // language-invariant canonical key
};

enum class SkipReason { UnknownProperty, UnlabeledValue };

const char* skip_reason_name(SkipReason r);

struct DenormalizeResult {
  std::optional<DenormalizedTuple> tuple;
  std::optional<SkipReason> skip;
};

// Replaces the statement's property and value ids with per-language text.
// Entity values resolve to the target entity's label; times and quantities
// render through the locale table; text values pass through. Statements that
// cannot be rendered in this language yield a skip signal, never an error.
DenormalizeResult denormalize_statement(const Statement& stmt, const std::string& lang,
                                        const Kb& kb, const PropertyCatalog& catalog,
                                        const LocaleTable& locale);

}  // namespace relq
