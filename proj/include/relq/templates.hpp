#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relq/kb.hpp"

namespace relq {

// A per-language question pattern for one property. {x} takes the entity
// surface (exactly once); {art} and {fill} take agreement forms.
struct Template {
  std::string template_id;
  std::string pid;
  std::string language;
  std::string pattern;
};

class TemplateSet {
 public:
  TemplateSet() = default;
  // The lookup table points into the template vector; moves keep those
  // addresses valid, copies would not.
  TemplateSet(const TemplateSet&) = delete;
  TemplateSet& operator=(const TemplateSet&) = delete;
  TemplateSet(TemplateSet&&) = default;
  TemplateSet& operator=(TemplateSet&&) = default;

  // TSV columns: template_id, pid, lang, pattern. Lines whose pattern does
  // not contain {x} exactly once (or that use unknown placeholders) are
  // rejected with a warning; a duplicate template_id is fatal.
  static TemplateSet load(const std::filesystem::path& path);

  const std::vector<Template>& all() const { return templates_; }
  const std::vector<const Template*>* find(const std::string& pid, const std::string& lang) const;
  size_t count(const std::string& pid, const std::string& lang) const;
  uint64_t rejected() const { return rejected_; }

 private:
  std::vector<Template> templates_;
  std::map<std::pair<std::string, std::string>, std::vector<const Template*>> by_pid_lang_;
  uint64_t rejected_ = 0;
};

// Validates placeholder grammar: {x} exactly once, only {x}/{art}/{fill}.
bool validate_pattern(const std::string& pattern, std::string* error = nullptr);

enum class GenderClass { Masculine, Feminine, Neuter, Unknown };

const char* gender_name(GenderClass g);

// Definite articles and gender fillers per language, from a TSV of
// (lang, slot, gender, form) rows. Slots: art, art_vowel (optional elided
// form used before vowel-initial surfaces), fill.
class AgreementTable {
 public:
  static AgreementTable load(const std::filesystem::path& path);
  // Unknown gender falls back to masculine forms before lookup.
  std::optional<std::string> form(const std::string& lang, const std::string& slot,
                                  GenderClass gender) const;

 private:
  std::map<std::string, std::string> forms_;  // "lang\x1fslot\x1fgender" -> form
};

// Per-language masculine/feminine pronoun lists for page-statistics gender
// inference, from a TSV of (lang, masculine-csv, feminine-csv) rows.
class PronounTable {
 public:
  static PronounTable load(const std::filesystem::path& path);
  const std::vector<std::string>* masculine(const std::string& lang) const;
  const std::vector<std::string>* feminine(const std::string& lang) const;

 private:
  std::map<std::string, std::pair<std::vector<std::string>, std::vector<std::string>>> table_;
};

// Cascade: an explicit sex-or-gender statement ("P21") wins; otherwise
// word-boundary pronoun counts over the page text decide, with ties (and
// absent pages) giving Unknown.
GenderClass infer_gender(const std::string& qid, const std::string& lang, const Kb& kb,
                         const PageDoc* page, const PronounTable& pronouns);

// Fills {x} with the surface and {art}/{fill} from the agreement table.
// Elided articles (ending in an apostrophe) attach directly to the next
// word; empty fillers never leave doubled spaces. Missing agreement forms
// raise FatalError("querify", "agreement-gap...").
std::string instantiate(const Template& tmpl, const std::string& entity_surface,
                        GenderClass gender, const AgreementTable& agreement);

}  // namespace relq
