#include "relq/templates.hpp"

#include <iostream>
#include <set>

#include "relq/io.hpp"
#include "relq/match.hpp"
#include "relq/util.hpp"

namespace relq {

namespace {
constexpr const char* kSexOrGender = "P21";
constexpr const char* kSexMale = "Q6581097";
constexpr const char* kSexFemale = "Q6581072";
}  // namespace

bool validate_pattern(const std::string& pattern, std::string* error) {
  size_t x_count = 0;
  for (size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] != '{') continue;
    size_t close = pattern.find('}', i);
    if (close == std::string::npos) {
      if (error) *error = "unterminated placeholder";
      return false;
    }
    std::string name = pattern.substr(i + 1, close - i - 1);
    if (name == "x") {
      ++x_count;
    } else if (name != "art" && name != "fill") {
      if (error) *error = "unknown placeholder {" + name + "}";
      return false;
    }
    i = close;
  }
  if (x_count != 1) {
    if (error) *error = "pattern must contain {x} exactly once";
    return false;
  }
  return true;
}

TemplateSet TemplateSet::load(const std::filesystem::path& path) {
  TemplateSet set;
  std::set<std::string> seen_ids;
  std::vector<std::vector<std::string>> rows = read_tsv(path);
  set.templates_.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != 4) throw FatalError("querify", "expected 4 columns in " + path.string());
    Template t{row[0], row[1], row[2], row[3]};
    if (!seen_ids.insert(t.template_id).second) {
      throw FatalError("querify", "duplicate template_id: " + t.template_id);
    }
    std::string error;
    if (!validate_pattern(t.pattern, &error)) {
      std::cerr << "warning: rejecting template " << t.template_id << ": " << error << "\n";
      ++set.rejected_;
      continue;
    }
    set.templates_.push_back(std::move(t));
  }
  for (const Template& t : set.templates_) {
    set.by_pid_lang_[{t.pid, t.language}].push_back(&t);
  }
  return set;
}

const std::vector<const Template*>* TemplateSet::find(const std::string& pid,
                                                      const std::string& lang) const {
  auto it = by_pid_lang_.find({pid, lang});
  return it == by_pid_lang_.end() ? nullptr : &it->second;
}

size_t TemplateSet::count(const std::string& pid, const std::string& lang) const {
  const auto* v = find(pid, lang);
  return v == nullptr ? 0 : v->size();
}

const char* gender_name(GenderClass g) {
  switch (g) {
    case GenderClass::Masculine:
      return "masculine";
    case GenderClass::Feminine:
      return "feminine";
    case GenderClass::Neuter:
      return "neuter";
    case GenderClass::Unknown:
      return "unknown";
  }
  return "unknown";
}

AgreementTable AgreementTable::load(const std::filesystem::path& path) {
  AgreementTable t;
  for (const auto& row : read_tsv(path)) {
    // A trailing empty form may be dropped by tsv editors; 3 columns means
    // the form is the empty string.
    if (row.size() != 4 && row.size() != 3) {
      throw FatalError("querify", "expected 4 columns in " + path.string());
    }
    t.forms_[row[0] + "\x1f" + row[1] + "\x1f" + row[2]] = row.size() == 4 ? row[3] : "";
  }
  return t;
}

std::optional<std::string> AgreementTable::form(const std::string& lang, const std::string& slot,
                                                GenderClass gender) const {
  if (gender == GenderClass::Unknown) gender = GenderClass::Masculine;
  auto it = forms_.find(lang + "\x1f" + slot + "\x1f" + gender_name(gender));
  if (it == forms_.end()) return std::nullopt;
  return it->second;
}

PronounTable PronounTable::load(const std::filesystem::path& path) {
  PronounTable t;
  for (const auto& row : read_tsv(path)) {
    if (row.size() != 3) throw FatalError("querify", "expected 3 columns in " + path.string());
    t.table_[row[0]] = {split(row[1], ','), split(row[2], ',')};
  }
  return t;
}

const std::vector<std::string>* PronounTable::masculine(const std::string& lang) const {
  auto it = table_.find(lang);
  return it == table_.end() ? nullptr : &it->second.first;
}

const std::vector<std::string>* PronounTable::feminine(const std::string& lang) const {
  auto it = table_.find(lang);
  return it == table_.end() ? nullptr : &it->second.second;
}

GenderClass infer_gender(const std::string& qid, const std::string& lang, const Kb& kb,
                         const PageDoc* page, const PronounTable& pronouns) {
  if (const KBEntity* e = kb.find(qid)) {
    for (const Statement& s : e->statements) {
      if (s.pid != kSexOrGender) continue;
      if (const auto* ref = std::get_if<EntityRef>(&s.value)) {
        if (ref->qid == kSexMale) return GenderClass::Masculine;
        if (ref->qid == kSexFemale) return GenderClass::Feminine;
      }
    }
  }
  if (page == nullptr) return GenderClass::Unknown;
  const auto* masc = pronouns.masculine(lang);
  const auto* fem = pronouns.feminine(lang);
  if (masc == nullptr || fem == nullptr) return GenderClass::Unknown;

  std::vector<uint32_t> hay = fold_cps(page->text);
  size_t masc_count = 0;
  size_t fem_count = 0;
  for (const std::string& p : *masc) masc_count += count_word(hay, fold_cps(p));
  for (const std::string& p : *fem) fem_count += count_word(hay, fold_cps(p));
  if (masc_count > fem_count) return GenderClass::Masculine;
  if (fem_count > masc_count) return GenderClass::Feminine;
  return GenderClass::Unknown;
}

std::string instantiate(const Template& tmpl, const std::string& entity_surface,
                        GenderClass gender, const AgreementTable& agreement) {
  std::string out;
  out.reserve(tmpl.pattern.size() + entity_surface.size());
  const std::string& pattern = tmpl.pattern;

  bool surface_starts_with_vowel = false;
  if (!entity_surface.empty()) {
    size_t i = 0;
    surface_starts_with_vowel = is_vowel_cp(utf8_decode(entity_surface, i));
  }

  for (size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] != '{') {
      out += pattern[i];
      continue;
    }
    size_t close = pattern.find('}', i);
    std::string name = pattern.substr(i + 1, close - i - 1);
    std::string value;
    if (name == "x") {
      value = entity_surface;
    } else if (name == "art") {
      std::optional<std::string> form;
      if (surface_starts_with_vowel) form = agreement.form(tmpl.language, "art_vowel", gender);
      if (!form.has_value()) form = agreement.form(tmpl.language, "art", gender);
      if (!form.has_value()) {
        throw FatalError("querify", "agreement-gap: no article for " + tmpl.language + "/" +
                                        gender_name(gender) + " (template " + tmpl.template_id + ")");
      }
      value = *form;
    } else {  // fill
      std::optional<std::string> form = agreement.form(tmpl.language, "fill", gender);
      if (!form.has_value()) {
        throw FatalError("querify", "agreement-gap: no filler for " + tmpl.language + "/" +
                                        gender_name(gender) + " (template " + tmpl.template_id + ")");
      }
      value = *form;
    }
    out += value;
    i = close;
    // Elided articles glue to the following word.
    if (!value.empty() && value.back() == '\'' && i + 1 < pattern.size() && pattern[i + 1] == ' ') {
      ++i;
    }
  }

  // Empty fillers can leave doubled spaces behind.
  std::string collapsed;
  collapsed.reserve(out.size());
  for (char c : out) {
    if (c == ' ' && !collapsed.empty() && collapsed.back() == ' ') continue;
    collapsed += c;
  }
  return trim(collapsed);
}

}  // namespace relq
