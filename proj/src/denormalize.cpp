#include "relq/denormalize.hpp"

#include "relq/io.hpp"
#include "relq/util.hpp"

namespace relq {

PropertyCatalog PropertyCatalog::load(const std::filesystem::path& path) {
  PropertyCatalog c;
  for (const auto& row : read_tsv(path)) {
    if (row.size() != 3) throw FatalError("denormalize", "expected 3 columns in " + path.string());
    c.labels_[row[0]][row[1]] = row[2];
  }
  return c;
}

const std::string* PropertyCatalog::label(const std::string& pid, const std::string& lang) const {
  auto pit = labels_.find(pid);
  if (pit == labels_.end()) return nullptr;
  auto lit = pit->second.find(lang);
  return lit == pit->second.end() ? nullptr : &lit->second;
}

bool PropertyCatalog::has(const std::string& pid) const { return labels_.count(pid) > 0; }

std::vector<std::string> PropertyCatalog::pids() const {
  std::vector<std::string> out;
  out.reserve(labels_.size());
  for (const auto& [pid, langs] : labels_) {
    (void)langs;
    out.push_back(pid);
  }
  return out;
}

const char* skip_reason_name(SkipReason r) {
  switch (r) {
    case SkipReason::UnknownProperty:
      return "unknown-property";
    case SkipReason::UnlabeledValue:
      return "unlabeled-value";
  }
  return "unknown";
}

DenormalizeResult denormalize_statement(const Statement& stmt, const std::string& lang,
                                        const Kb& kb, const PropertyCatalog& catalog,
                                        const LocaleTable& locale) {
  const std::string* prop_label = catalog.label(stmt.pid, lang);
  if (prop_label == nullptr) return {std::nullopt, SkipReason::UnknownProperty};

  DenormalizedTuple t;
  t.pid = stmt.pid;
  t.property_label = *prop_label;
  t.value_key = value_key(stmt.value);

  if (const auto* ref = std::get_if<EntityRef>(&stmt.value)) {
    const KBEntity* target = kb.find(ref->qid);
    const std::string* label = target ? target->label(lang) : nullptr;
    if (label == nullptr) return {std::nullopt, SkipReason::UnlabeledValue};
    t.value_text = *label;
  } else if (const auto* time = std::get_if<TimeValue>(&stmt.value)) {
    t.value_text = render_time(*time, lang, locale);
  } else if (const auto* qty = std::get_if<QuantityValue>(&stmt.value)) {
    t.value_text = render_quantity(*qty, lang, locale, kb);
  } else {
    t.value_text = std::get<TextValue>(stmt.value).text;
  }
  return {std::move(t), std::nullopt};
}

}  // namespace relq
