#include "relq/kb.hpp"

#include "relq/util.hpp"

namespace relq {

std::string TimeValue::iso() const {
  char buf[16];
  switch (precision) {
    case TimePrecision::Year:
      std::snprintf(buf, sizeof(buf), "%04d", year);
      break;
    case TimePrecision::Month:
      std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
      break;
    case TimePrecision::Day:
      std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
      break;
  }
  return buf;
}

std::string value_key(const Value& v) {
  if (const auto* e = std::get_if<EntityRef>(&v)) return e->qid;
  if (const auto* t = std::get_if<TimeValue>(&v)) return t->iso();
  if (const auto* q = std::get_if<QuantityValue>(&v)) return canonical_decimal(q->amount);
  return std::get<TextValue>(v).text;
}

const std::string* KBEntity::label(const std::string& lang) const {
  auto it = labels.find(lang);
  return it == labels.end() ? nullptr : &it->second;
}

const std::vector<std::string>* KBEntity::alias_list(const std::string& lang) const {
  auto it = aliases.find(lang);
  return it == aliases.end() ? nullptr : &it->second;
}

Kb::Kb(std::vector<KBEntity> entities) : entities_(std::move(entities)) {
  for (size_t i = 0; i < entities_.size(); ++i) index_[entities_[i].qid] = i;
}

const KBEntity* Kb::find(const std::string& qid) const {
  auto it = index_.find(qid);
  return it == index_.end() ? nullptr : &entities_[it->second];
}

}  // namespace relq
