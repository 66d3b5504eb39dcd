#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace relq {

enum class TimePrecision { Year, Month, Day };

struct TimeValue {
  int year = 0;
  int month = 0;  // 1-12 when precision is Month or Day
  int day = 0;    // 1-31 when precision is Day
  TimePrecision precision = TimePrecision::Day;

  // "1994" / "1994-05" / "1994-05-25", depending on precision.
  std::string iso() const;
};

struct QuantityValue {
  double amount = 0.0;
  std::string unit_qid;  // empty when unitless
};

struct EntityRef {
  std::string qid;
};

struct TextValue {
  std::string text;
};

using Value = std::variant<EntityRef, TimeValue, QuantityValue, TextValue>;

// Language-invariant canonical key: the qid for entity values, the ISO date
// for times, the canonical decimal for quantities, the raw string for text.
std::string value_key(const Value& v);

struct Statement {
  std::string pid;
  Value value;
};

struct KBEntity {
  std::string qid;
  std::map<std::string, std::string> labels;                 // lang -> label
  std::map<std::string, std::vector<std::string>> aliases;   // lang -> aliases
  std::vector<Statement> statements;

  const std::string* label(const std::string& lang) const;
  const std::vector<std::string>* alias_list(const std::string& lang) const;
};

struct PageDoc {
  std::string qid;
  std::string language;
  std::string title;
  std::string text;
};

// Indexed entity collection. Entities keep stable addresses once the Kb is
// constructed.
class Kb {
 public:
  Kb() = default;
  explicit Kb(std::vector<KBEntity> entities);

  const KBEntity* find(const std::string& qid) const;
  const std::vector<KBEntity>& entities() const { return entities_; }
  size_t size() const { return entities_.size(); }

 private:
  std::vector<KBEntity> entities_;
  std::map<std::string, size_t> index_;
};

}  // namespace relq
