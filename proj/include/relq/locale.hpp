#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "relq/kb.hpp"

namespace relq {

// Per-language rendering data loaded from a TSV of (lang, key, value) rows:
// month.1 .. month.12, date.day / date.month / date.year format strings with
// {d} {m} {y} placeholders, and decimal_sep.
class LocaleTable {
 public:
  static LocaleTable load(const std::filesystem::path& path);

  const std::string& month_name(const std::string& lang, int month) const;
  const std::string& date_format(const std::string& lang, TimePrecision precision) const;
  const std::string& decimal_sep(const std::string& lang) const;
  bool has_lang(const std::string& lang) const;

 private:
  const std::string& lookup(const std::string& lang, const std::string& key) const;
  std::map<std::string, std::map<std::string, std::string>> table_;  // lang -> key -> value
};

// "25 May 1994" for (1994-05-25, day, en); month and year precisions drop
// the finer components per the language's format string.
std::string render_time(const TimeValue& t, const std::string& lang, const LocaleTable& locale);

// Plain number with the language's decimal separator; the unit label is
// appended when the unit entity has a label in this language, otherwise the
// unit is omitted.
std::string render_quantity(const QuantityValue& q, const std::string& lang,
                            const LocaleTable& locale, const Kb& kb);

}  // namespace relq
