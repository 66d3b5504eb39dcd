#include "relq/locale.hpp"

#include "relq/io.hpp"
#include "relq/util.hpp"

namespace relq {

LocaleTable LocaleTable::load(const std::filesystem::path& path) {
  LocaleTable t;
  for (const auto& row : read_tsv(path)) {
    if (row.size() != 3) throw FatalError("locale", "expected 3 columns in " + path.string());
    t.table_[row[0]][row[1]] = row[2];
  }
  return t;
}

const std::string& LocaleTable::lookup(const std::string& lang, const std::string& key) const {
  auto lit = table_.find(lang);
  if (lit == table_.end()) throw FatalError("locale", "no locale data for language: " + lang);
  auto kit = lit->second.find(key);
  if (kit == lit->second.end()) {
    throw FatalError("locale", "missing locale key '" + key + "' for language: " + lang);
  }
  return kit->second;
}

const std::string& LocaleTable::month_name(const std::string& lang, int month) const {
  if (month < 1 || month > 12) throw FatalError("locale", "month out of range");
  return lookup(lang, "month." + std::to_string(month));
}

const std::string& LocaleTable::date_format(const std::string& lang, TimePrecision precision) const {
  switch (precision) {
    case TimePrecision::Day:
      return lookup(lang, "date.day");
    case TimePrecision::Month:
      return lookup(lang, "date.month");
    case TimePrecision::Year:
      return lookup(lang, "date.year");
  }
  throw FatalError("locale", "unsupported-precision");
}

std::string render_time(const TimeValue& t, const std::string& lang, const LocaleTable& locale) {
  const std::string& fmt = locale.date_format(lang, t.precision);
  std::string out;
  out.reserve(fmt.size() + 16);
  for (size_t i = 0; i < fmt.size(); ++i) {
    if (fmt[i] == '{' && i + 2 < fmt.size() && fmt[i + 2] == '}') {
      char c = fmt[i + 1];
      if (c == 'd') {
        out += std::to_string(t.day);
        i += 2;
        continue;
      }
      if (c == 'm') {
        out += locale.month_name(lang, t.month);
        i += 2;
        continue;
      }
      if (c == 'y') {
        out += std::to_string(t.year);
        i += 2;
        continue;
      }
    }
    out += fmt[i];
  }
  return out;
}

std::string render_quantity(const QuantityValue& q, const std::string& lang,
                            const LocaleTable& locale, const Kb& kb) {
  std::string number = canonical_decimal(q.amount);
  const std::string& sep = locale.decimal_sep(lang);
  if (sep != ".") {
    size_t dot = number.find('.');
    if (dot != std::string::npos) number = number.substr(0, dot) + sep + number.substr(dot + 1);
  }
  if (!q.unit_qid.empty()) {
    if (const KBEntity* unit = kb.find(q.unit_qid)) {
      if (const std::string* label = unit->label(lang)) {
        return number + " " + *label;
      }
    }
  }
  return number;
}

const std::string& LocaleTable::decimal_sep(const std::string& lang) const {
  return lookup(lang, "decimal_sep");
}

bool LocaleTable::has_lang(const std::string& lang) const { return table_.count(lang) > 0; }

}  // namespace relq
