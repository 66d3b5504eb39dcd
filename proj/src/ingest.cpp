#include "relq/ingest.hpp"

#include <algorithm>
#include <iostream>

#include "relq/io.hpp"
#include "relq/util.hpp"

namespace relq {

namespace {

TimeValue parse_time(const json& v) {
  TimeValue t;
  std::string prec = v.at("precision").get<std::string>();
  if (prec == "year") {
    t.precision = TimePrecision::Year;
  } else if (prec == "month") {
    t.precision = TimePrecision::Month;
  } else if (prec == "day") {
    t.precision = TimePrecision::Day;
  } else {
    throw std::runtime_error("unsupported-precision: " + prec);
  }
  std::vector<std::string> parts = split(v.at("date").get<std::string>(), '-');
  size_t needed = t.precision == TimePrecision::Year ? 1 : t.precision == TimePrecision::Month ? 2 : 3;
  if (parts.size() < needed) throw std::runtime_error("date has too few components");
  t.year = std::stoi(parts[0]);
  if (needed >= 2) t.month = std::stoi(parts[1]);
  if (needed >= 3) t.day = std::stoi(parts[2]);
  if (t.year < 1) throw std::runtime_error("year out of range");
  if (needed >= 2 && (t.month < 1 || t.month > 12)) throw std::runtime_error("month out of range");
  if (needed >= 3 && (t.day < 1 || t.day > 31)) throw std::runtime_error("day out of range");
  return t;
}

Value parse_value(const json& stmt) {
  std::string type = stmt.at("type").get<std::string>();
  const json& v = stmt.at("value");
  if (type == "entity") return EntityRef{v.get<std::string>()};
  if (type == "time") return parse_time(v);
  if (type == "quantity") {
    QuantityValue q;
    q.amount = v.at("amount").get<double>();
    if (!std::isfinite(q.amount)) throw std::runtime_error("quantity amount not finite");
    if (v.contains("unit")) q.unit_qid = v.at("unit").get<std::string>();
    return q;
  }
  if (type == "text") return TextValue{v.get<std::string>()};
  throw std::runtime_error("unknown statement type: " + type);
}

KBEntity parse_entity(const json& j) {
  KBEntity e;
  e.qid = j.at("qid").get<std::string>();
  if (e.qid.empty()) throw std::runtime_error("empty qid");
  if (j.contains("labels")) {
    for (const auto& [lang, label] : j.at("labels").items()) {
      e.labels[lang] = label.get<std::string>();
    }
  }
  if (j.contains("aliases")) {
    for (const auto& [lang, arr] : j.at("aliases").items()) {
      e.aliases[lang] = arr.get<std::vector<std::string>>();
    }
  }
  if (j.contains("statements")) {
    for (const auto& s : j.at("statements")) {
      Statement stmt;
      stmt.pid = s.at("pid").get<std::string>();
      if (stmt.pid.empty()) throw std::runtime_error("empty pid");
      stmt.value = parse_value(s);
      e.statements.push_back(std::move(stmt));
    }
  }
  return e;
}

}  // namespace

std::vector<KBEntity> load_kb(const std::filesystem::path& path, IngestCounts& counts) {
  std::vector<KBEntity> entities;
  for_each_line(path, [&](size_t lineno, const std::string& line) {
    if (line.empty()) return;
    try {
      entities.push_back(parse_entity(json::parse(line)));
      ++counts.kb_entities;
    } catch (const std::exception& e) {
      ++counts.kb_malformed;
      std::cerr << "warning: skipping malformed kb record at " << path.filename().string() << ":"
                << lineno << ": " << e.what() << "\n";
    }
  });
  return entities;
}

std::vector<PageDoc> load_corpus(const std::filesystem::path& path, const std::string& language,
                                 IngestCounts& counts) {
  std::vector<PageDoc> pages;
  for_each_line(path, [&](size_t lineno, const std::string& line) {
    if (line.empty()) return;
    try {
      json j = json::parse(line);
      PageDoc p;
      p.qid = j.at("qid").get<std::string>();
      p.language = j.at("language").get<std::string>();
      p.title = j.value("title", "");
      p.text = j.at("text").get<std::string>();
      if (p.qid.empty()) throw std::runtime_error("empty qid");
      if (p.language != language) throw std::runtime_error("unexpected language: " + p.language);
      if (p.text.empty()) {
        ++counts.pages_empty;
        return;
      }
      pages.push_back(std::move(p));
      ++counts.pages;
    } catch (const std::exception& e) {
      ++counts.pages_malformed;
      std::cerr << "warning: skipping malformed page record at " << path.filename().string() << ":"
                << lineno << ": " << e.what() << "\n";
    }
  });
  return pages;
}

std::vector<DocumentView> align(const Kb& kb, const std::vector<PageDoc>& corpus,
                                const std::string& language, AlignCounts& counts) {
  std::map<std::string, const PageDoc*> pages_by_qid;
  for (const PageDoc& p : corpus) pages_by_qid.emplace(p.qid, &p);

  std::vector<DocumentView> views;
  std::map<std::string, const KBEntity*> kb_by_qid;
  for (const KBEntity& e : kb.entities()) kb_by_qid.emplace(e.qid, &e);

  for (const auto& [qid, entity] : kb_by_qid) {
    auto it = pages_by_qid.find(qid);
    if (it == pages_by_qid.end()) {
      ++counts.kb_only;
      continue;
    }
    if (entity->label(language) == nullptr) {
      ++counts.kb_unlabeled;
      continue;
    }
    views.push_back(DocumentView{qid, language, it->second, entity});
    ++counts.views;
  }
  for (const auto& [qid, page] : pages_by_qid) {
    (void)page;
    if (!kb_by_qid.count(qid)) ++counts.corpus_only;
  }
  // kb_by_qid iteration is already qid-ordered, so views are too.
  return views;
}

}  // namespace relq
