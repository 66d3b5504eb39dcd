#include "relq/stats.hpp"

#include <algorithm>
#include <cmath>

#include "relq/util.hpp"

namespace relq {

nlohmann::json CountRow::to_json() const {
  return nlohmann::json{
      {"pos", pos}, {"neg", neg}, {"pos_star", pos_star}, {"neg_star", neg_star},
      {"triples", triples}};
}

std::map<std::string, CountRow> count_table(const std::vector<ContextRecord>& contexts,
                                            const std::vector<RCExample>& examples) {
  std::map<std::string, CountRow> rows;
  std::map<std::string, std::set<std::string>> triples_by_lang;
  for (const ContextRecord& c : contexts) {
    CountRow& row = rows[c.language];
    if (c.is_negative()) {
      ++row.neg;
    } else {
      ++row.pos;
    }
    triples_by_lang[c.language].insert(c.triple_id);
  }
  for (const RCExample& e : examples) {
    CountRow& row = rows[e.language];
    if (e.is_negative) {
      ++row.neg_star;
    } else {
      ++row.pos_star;
    }
  }
  for (auto& [lang, row] : rows) row.triples = triples_by_lang[lang].size();
  return rows;
}

std::map<std::string, std::vector<std::pair<std::string, uint64_t>>> top_properties(
    const std::vector<ContextRecord>& contexts, size_t n) {
  std::map<std::string, std::map<std::string, uint64_t>> counts;
  for (const ContextRecord& c : contexts) {
    if (c.is_negative()) continue;
    ++counts[c.language][pid_of_triple(c.triple_id)];
  }
  std::map<std::string, std::vector<std::pair<std::string, uint64_t>>> out;
  for (const auto& [lang, by_pid] : counts) {
    std::vector<std::pair<std::string, uint64_t>> ranked(by_pid.begin(), by_pid.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    if (ranked.size() > n) ranked.resize(n);
    out[lang] = std::move(ranked);
  }
  return out;
}

nlohmann::json OverlapMatrix::to_json() const {
  nlohmann::json j{{"languages", languages}, {"matrix", matrix}};
  if (pid_filter.has_value()) {
    j["pid"] = *pid_filter;
  } else {
    j["pid"] = nullptr;
  }
  return j;
}

OverlapMatrix overlap_matrix(const std::vector<ContextRecord>& contexts,
                             const std::vector<std::string>& langs,
                             const std::optional<std::string>& pid_filter) {
  std::map<std::string, std::set<std::string>> ids_by_lang;
  for (const ContextRecord& c : contexts) {
    if (pid_filter.has_value() && pid_of_triple(c.triple_id) != *pid_filter) continue;
    ids_by_lang[c.language].insert(c.triple_id);
  }

  OverlapMatrix m;
  m.languages = langs;
  m.pid_filter = pid_filter;
  m.matrix.assign(langs.size(), std::vector<uint64_t>(langs.size(), 0));
  for (size_t i = 0; i < langs.size(); ++i) {
    const auto& a = ids_by_lang[langs[i]];
    for (size_t j = i; j < langs.size(); ++j) {
      const auto& b = ids_by_lang[langs[j]];
      uint64_t inter = 0;
      for (const std::string& id : a) inter += b.count(id);
      m.matrix[i][j] = inter;
      m.matrix[j][i] = inter;
    }
  }
  return m;
}

std::map<std::string, std::map<std::string, int64_t>> context_length_stats(
    const std::vector<RCExample>& examples,
    const std::map<std::string, std::map<std::string, std::set<std::string>>>& split_ids) {
  std::map<std::string, std::map<std::string, std::pair<uint64_t, uint64_t>>> acc;
  for (const RCExample& e : examples) {
    uint64_t tokens = split_ws(e.context).size();
    auto lit = split_ids.find(e.language);
    if (lit == split_ids.end()) continue;
    for (const auto& [split_name, ids] : lit->second) {
      if (!ids.count(e.id)) continue;
      auto& [sum, count] = acc[e.language][split_name];
      sum += tokens;
      ++count;
    }
  }
  std::map<std::string, std::map<std::string, int64_t>> out;
  for (const auto& [lang, by_split] : acc) {
    for (const auto& [split_name, sum_count] : by_split) {
      if (sum_count.second == 0) continue;  // empty split: absent, not zero
      out[lang][split_name] = std::llround(static_cast<double>(sum_count.first) /
                                           static_cast<double>(sum_count.second));
    }
  }
  return out;
}

std::set<std::string> word_types(std::string_view text) {
  std::set<std::string> types;
  std::string cur;
  size_t i = 0;
  while (i <= text.size()) {
    uint32_t cp = 0;
    bool at_end = i == text.size();
    if (!at_end) cp = utf8_decode(text, i);
    if (at_end || is_space_cp(cp) || is_punct_cp(cp)) {
      if (!cur.empty()) {
        types.insert(cur);
        cur.clear();
      }
      if (at_end) break;
    } else {
      utf8_append(cur, lower_cp(cp));
    }
  }
  return types;
}

nlohmann::json CoverageRow::to_json() const {
  return nlohmann::json{{"context_pct", context_pct},
                        {"question_pct", question_pct},
                        {"context_types", context_types},
                        {"question_types", question_types}};
}

std::map<std::string, CoverageRow> vocab_coverage(
    const std::vector<RCExample>& examples,
    const std::map<std::string, std::set<std::string>>& vocab_by_lang) {
  std::map<std::string, std::set<std::string>> context_types;
  std::map<std::string, std::set<std::string>> question_types;
  for (const RCExample& e : examples) {
    if (!vocab_by_lang.count(e.language)) continue;
    auto ct = word_types(e.context);
    context_types[e.language].insert(ct.begin(), ct.end());
    auto qt = word_types(e.question);
    question_types[e.language].insert(qt.begin(), qt.end());
  }

  std::map<std::string, CoverageRow> out;
  for (const auto& [lang, vocab] : vocab_by_lang) {
    auto pct = [&](const std::set<std::string>& types) -> int64_t {
      if (types.empty()) return 0;
      uint64_t hit = 0;
      for (const std::string& t : types) hit += vocab.count(t);
      return std::llround(100.0 * static_cast<double>(hit) / static_cast<double>(types.size()));
    };
    CoverageRow row;
    row.context_types = context_types[lang].size();
    row.question_types = question_types[lang].size();
    row.context_pct = pct(context_types[lang]);
    row.question_pct = pct(question_types[lang]);
    out[lang] = row;
  }
  return out;
}

}  // namespace relq
