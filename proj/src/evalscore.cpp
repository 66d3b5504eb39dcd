#include "relq/evalscore.hpp"

#include <algorithm>
#include <iostream>
#include <set>

#include "relq/io.hpp"
#include "relq/normalize.hpp"
#include "relq/util.hpp"

namespace relq {

nlohmann::json Prediction::to_json() const {
  nlohmann::json j{{"example_id", example_id}};
  if (answer.has_value()) {
    j["answer"] = *answer;
  } else {
    j["answer"] = nullptr;
  }
  return j;
}

Prediction Prediction::from_json(const nlohmann::json& j) {
  Prediction p;
  p.example_id = j.at("example_id").get<std::string>();
  if (j.contains("answer") && !j.at("answer").is_null()) {
    p.answer = j.at("answer").get<std::string>();
  }
  return p;
}

std::vector<Prediction> read_predictions(const std::filesystem::path& path) {
  std::vector<Prediction> out;
  for_each_line(path, [&](size_t lineno, const std::string& line) {
    if (line.empty()) return;
    try {
      out.push_back(Prediction::from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw FatalError("score", "bad prediction record at " + path.string() + ":" +
                                    std::to_string(lineno) + ": " + e.what());
    }
  });
  return out;
}

void write_predictions(const std::filesystem::path& path, const std::vector<Prediction>& preds) {
  std::string out;
  for (const Prediction& p : preds) {
    out += p.to_json().dump();
    out += '\n';
  }
  write_text_file(path, out);
}

nlohmann::json EvalReport::to_json() const {
  return nlohmann::json{{"tp", tp},
                        {"predicted_nonnil", predicted_nonnil},
                        {"gold_nonnil", gold_nonnil},
                        {"examples", examples},
                        {"defaulted_nil", defaulted_nil},
                        {"precision", precision},
                        {"recall", recall},
                        {"f1", f1}};
}

EvalReport score(const std::vector<RCExample>& gold, const std::vector<Prediction>& preds,
                 bool case_sensitive) {
  std::map<std::string, const RCExample*> gold_by_id;
  for (const RCExample& e : gold) gold_by_id.emplace(e.id, &e);

  std::map<std::string, const Prediction*> pred_by_id;
  for (const Prediction& p : preds) {
    if (!gold_by_id.count(p.example_id)) {
      throw FatalError("score", "unknown-example: " + p.example_id);
    }
    if (!pred_by_id.emplace(p.example_id, &p).second) {
      throw FatalError("score", "duplicate prediction for example: " + p.example_id);
    }
  }

  EvalReport r;
  r.examples = gold.size();
  for (const RCExample& e : gold) {
    bool gold_nonnil = !e.answers.empty();
    if (gold_nonnil) ++r.gold_nonnil;

    auto it = pred_by_id.find(e.id);
    if (it == pred_by_id.end()) {
      ++r.defaulted_nil;  // missing prediction scores as NIL
      continue;
    }
    const Prediction& p = *it->second;
    if (!p.answer.has_value()) continue;
    ++r.predicted_nonnil;
    if (!gold_nonnil) continue;

    std::vector<std::string> pred_bag = normalize_answer(*p.answer, case_sensitive);
    for (const std::string& a : e.answers) {
      if (pred_bag == normalize_answer(a, case_sensitive)) {
        ++r.tp;
        break;
      }
    }
  }

  r.precision = r.predicted_nonnil == 0
                    ? 0.0
                    : static_cast<double>(r.tp) / static_cast<double>(r.predicted_nonnil);
  r.recall =
      r.gold_nonnil == 0 ? 0.0 : static_cast<double>(r.tp) / static_cast<double>(r.gold_nonnil);
  // Exact harmonic mean of P and R on the integer counts.
  uint64_t denom = r.predicted_nonnil + r.gold_nonnil;
  r.f1 = denom == 0 ? 0.0 : 2.0 * static_cast<double>(r.tp) / static_cast<double>(denom);
  return r;
}

std::optional<GroupKey> parse_group_key(std::string_view name) {
  if (name == "pid") return GroupKey::Pid;
  if (name == "language" || name == "lang") return GroupKey::Language;
  if (name == "template" || name == "template_id") return GroupKey::TemplateId;
  return std::nullopt;
}

std::map<std::string, EvalReport> score_by_group(const std::vector<RCExample>& gold,
                                                 const std::vector<Prediction>& preds,
                                                 GroupKey key, bool case_sensitive) {
  auto group_of = [&](const RCExample& e) -> std::string {
    switch (key) {
      case GroupKey::Pid:
        return pid_of_triple(e.triple_id);
      case GroupKey::Language:
        return e.language;
      case GroupKey::TemplateId:
        return e.template_id;
    }
    return "";
  };

  std::map<std::string, std::vector<RCExample>> gold_groups;
  std::map<std::string, std::string> group_by_example;
  for (const RCExample& e : gold) {
    std::string g = group_of(e);
    gold_groups[g].push_back(e);
    group_by_example[e.id] = g;
  }

  std::map<std::string, std::vector<Prediction>> pred_groups;
  for (const Prediction& p : preds) {
    auto it = group_by_example.find(p.example_id);
    if (it == group_by_example.end()) {
      throw FatalError("score", "unknown-example: " + p.example_id);
    }
    pred_groups[it->second].push_back(p);
  }

  std::map<std::string, EvalReport> out;
  for (const auto& [group, gold_part] : gold_groups) {
    out[group] = score(gold_part, pred_groups[group], case_sensitive);
  }
  return out;
}

}  // namespace relq
