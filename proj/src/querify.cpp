#include "relq/querify.hpp"

#include <algorithm>

#include "relq/io.hpp"
#include "relq/util.hpp"

namespace relq {

nlohmann::json RCExample::to_json() const {
  return nlohmann::json{{"id", id},
                        {"triple_id", triple_id},
                        {"template_id", template_id},
                        {"lang", language},
                        {"question", question},
                        {"context", context},
                        {"answers", answers},
                        {"is_negative", is_negative},
                        {"gender_defaulted", gender_defaulted}};
}

RCExample RCExample::from_json(const nlohmann::json& j) {
  RCExample e;
  e.id = j.at("id").get<std::string>();
  e.triple_id = j.at("triple_id").get<std::string>();
  e.template_id = j.at("template_id").get<std::string>();
  e.language = j.at("lang").get<std::string>();
  e.question = j.at("question").get<std::string>();
  e.context = j.at("context").get<std::string>();
  e.answers = j.at("answers").get<std::vector<std::string>>();
  e.is_negative = j.at("is_negative").get<bool>();
  e.gender_defaulted = j.value("gender_defaulted", false);
  return e;
}

nlohmann::json QuerifyCounts::to_json() const {
  return nlohmann::json{{"examples", examples},
                        {"positives", positives},
                        {"negatives", negatives},
                        {"skipped_no_template", skipped_no_template},
                        {"gender_defaulted", gender_defaulted}};
}

std::vector<RCExample> querify_dataset(
    const std::vector<ContextRecord>& contexts, const Kb& kb,
    const std::map<std::pair<std::string, std::string>, const PageDoc*>& pages_by_qid_lang,
    const TemplateSet& templates, const AgreementTable& agreement, const PronounTable& pronouns,
    QuerifyCounts& counts) {
  std::vector<RCExample> examples;
  std::map<std::pair<std::string, std::string>, GenderClass> gender_cache;
  std::map<std::pair<std::string, std::string>, size_t> negative_ordinal;

  for (const ContextRecord& ctx : contexts) {
    std::string e1 = entity1_of_triple(ctx.triple_id);
    std::string pid = pid_of_triple(ctx.triple_id);

    const auto* tmpls = templates.find(pid, ctx.language);
    if (tmpls == nullptr || tmpls->empty()) {
      ++counts.skipped_no_template;
      continue;
    }

    const KBEntity* entity = kb.find(e1);
    const std::string* label = entity ? entity->label(ctx.language) : nullptr;
    if (label == nullptr) {
      throw FatalError("querify", "no label for " + e1 + " in " + ctx.language +
                                      " (triple " + ctx.triple_id + ")");
    }

    auto cache_key = std::make_pair(e1, ctx.language);
    auto git = gender_cache.find(cache_key);
    if (git == gender_cache.end()) {
      auto pit = pages_by_qid_lang.find(cache_key);
      const PageDoc* page = pit == pages_by_qid_lang.end() ? nullptr : pit->second;
      git = gender_cache.emplace(cache_key, infer_gender(e1, ctx.language, kb, page, pronouns)).first;
    }
    GenderClass gender = git->second;

    std::string kind = "p";
    if (ctx.is_negative()) {
      size_t ordinal = negative_ordinal[{ctx.triple_id, ctx.language}]++;
      kind = "n" + std::to_string(ordinal);
    }

    for (const Template* tmpl : *tmpls) {
      RCExample e;
      e.triple_id = ctx.triple_id;
      e.template_id = tmpl->template_id;
      e.language = ctx.language;
      e.question = instantiate(*tmpl, *label, gender, agreement);
      e.context = ctx.sentence;
      e.is_negative = ctx.is_negative();
      if (!e.is_negative) e.answers = *ctx.answers;
      bool uses_agreement = tmpl->pattern.find("{art}") != std::string::npos ||
                            tmpl->pattern.find("{fill}") != std::string::npos;
      e.gender_defaulted = uses_agreement && gender == GenderClass::Unknown;
      e.id = ctx.triple_id + "|" + ctx.language + "|" + kind + "|" + tmpl->template_id;

      if (e.gender_defaulted) ++counts.gender_defaulted;
      if (e.is_negative) {
        ++counts.negatives;
      } else {
        ++counts.positives;
      }
      ++counts.examples;
      examples.push_back(std::move(e));
    }
  }

  std::sort(examples.begin(), examples.end(), [](const RCExample& a, const RCExample& b) {
    if (a.triple_id != b.triple_id) return a.triple_id < b.triple_id;
    if (a.template_id != b.template_id) return a.template_id < b.template_id;
    return a.id < b.id;
  });
  return examples;
}

void write_examples(const std::filesystem::path& path, const std::vector<RCExample>& examples) {
  std::string out;
  for (const RCExample& e : examples) {
    out += e.to_json().dump();
    out += '\n';
  }
  write_text_file(path, out);
}

std::vector<RCExample> read_examples(const std::filesystem::path& path) {
  std::vector<RCExample> out;
  for_each_line(path, [&](size_t lineno, const std::string& line) {
    if (line.empty()) return;
    try {
      out.push_back(RCExample::from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw FatalError("querify", "bad example record at " + path.string() + ":" +
                                      std::to_string(lineno) + ": " + e.what());
    }
  });
  return out;
}

}  // namespace relq
