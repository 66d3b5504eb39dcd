#include "relq/baselines.hpp"

#include "relq/util.hpp"

namespace relq {

std::vector<Prediction> oracle_predict(const std::vector<RCExample>& gold) {
  std::vector<Prediction> preds;
  preds.reserve(gold.size());
  for (const RCExample& e : gold) {
    Prediction p;
    p.example_id = e.id;
    if (!e.answers.empty()) p.answer = e.answers.front();
    preds.push_back(std::move(p));
  }
  return preds;
}

std::vector<Prediction> nil_predict(const std::vector<RCExample>& gold) {
  std::vector<Prediction> preds;
  preds.reserve(gold.size());
  for (const RCExample& e : gold) preds.push_back(Prediction{e.id, std::nullopt});
  return preds;
}

namespace {

bool starts_uppercase(std::string_view token) {
  if (token.empty()) return false;
  size_t i = 0;
  return is_upper_cp(utf8_decode(token, i));
}

std::optional<std::string> first_capitalized_span(const std::string& context,
                                                  const std::string& question) {
  std::vector<std::string> tokens = split_ws(context);
  std::string question_folded = fold_lower(question);

  size_t i = 0;
  while (i < tokens.size()) {
    if (!starts_uppercase(tokens[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < tokens.size() && starts_uppercase(tokens[j])) ++j;
    if (j - i >= 2) {
      std::string span = tokens[i];
      for (size_t k = i + 1; k < j; ++k) span += " " + tokens[k];
      if (fold_lower(span).size() > 0 &&
          question_folded.find(fold_lower(span)) == std::string::npos) {
        return span;
      }
    }
    i = j;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Prediction> heuristic_predict(const std::vector<RCExample>& examples) {
  std::vector<Prediction> preds;
  preds.reserve(examples.size());
  for (const RCExample& e : examples) {
    Prediction p;
    p.example_id = e.id;
    p.answer = first_capitalized_span(e.context, e.question);
    preds.push_back(std::move(p));
  }
  return preds;
}

}  // namespace relq
