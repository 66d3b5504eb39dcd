#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "relq/normalize.hpp"
#include "relq/querify.hpp"

namespace relq {

struct Prediction {
  std::string example_id;
  std::optional<std::string> answer;  // nullopt == NIL

  nlohmann::json to_json() const;
  static Prediction from_json(const nlohmann::json& j);
};

std::vector<Prediction> read_predictions(const std::filesystem::path& path);
void write_predictions(const std::filesystem::path& path, const std::vector<Prediction>& preds);

struct EvalReport {
  uint64_t tp = 0;
  uint64_t predicted_nonnil = 0;
  uint64_t gold_nonnil = 0;
  uint64_t examples = 0;
  uint64_t defaulted_nil = 0;  // gold examples with no prediction, scored as NIL
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  nlohmann::json to_json() const;
};

// Span-level nil-aware scoring. A prediction is a true positive when it is
// non-NIL, the gold example is non-NIL, and its normalized form equals the
// normalized form of at least one gold answer. Precision divides by the
// number of non-NIL predictions, recall by the number of non-NIL gold
// examples; both are 0 when their denominator is 0. f1 is the exact
// harmonic mean, computed as 2*tp / (predicted_nonnil + gold_nonnil).
//
// Gold examples without a prediction are scored as NIL and counted in
// defaulted_nil. A prediction naming an unknown example id is fatal, as is
// more than one prediction for the same example.
EvalReport score(const std::vector<RCExample>& gold, const std::vector<Prediction>& preds,
                 bool case_sensitive = false);

enum class GroupKey { Pid, Language, TemplateId };

std::optional<GroupKey> parse_group_key(std::string_view name);

// Partitions gold examples by the key and scores each partition separately.
std::map<std::string, EvalReport> score_by_group(const std::vector<RCExample>& gold,
                                                 const std::vector<Prediction>& preds,
                                                 GroupKey key, bool case_sensitive = false);

}  // namespace relq
